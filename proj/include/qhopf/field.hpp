#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qhopf {

// Exact scalar. Over a prime field the canonical representative in [0, p) is stored.
using Scalar = mpq_class;

bool is_prime(std::uint64_t n);

class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field(); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::string name() const;

  // Canonical representative of s in this field; throws NotInvertible when the
  // denominator vanishes mod p.
  Scalar reduce(const Scalar& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_zero(const Scalar& a) const { return reduce(a) == 0; }
  bool equal(const Scalar& a, const Scalar& b) const { return reduce(a - b) == 0; }

  // An element of multiplicative order exactly n; throws if none exists.
  Scalar root_of_unity(std::uint64_t n) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

std::string to_string(const Scalar& s);
// Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

}  // namespace qhopf
