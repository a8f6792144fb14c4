#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qhopf/errors.hpp"
#include "qhopf/field.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf::detail {

struct RatArith {
  using value_type = mpq_class;
  static value_type zero() { return value_type(0); }
  static value_type one() { return value_type(1); }
  static bool is_zero(const value_type& x) { return sgn(x) == 0; }
  static value_type from(const Scalar& s) { return s; }
  static Scalar to(const value_type& v) { return v; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type inv(const value_type& a) { return value_type(1) / a; }
  // acc += a * b using a caller-owned scratch value
  static void addmul(value_type& acc, const value_type& a, const value_type& b, value_type& tmp) {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
};

struct ModArith {
  using value_type = std::uint64_t;
  std::uint64_t p;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  static bool is_zero(value_type x) { return x == 0; }
  value_type from(const Scalar& s) const {
    const unsigned long num = mpz_fdiv_ui(s.get_num_mpz_t(), p);
    const unsigned long den = mpz_fdiv_ui(s.get_den_mpz_t(), p);
    if (den == 0) throw NotInvertible("denominator vanishes modulo " + std::to_string(p));
    return mul(num, inv(den));
  }
  static Scalar to(value_type v) { return Scalar(static_cast<unsigned long>(v)); }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return a * b % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    value_type r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  void addmul(value_type& acc, value_type a, value_type b, value_type&) const {
    acc = (acc + a * b) % p;
  }
};

template <class A>
using Vec = std::vector<typename A::value_type>;

template <class Fn>
decltype(auto) with_arith(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(RatArith{});
  return fn(ModArith{f.modulus()});
}

template <class A>
Vec<A>& vec(Storage& s) {
  return std::get<Vec<A>>(s);
}
template <class A>
const Vec<A>& vec(const Storage& s) {
  return std::get<Vec<A>>(s);
}

inline Storage make_storage(const Field& f, std::size_t n) {
  if (f.is_rational()) return Storage(std::vector<mpq_class>(n));
  return Storage(std::vector<std::uint64_t>(n, 0));
}

}  // namespace qhopf::detail
