#include "qhopf/field.hpp"

#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::reduce(const Scalar& s) const {
  if (is_rational()) {
    Scalar r(s);
    r.canonicalize();
    return r;
  }
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num, den, inv;
  mpz_fdiv_r(num.get_mpz_t(), s.get_num_mpz_t(), p.get_mpz_t());
  mpz_fdiv_r(den.get_mpz_t(), s.get_den_mpz_t(), p.get_mpz_t());
  if (den == 0) throw NotInvertible("denominator vanishes in " + name());
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = num * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  const Scalar r = reduce(a);
  if (r == 0) throw NotInvertible("division by zero in " + name());
  return reduce(Scalar(1) / r);
}

Scalar Field::root_of_unity(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("root of unity of order 0");
  if (n == 1) return Scalar(1);
  if (is_rational()) {
    if (n == 2) return Scalar(-1);
    throw std::invalid_argument("no primitive " + std::to_string(n) + "-th root of unity in Q");
  }
  if ((p_ - 1) % n != 0) {
    throw std::invalid_argument("no primitive " + std::to_string(n) + "-th root of unity in " +
                                name());
  }
  auto power = [this](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  };
  // Prime divisors of n decide whether a candidate has exact order n.
  std::uint64_t rest = n;
  std::uint64_t primes[64];
  int np = 0;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      primes[np++] = d;
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes[np++] = rest;
  for (std::uint64_t g = 2; g < p_; ++g) {
    const std::uint64_t z = power(g, (p_ - 1) / n);
    bool exact = true;
    for (int i = 0; i < np; ++i) {
      if (power(z, n / primes[i]) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return Scalar(static_cast<unsigned long>(z));
  }
  throw std::invalid_argument("root of unity search failed");
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  const auto slash = text.find('/');
  auto check_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false)) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace qhopf
