#include <doctest.h>

#include <functional>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/quasi_hopf.hpp"

using namespace qhopf;

namespace {

// A commutative, cocommutative algebra of functions on ℤ_n, read pointwise. chi(i, s) is the
// value of basis vector i at the group point s.
struct FunctionModel {
  QuasiHopfAlgebra H;
  std::size_t n;
  std::function<Scalar(std::size_t, std::size_t)> chi;

  const Field& f() const { return H.field(); }
  std::size_t neg(std::size_t s) const { return (n - s) % n; }
  std::size_t add(std::size_t a, std::size_t b) const { return (a + b) % n; }

  Scalar eval(const AlgebraElement& x, std::vector<std::size_t> at) const {
    const Tensor& t = x.tensor();
    Scalar v = 0;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      const Scalar c = t.get(flat);
      if (c == 0) continue;
      Scalar term = c;
      const auto idx = t.multi_index(flat);
      for (std::size_t k = 0; k < idx.size(); ++k) term = f().mul(term, chi(idx[k], at[k]));
      v = f().add(v, term);
    }
    return v;
  }
  Scalar omega(std::size_t a, std::size_t b, std::size_t c) const { return eval(H.phi(), {a, b, c}); }
  Scalar inv(const Scalar& s) const { return f().inv(s); }
  Scalar alpha(std::size_t s) const { return eval(H.alpha(), {s}); }
  Scalar beta(std::size_t s) const { return eval(H.beta(), {s}); }
};

FunctionModel h2_model(const Field& f) {
  // basis {1, p}, p = (1 − g)/2 is the indicator of the nontrivial point
  return {builtin_algebra("H2", f), 2, [](std::size_t i, std::size_t s) { return Scalar(i == 0 || s == 1 ? 1 : 0); }};
}

FunctionModel cocycle_model(std::size_t n, long q, const Field& f) {
  return {cocycle_algebra(n, q, f), n, [](std::size_t i, std::size_t s) { return Scalar(i == s ? 1 : 0); }};
}

// Pointwise forms of the defining products for f, p and q.
void check_against_model(const FunctionModel& m) {
  const Field& F = m.f();
  const DrinfeldTwistData d = compute_drinfeld_twist(m.H);
  const PQElements pq = compute_pq_elements(m.H);
  auto A = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    return F.mul(m.omega(a, b, c), m.inv(m.omega(m.add(a, b), c, e)));
  };
  for (std::size_t s = 0; s < m.n; ++s)
    for (std::size_t t = 0; t < m.n; ++t) {
      CAPTURE(s);
      CAPTURE(t);
      const std::size_t st = m.add(s, t);
      const Scalar gamma = F.mul(A(m.neg(t), m.neg(s), s, t), F.mul(m.alpha(s), m.alpha(t)));
      const Scalar f = F.mul(F.mul(m.inv(m.omega(m.neg(st), st, m.neg(st))), gamma), m.beta(st));
      CHECK(m.eval(d.gamma, {s, t}) == gamma);
      CHECK(m.eval(d.f, {s, t}) == f);
      CHECK(F.mul(m.eval(d.f_inv, {s, t}), f) == 1);
      CHECK(m.eval(pq.p_R, {s, t}) == F.mul(m.inv(m.omega(s, t, m.neg(t))), m.beta(t)));
      CHECK(m.eval(pq.q_R, {s, t}) == F.mul(m.omega(s, t, m.neg(t)), m.alpha(m.neg(t))));
      CHECK(m.eval(pq.p_L, {s, t}) == F.mul(m.omega(m.neg(s), s, t), m.beta(m.neg(s))));
      CHECK(m.eval(pq.q_L, {s, t}) == F.mul(m.inv(m.omega(m.neg(s), s, t)), m.alpha(s)));
    }
}

}  // namespace

TEST_CASE("every builtin is a quasi-Hopf algebra over Q and F_101") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const QuasiHopfAlgebra H = builtin_algebra(name, f);
      const VerificationReport r = verify_quasi_bialgebra(H);
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
      const VerificationReport s = verify_antipode(H);
      CHECK_MESSAGE(s.all_passed(), s.first_failure());
      for (const char* tag : {"(q1)", "(q2)", "(q3)", "(q4)", "(q7)"}) CHECK(r.passed(tag));
      for (const char* tag : {"(q5)", "(q6)"}) CHECK(s.passed(tag));
    }
}

TEST_CASE("the H2 reassociator is a nontrivial 3-cocycle on Z2") {
  const FunctionModel m = h2_model(Field::rationals());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK(m.omega(a, b, c) == (a && b && c ? -1 : 1));
  CHECK(m.alpha(0) == 1);
  CHECK(m.alpha(1) == -1);
}

TEST_CASE("twist and p/q elements agree with the pointwise model") {
  SUBCASE("H2 over Q") { check_against_model(h2_model(Field::rationals())); }
  SUBCASE("H2 over F_101") { check_against_model(h2_model(Field::prime(101))); }
  SUBCASE("Z3 cocycles over F_103") {
    for (long q : {0L, 1L, 2L}) check_against_model(cocycle_model(3, q, Field::prime(103)));
  }
  SUBCASE("Z2 cocycle over Q") { check_against_model(cocycle_model(2, 1, Field::rationals())); }
}

TEST_CASE("twist and p/q identities hold on every builtin") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const QuasiHopfAlgebra H = builtin_algebra(name);
    const DrinfeldTwistData d = compute_drinfeld_twist(H);
    const VerificationReport t = check_drinfeld_twist(H, d);
    CHECK_MESSAGE(t.all_passed(), t.first_failure());
    for (const char* tag : {"(ca)", "(gdf)", "(l3a)", "(pf)"}) CHECK(t.passed(tag));
    const VerificationReport p = check_pq_elements(H, compute_pq_elements(H), d);
    CHECK_MESSAGE(p.all_passed(), p.first_failure());
    for (const char* tag : {"(qr1)", "(qr1a)", "(ql1a)", "(pqr)", "(pql)", "(pqla)", "(tpr2)"}) CHECK(p.passed(tag));
  }
}

TEST_CASE("variants and gauge twists stay quasi-Hopf") {
  const QuasiHopfAlgebra H = builtin_algebra("H2");
  for (const Variant v : {Variant::op, Variant::cop, Variant::op_cop}) {
    const QuasiHopfAlgebra V = make_variant(H, v);
    CHECK(verify_quasi_bialgebra(V).all_passed());
    CHECK(verify_antipode(V).all_passed());
  }
  const DrinfeldTwistData d = drinfeld_twist(H);
  const QuasiHopfAlgebra T = gauge_twist(H, make_gauge_twist(H, d.f, d.f_inv));
  CHECK(verify_quasi_bialgebra(T).all_passed());
  CHECK(verify_antipode(T).all_passed());
  CHECK(T.phi() == AlgebraElement::from_tensor(twisted_phi(H, d.f, d.f_inv).tensor()));
}

TEST_CASE("broken data is reported under the violated tag") {
  const QuasiHopfAlgebra H = builtin_algebra("kZ2");
  AlgebraElement g(H.field(), 2, 1);
  g.set({1}, 1);
  // β = g is central and grouplike, so only X¹βS(X²)αX³ = 1 breaks.
  const QuasiHopfAlgebra bad = make_quasi_hopf("bad", H.structure(), H.phi(), H.alpha(), g);
  const VerificationReport r = verify_antipode(bad);
  CHECK_FALSE(r.passed("(q6)"));
  CHECK(r.passed("(q5)"));
  AlgebraElement phi = H.phi().scaled(Scalar(2));
  const QuasiHopfAlgebra bad2 = make_quasi_hopf("bad2", H.structure(), phi, H.alpha(), H.beta());
  const VerificationReport s = verify_quasi_bialgebra(bad2);
  CHECK_FALSE(s.passed("(q4)"));
  CHECK_FALSE(s.passed("(q7)"));
}
