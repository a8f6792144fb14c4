#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/quasitriangular.hpp"

using namespace qhopf;

namespace {

AlgebraElement vec(const QuasiHopfAlgebra& H, std::initializer_list<std::pair<std::size_t, long>> terms) {
  AlgebraElement x(H.field(), H.dim(), 1);
  for (auto [i, c] : terms) x.set({i}, H.field().reduce(Scalar(c)));
  return x;
}

const char* const kQT[] = {"kZ2", "kZ2_Rt", "sweedler4_Rtri", "dZ2"};

}  // namespace

TEST_CASE("R-matrices satisfy the quasitriangular axioms") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const char* name : kQT) {
      CAPTURE(name);
      const QuasiHopfAlgebra H = builtin_algebra(name, f);
      const VerificationReport r = verify_qt(H, *builtin_R(name, H));
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
      for (const char* tag : {"(qt1)", "(qt2)", "(qt3)", "(qt4)"}) CHECK(r.passed(tag));
    }
  CHECK_FALSE(builtin_R("H2", builtin_algebra("H2")).has_value());
}

TEST_CASE("the three routes to R inverse agree") {
  for (const char* name : kQT) {
    CAPTURE(name);
    const Ambient A = builtin(name);
    const RInverseRoutes routes = r_inverse_routes(A.H, A.pq, A.qt->R);
    CHECK(routes.closed1 == routes.solved);
    CHECK(routes.closed2 == routes.solved);
    CHECK(A.sw().multiply(A.qt->R, routes.solved) == A.H.one(2));
  }
}

TEST_CASE("kZ2_Rt: R is the sign bicharacter in the idempotent basis") {
  const Ambient A = builtin("kZ2_Rt");
  // e_s = (1 ± g)/2; the value of basis vector i ∈ {1, g} at the point s is (±1)^i.
  auto chi = [](std::size_t i, std::size_t s) { return i == 1 && s == 1 ? -1 : 1; };
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      Scalar v = 0;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) v += A.qt->R.coeff({i, j}) * chi(i, s) * chi(j, t);
      CHECK(v == (s && t ? -1 : 1));
    }
  CHECK(A.qt->triangular);
  CHECK(A.qt->R_inv == A.qt->R);
}

TEST_CASE("Drinfeld elements u of the builtins") {
  const Ambient k = builtin("kZ2");
  CHECK(k.qt->u == k.H.one());
  const Ambient rt = builtin("kZ2_Rt");
  // u(s) = R(s, −s) = (−1)^s, that is u = g.
  CHECK(rt.qt->u == vec(rt.H, {{1, 1}}));
  const Ambient sw = builtin("sweedler4_Rtri");
  // The nilpotent part of R contributes x² = 0 terms only.
  CHECK(sw.qt->u == vec(sw.H, {{1, 1}}));
  CHECK(sw.qt->R_inv == sw.qt->R.permuted({1, 0}));
  const Ambient d = builtin("dZ2");
  // u = Σ_a S(g^a)δ_a = δ_0 + δ_1 g, an involution.
  CHECK(d.qt->u == vec(d.H, {{0, 1}, {3, 1}}));
  CHECK(d.qt->u_inv == d.qt->u);
  CHECK_FALSE(d.qt->triangular);
  CHECK(d.qt->R_inv == d.qt->R);
}

TEST_CASE("u implements S squared") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const char* name : kQT) {
      CAPTURE(name);
      const Ambient A = builtin(name, f);
      const UElements u = compute_u(A.H, A.pq, A.qt->R);
      CHECK(u.u == A.qt->u);
      const VerificationReport r = check_u(A.H, A.tw, A.qt->R, u);
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
      for (const char* tag : {"u-inverse", "(sqina)", "S2-u", "(sext)", "(ext)"}) CHECK(r.passed(tag));
    }
}

TEST_CASE("a scaled R-matrix is rejected") {
  const QuasiHopfAlgebra H = builtin_algebra("kZ2");
  const AlgebraElement R = H.one(2).scaled(Scalar(2));
  CHECK_FALSE(verify_qt(H, R).passed("(qt2)"));
  CHECK_THROWS_AS(make_ambient(H, R), NotQT);
}
