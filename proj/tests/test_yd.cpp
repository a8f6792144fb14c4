#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/yd.hpp"

using namespace qhopf;

namespace {

// Over kZ2 a left-left YD module is a ℤ₂-graded module: λ(v) = g^{deg v}⊗v.
YDModule graded(const QuasiHopfAlgebra& H, const LinearMap& g_action, std::vector<std::size_t> degree) {
  const Field& f = H.field();
  const std::size_t d = degree.size();
  const HModule M = make_module(H, Side::left, {LinearMap::identity(f, d), g_action});
  Tensor c(f, {{"v", d}, {"h", 2}, {"w", d}});
  for (std::size_t v = 0; v < d; ++v) c.set_at({v, degree[v], v}, 1);
  return make_yd(Flavor::LL, M, c);
}

std::vector<YDModule> all_flavors(const Ambient& A, const YDModule& M) {
  const YDModule lr = functor_F_inv(A, M);
  return {M, lr, functor_G_inv(A, lr), functor_K(A, M)};
}

}  // namespace

TEST_CASE("kZ2: graded modules and the braiding c(v⊗w) = g^{deg v}·w ⊗ v") {
  const Ambient A = builtin("kZ2");
  const QuasiHopfAlgebra& H = A.H;
  const Field& f = H.field();
  const YDModule V = graded(H, LinearMap::from_rows(f, {{1, 0}, {0, -1}}), {0, 1});
  CHECK(verify_yd(H, V).all_passed());
  const LinearMap c = yd_braiding(H, V, V);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(c.get(k, i * 2 + j) == (k == j * 2 + i ? (i && j ? -1 : 1) : 0));

  // g exchanging the two homogeneous components breaks the compatibility condition.
  const YDModule bad = graded(H, LinearMap::from_rows(f, {{0, 1}, {1, 0}}), {0, 1});
  CHECK_FALSE(verify_yd(H, bad).all_passed());
  CHECK_FALSE(is_yd_morphism(H, V, V, LinearMap::from_rows(f, {{0, 1}, {1, 0}})));
  CHECK(is_yd_morphism(H, V, V, LinearMap::from_rows(f, {{2, 0}, {0, 5}})));
}

TEST_CASE("QT embeddings braid with R") {
  for (const char* name : {"kZ2_Rt", "sweedler4_Rtri", "dZ2"}) {
    CAPTURE(name);
    const Ambient A = builtin(name, Field::prime(101));
    const auto mods = builtin_modules(name, A.H);
    for (const HModule& m : mods)
      for (const HModule& n : mods) {
        const YDModule M = qt_embed(A, m), N = qt_embed(A, n);
        CHECK(verify_yd(A.H, M).all_passed());
        CHECK(yd_braiding(A.H, M, N) == qt_braiding(A, m, n));
      }
  }
}

TEST_CASE("all four flavors: axioms, functor round trips and braidings") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const Ambient A = builtin(name, f);
      const QuasiHopfAlgebra& H = A.H;
      const auto ys = builtin_yd_modules(name, A);
      REQUIRE_FALSE(ys.empty());
      std::vector<std::vector<YDModule>> fl;
      for (const YDModule& M : ys) {
        if (M.dim() > 2) continue;
        CHECK(check_y3p(A, M).all_passed());
        fl.push_back(all_flavors(A, M));
        const auto& X = fl.back();
        for (const YDModule& x : X) {
          const VerificationReport r = verify_yd(H, x);
          CAPTURE(x.flavor);
          CHECK_MESSAGE(r.all_passed(), r.first_failure());
        }
        CHECK(functor_F(A, X[1]).coaction == M.coaction);
        CHECK(functor_F_inv_closed(A, M) == X[1].coaction);
        CHECK(functor_G(A, X[2]).coaction == X[1].coaction);
        CHECK(functor_G(A, X[2]).module.action == X[1].module.action);
        CHECK(functor_K_inv(A, X[3]).coaction == M.coaction);
      }
      const auto C = yd_category(H);
      const std::size_t k = std::min<std::size_t>(fl.size(), 2);
      for (std::size_t fi = 0; fi < 4; ++fi)
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) {
            const YDModule& X = fl[a][fi];
            const YDModule& Y = fl[b][fi];
            const YDModule XY = yd_tensor(H, X, Y);
            CHECK(verify_yd(H, XY).all_passed());
            const BraidingPair p = yd_braiding_pair(A, X, Y);
            CHECK(is_yd_morphism(H, XY, yd_tensor(H, Y, X), p.c));
            CHECK((p.c_inv * p.c).is_identity());
            CHECK(hexagons_hold(f, C, X, Y, fl[0][fi]));
          }
    }
}

TEST_CASE("LL and LR inverse braidings have closed forms") {
  const Ambient A = builtin("sweedler4_Rtri", Field::prime(101));
  const auto ys = builtin_yd_modules("sweedler4_Rtri", A);
  for (const YDModule& M : ys) {
    if (M.dim() > 2) continue;
    for (const YDModule& X : {M, functor_F_inv(A, M)}) {
      const LinearMap c = yd_braiding(A.H, X, X);
      CHECK((yd_braiding_inv_closed(A, X, X) * c).is_identity());
    }
  }
}

TEST_CASE("adjoint module when the reassociator is trivial") {
  for (const char* name : {"kZ2", "sweedler4_Rtri", "dZ2"}) {
    CAPTURE(name);
    const QuasiHopfAlgebra H = builtin_algebra(name);
    CHECK(verify_yd(H, adjoint_yd(H)).all_passed());
  }
}

TEST_CASE("direct sums and mixed flavors") {
  const Ambient A = builtin("kZ2_Rt");
  const auto ys = builtin_yd_modules("kZ2_Rt", A);
  const YDModule S = yd_direct_sum(ys[0], ys[1]);
  CHECK(S.dim() == ys[0].dim() + ys[1].dim());
  CHECK(verify_yd(A.H, S).all_passed());
  CHECK_THROWS_AS(yd_direct_sum(ys[0], functor_K(A, ys[0])), DimensionMismatch);
}
