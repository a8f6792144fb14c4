#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/hmod.hpp"

using namespace qhopf;

namespace {

// One-dimensional module of H2 or kZ2 on which the second basis vector acts by c.
HModule character(const QuasiHopfAlgebra& H, long c) {
  const Field& f = H.field();
  return make_module(H, Side::left,
                     {LinearMap::from_rows(f, {{Scalar(1)}}), LinearMap::from_rows(f, {{f.reduce(Scalar(c))}})});
}

Scalar scalar_of(const LinearMap& m) {
  REQUIRE(m.src_dim() == 1);
  REQUIRE(m.dst_dim() == 1);
  return m.get(0, 0);
}

}  // namespace

TEST_CASE("H2: associators on characters are the cocycle values") {
  const QuasiHopfAlgebra H = builtin_algebra("H2");
  // p = (1 − g)/2 acts by 0 on the trivial character and by 1 on the sign character.
  const HModule chi[2] = {character(H, 0), character(H, 1)};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const HModule ab = tensor_modules(H, chi[a], chi[b]);
      // characters multiply: p acts on χ_a⊗χ_b by a + b − 2ab
      CHECK(scalar_of(basis_action(H, ab, 1)) == a + b - 2 * a * b);
      for (int c = 0; c < 2; ++c) {
        const Scalar expect = (a && b && c) ? -1 : 1;
        CHECK(scalar_of(associator(H, chi[a], chi[b], chi[c])) == expect);
        CHECK(scalar_of(associator_inv(H, chi[a], chi[b], chi[c])) == expect);
      }
    }
  const auto C = module_category(H);
  for (int m = 0; m < 16; ++m)
    CHECK(pentagon_holds(H.field(), C, chi[m & 1], chi[(m >> 1) & 1], chi[(m >> 2) & 1], chi[(m >> 3) & 1]));
}

TEST_CASE("pentagon on higher-dimensional modules") {
  for (const std::string& name : {std::string("sweedler4_Rtri"), std::string("H2"), std::string("dZ2")}) {
    CAPTURE(name);
    const QuasiHopfAlgebra H = builtin_algebra(name, Field::prime(101));
    const auto mods = builtin_modules(name, H);
    REQUIRE(mods.size() >= 2);
    const HModule big = direct_sum(mods[0], mods.back());
    const auto C = module_category(H);
    CHECK(pentagon_holds(H.field(), C, big, mods[1], mods.back(), big));
  }
}

TEST_CASE("modules are validated") {
  const QuasiHopfAlgebra H = builtin_algebra("sweedler4_Rtri");
  for (const HModule& m : builtin_modules("sweedler4_Rtri", H)) CHECK(verify_module(H, m).all_passed());
  // x acting invertibly violates x² = 0
  const Field& f = H.field();
  const LinearMap one = LinearMap::from_rows(f, {{Scalar(1)}});
  const HModule bad = make_module(H, Side::left, {one, one, one, one});
  CHECK_FALSE(verify_module(H, bad).passed("representation"));
}

TEST_CASE("duals satisfy the snake identities") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const QuasiHopfAlgebra H = builtin_algebra(name, f);
      for (const HModule& m : builtin_modules(name, H)) {
        const VerificationReport r = check_snakes(H, m);
        CHECK_MESSAGE(r.all_passed(), r.first_failure());
        for (const char* tag : {"snake-left-1", "snake-left-2", "snake-right-1", "snake-right-2"}) CHECK(r.passed(tag));
      }
    }
}

TEST_CASE("kZ2_Rt: the braiding on characters is the sign bicharacter") {
  const Ambient A = builtin("kZ2_Rt");
  const HModule chi[2] = {character(A.H, 1), character(A.H, -1)};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(scalar_of(qt_braiding(A, chi[a], chi[b])) == (a && b ? -1 : 1));
  const auto B = braided_module_category(A);
  const HModule two = direct_sum(chi[0], chi[1]);
  CHECK(hexagons_hold(A.field(), B, two, chi[1], two));
}

TEST_CASE("morphisms, conjugation and naturality") {
  const QuasiHopfAlgebra H = builtin_algebra("sweedler4_Rtri");
  const auto mods = builtin_modules("sweedler4_Rtri", H);
  const HModule& M = mods.back();
  const Field& f = H.field();
  LinearMap P(f, M.dim, M.dim);
  for (std::size_t i = 0; i < M.dim; ++i)
    for (std::size_t j = 0; j < M.dim; ++j) P.set(i, j, Scalar(i == j ? 2 : (i < j ? 1 : 0)));
  const LinearMap Pi = *P.inverse();
  const HModule N = conjugate(M, P, Pi);
  CHECK(verify_module(H, N).all_passed());
  CHECK(is_module_morphism(H, M, N, P));
  CHECK(is_module_morphism(H, M, M, id_map(f, M.dim).scaled(Scalar(3))));
  const auto C = module_category(H);
  const LinearMap I = id_map(f, M.dim);
  CHECK(associator_natural(C, M, M, M, N, M, N, P, I, P));
  const Ambient A = builtin("sweedler4_Rtri");
  CHECK(braiding_natural(braided_module_category(A), M, M, N, M, P, I));
}
