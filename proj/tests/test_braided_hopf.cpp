#include <doctest.h>

#include "qhopf/braided_hopf.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"

using namespace qhopf;

namespace {

const std::vector<std::string> kQT = {"kZ2", "kZ2_Rt", "sweedler4_Rtri", "dZ2"};

void require_pass(const VerificationReport& r) { CHECK_MESSAGE(r.all_passed(), r.first_failure()); }

// kZ2 with the group Hopf structure: basis {1, g}.
void check_group_hopf(const BraidedHopfAlgebra& B) {
  REQUIRE(B.dim() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK(B.mult.get(c, a * 2 + b) == (c == (a ^ b) ? 1 : 0));
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(B.unit.get(a, 0) == (a == 0 ? 1 : 0));
    CHECK(B.counit.get(0, a) == 1);
    for (std::size_t c = 0; c < 2; ++c) CHECK(B.antipode.get(c, a) == (c == a ? 1 : 0));
    for (std::size_t k = 0; k < 4; ++k) CHECK(B.comult.get(k, a) == (k == a * 3 ? 1 : 0));
  }
  // Trivial coaction 1⊗h.
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t h = 0; h < 2; ++h)
      for (std::size_t w = 0; w < 2; ++w) CHECK(B.carrier.coaction.at({v, h, w}) == (h == 0 && v == w ? 1 : 0));
}

}  // namespace

TEST_CASE("H0 over commutative kZ2 is the group Hopf algebra") {
  for (const char* name : {"kZ2", "kZ2_Rt"}) {
    CAPTURE(name);
    const Ambient A = builtin(name);
    check_group_hopf(build_H0(A));
  }
}

TEST_CASE("no R-matrix: only the algebra part of H0 exists") {
  const Ambient A = builtin("H2");
  require_pass(check_h0_algebra(A));
  CHECK_THROWS_AS(build_H0(A), NotQT);
}

TEST_CASE("unit object and H0 axioms") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : kQT) {
      CAPTURE(name);
      const Ambient A = builtin(name, f);
      require_pass(verify_braided_hopf(A, trivial_braided_hopf(A)));
      require_pass(check_h0_algebra(A));
      const BraidedHopfAlgebra H0 = build_H0(A);
      const VerificationReport r = verify_braided_hopf(A, H0);
      CHECK(r.has("(by)"));
      require_pass(r);
    }
}

TEST_CASE("op/cop variants, duals, Θ and μ") {
  const Field f = Field::prime(101);
  for (const std::string& name : kQT) {
    CAPTURE(name);
    const Ambient A = builtin(name, f);
    const BraidedHopfAlgebra H0 = build_H0(A);
    for (BraidedVariant v : {BraidedVariant::op, BraidedVariant::cop, BraidedVariant::op_cop})
      require_pass(verify_braided_hopf(A, braided_variant(A, H0, v), variant_braiding(v)));

    const H0Duals D = h0_duals(A, H0);
    require_pass(verify_braided_hopf(A, D.left));
    require_pass(verify_braided_hopf(A, D.right));
    CHECK(D.left.mult == braided_dual(A, H0, DualSide::left).mult);
    CHECK(D.right.comult == braided_dual(A, H0, DualSide::right).comult);

    const ThetaH0 th = theta_H0(A, H0, D);
    require_pass(th.report);
    require_pass(check_iso(A, th.iso));
    CHECK(th.triangular == (name != "dZ2"));

    const BraidedHopfAlgebra Hs = build_underline_Hstar(A);
    require_pass(verify_braided_hopf(A, Hs));
    require_pass(hstar_identities(A));

    if (th.triangular) {
      CHECK(th.report.has("theta-algebra"));
      const MuIso mu = mu_iso(A, D, Hs, th);
      require_pass(mu.report);
      CHECK((mu.inverse * mu.map.map).is_identity());
    } else {
      CHECK(th.report.has("theta-twisted-algebra"));
      CHECK_THROWS_AS(mu_iso(A, D, Hs, th), NotTriangular);
    }
  }
}

TEST_CASE("variants need an invertible antipode") {
  const Ambient A = builtin("kZ2");
  BraidedHopfAlgebra B = build_H0(A);
  B.antipode_inv.reset();
  CHECK_THROWS_AS(braided_variant(A, B, BraidedVariant::op), std::invalid_argument);
}

TEST_CASE("a broken multiplication is caught") {
  const Ambient A = builtin("sweedler4_Rtri", Field::prime(101));
  BraidedHopfAlgebra B = build_H0(A);
  B.mult = B.mult.scaled(2);
  CHECK_FALSE(verify_braided_hopf(A, B).passed("unit"));
}
