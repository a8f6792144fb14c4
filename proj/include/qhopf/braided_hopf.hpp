#pragma once

#include <optional>

#include "qhopf/yd_rigid.hpp"

namespace qhopf {

// A Hopf algebra in the category of LL Yetter-Drinfeld modules, given by its structure maps
// in the coordinates of the carrier. Tensor powers flatten with the first factor slowest.
struct BraidedHopfAlgebra {
  YDModule carrier;
  LinearMap mult;     // B⊗B → B
  LinearMap unit;     // k → B
  LinearMap comult;   // B → B⊗B
  LinearMap counit;   // B → k
  LinearMap antipode;
  std::optional<LinearMap> antipode_inv;

  std::size_t dim() const noexcept { return carrier.dim(); }
};

// The mirror category keeps the monoidal structure and braids with c̃_{M,N} = c⁻¹_{N,M}.
enum class Braiding { standard, mirror };

// Tags: carrier, assoc, unit, (mal), (qca1), (qca2), (mc1), counit, (mc2), (qcc1), (qcc2),
// (by), bialgebra-unit, antipode, antipode-morphism.
VerificationReport verify_braided_hopf(const Ambient& A, const BraidedHopfAlgebra& B,
                                       Braiding braiding = Braiding::standard);

// The unit object k with trivial structure.
BraidedHopfAlgebra trivial_braided_hopf(const Ambient& A);

enum class BraidedVariant { op, cop, op_cop };
// Throws std::invalid_argument when the antipode inverse is missing.
BraidedHopfAlgebra braided_variant(const Ambient& A, const BraidedHopfAlgebra& B, BraidedVariant which);
// Category in which the variant is a Hopf algebra.
Braiding variant_braiding(BraidedVariant which);

// B* (left) or *B (right), built from σ*/*σ and transposes and cross-checked against the
// explicit pairing formulas; throws ConsistencyFailure when they disagree.
BraidedHopfAlgebra braided_dual(const Ambient& A, const BraidedHopfAlgebra& B, DualSide side);

// H with h ⊳ h' = h₁h'S(h₂).
HModule adjoint_module(const QuasiHopfAlgebra& H);
// h∘h' = X¹hS(x¹X²)αx²X³₁h'S(x³X³₂).
LinearMap h0_mult(const QuasiHopfAlgebra& H);
// The ⊳ action with the coaction that does not use an R-matrix.
YDModule h0_yd(const Ambient& A);
// (H, ∘, β) as an algebra in YD through h0_yd; runs without an R-matrix.
VerificationReport check_h0_algebra(const Ambient& A);

// H₀ with coaction R²⊗R¹⊳h; throws NotQT without an R-matrix.
BraidedHopfAlgebra build_H0(const Ambient& A);

struct H0Duals {
  BraidedHopfAlgebra left;   // H₀*
  BraidedHopfAlgebra right;  // *H₀
};
// Built from the explicit formulas in terms of R̄, f and ∘; each must equal braided_dual.
H0Duals h0_duals(const Ambient& A, const BraidedHopfAlgebra& H0);

struct ThetaH0 {
  CanonicalIso iso;           // H₀* → *H₀
  VerificationReport report;  // theta-u, theta-u-inverse, then the algebra/coalgebra checks
  bool triangular = false;
  bool plain_algebra = false;    // Θ∘m = m̄∘(Θ⊗Θ)
  bool plain_coalgebra = false;  // Δ̄∘Θ = (Θ⊗Θ)∘Δ
};
// For triangular R the plain morphism properties are asserted (tags theta-algebra, theta-coalgebra);
// otherwise the R-twisted forms are (tags theta-twisted-algebra, theta-twisted-coalgebra).
ThetaH0 theta_H0(const Ambient& A, const BraidedHopfAlgebra& H0, const H0Duals& D);

// H* with (h·φ)(h') = φ(S⁻¹(h₂)h'h₁), coaction R²⊗R¹·φ and the R-twisted convolution.
BraidedHopfAlgebra build_underline_Hstar(const Ambient& A);
// ⇀/↼ bimodule laws and the quasi-associativity of convolution, tags bimodule, (mbia1), (mbia2).
VerificationReport hstar_identities(const Ambient& A);

struct MuIso {
  YDMorphism map;  // *H₀ → H*^cop
  LinearMap inverse;
  VerificationReport report;
};
// μ(φ) = g¹⇀φ↼S⁻¹(g²); throws NotTriangular. Tags mu-inverse, mu-morphism, mu-algebra,
// mu-unit, mu-coalgebra, mu-counit, and chain for the composite with Θ.
MuIso mu_iso(const Ambient& A, const H0Duals& D, const BraidedHopfAlgebra& Hstar, const ThetaH0& theta);

}  // namespace qhopf
