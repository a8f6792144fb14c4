#pragma once

#include <string>

#include "qhopf/hmod.hpp"

namespace qhopf {

// LL: left action, left coaction.  LR: left action, right coaction.
// RL: right action, left coaction. RR: right action, right coaction.
enum class Flavor { LL, LR, RL, RR };

std::string flavor_name(Flavor f);
Side action_side(Flavor f);
bool left_coaction(Flavor f);

// Coaction tensor legs: [v, h, w] for left coactions (λ(v) = Σ e_h ⊗ w),
// [v, w, h] for right coactions (ρ(v) = Σ w ⊗ e_h).
struct YDModule {
  Flavor flavor = Flavor::LL;
  HModule module;
  Tensor coaction;

  std::size_t dim() const noexcept { return module.dim; }
};

struct YDMorphism {
  YDModule src, dst;
  LinearMap map;
};

YDModule make_yd(Flavor flavor, HModule module, Tensor coaction);
// Coaction as a matrix M → H⊗M (left) or M → M⊗H (right).
LinearMap coaction_map(const YDModule& M);
YDModule yd_from_map(Flavor flavor, HModule module, const LinearMap& coaction);

VerificationReport verify_yd(const QuasiHopfAlgebra& H, const YDModule& M);
// (y3p) on all basis pairs, plus the coaction rebuilt from (syd) and (y3) for that rebuilt coaction.
VerificationReport check_y3p(const Ambient& A, const YDModule& M);

YDModule trivial_yd(const QuasiHopfAlgebra& H, Flavor flavor);
// Adjoint action h₁h′S(h₂) with coaction Δ; a YD module when Φ is trivial.
YDModule adjoint_yd(const QuasiHopfAlgebra& H);

YDModule yd_tensor(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N);
LinearMap yd_associator(const QuasiHopfAlgebra& H, const YDModule& U, const YDModule& V, const YDModule& W);
LinearMap yd_associator_inv(const QuasiHopfAlgebra& H, const YDModule& U, const YDModule& V,
                            const YDModule& W);

// M⊗N → N⊗M per flavor.
LinearMap yd_braiding(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N);
// N⊗M → M⊗N from the closed forms (LL and LR only).
LinearMap yd_braiding_inv_closed(const Ambient& A, const YDModule& M, const YDModule& N);

struct BraidingPair {
  LinearMap c, c_inv;
};
// Inverse by matrix inversion; for LL and LR the closed form must agree (ConsistencyFailure otherwise).
BraidingPair yd_braiding_pair(const Ambient& A, const YDModule& M, const YDModule& N);

// LR → LL and back.
YDModule functor_F(const Ambient& A, const YDModule& M);
YDModule functor_F_inv(const Ambient& A, const YDModule& M);
// Closed form of the F⁻¹ coaction, read off the inverse braiding against H.
Tensor functor_F_inv_closed(const Ambient& A, const YDModule& M);
// LL → RR and back.
YDModule functor_K(const Ambient& A, const YDModule& M);
YDModule functor_K_inv(const Ambient& A, const YDModule& M);
// RL → LR and back.
YDModule functor_G(const Ambient& A, const YDModule& M);
YDModule functor_G_inv(const Ambient& A, const YDModule& M);

// λ(m) = R²⊗R¹·m.
YDModule qt_embed(const Ambient& A, const HModule& M);

bool is_yd_morphism(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N, const LinearMap& f);
YDModule yd_direct_sum(const YDModule& M, const YDModule& N);
YDModule yd_conjugate(const YDModule& M, const LinearMap& P, const LinearMap& P_inv);

MonoidalOps<YDModule> yd_category(const QuasiHopfAlgebra& H);

}  // namespace qhopf
