#pragma once

#include <string>

#include "qhopf/yd.hpp"

namespace qhopf {

// Dual of an LL Yetter-Drinfeld module in dual coordinates.
// side = left:  M*, ev: M*⊗M → k, coev: k → M⊗M*.
// side = right: *M, ev: M⊗*M → k, coev: k → *M⊗M.
struct YDDualData {
  YDModule dual;
  LinearMap ev, coev;
  DualSide side = DualSide::left;
};

// The q̃/p relations used for the rigid structure, tags (fo1) and (fo2).
VerificationReport dual_pq_relations(const Ambient& A);

// Throws NotInYD when the dual fails its own YD, morphism or snake checks (check = true).
YDDualData yd_dual(const Ambient& A, const YDModule& M, DualSide side, bool check = true);
// Tags: dual-yd, ev-morphism, coev-morphism, snake-1, snake-2.
VerificationReport check_yd_dual(const Ambient& A, const YDModule& M, const YDDualData& D);

// ν*: N* → M* (left) or *ν: *N → *M (right) from ev/coev; throws ConsistencyFailure
// unless it equals the plain matrix transpose.
YDMorphism yd_transpose(const Ambient& A, const YDMorphism& nu, DualSide side);

enum class IsoKind { theta, theta_prime, Theta, gamma_r, gamma_l, sigma_star, star_sigma, phi_star };
std::string iso_kind_name(IsoKind k);

struct CanonicalIso {
  IsoKind kind;
  YDMorphism map, inverse;
};

// θ: M → (*M)* and θ′: M → *(M*), both the identity in dual coordinates.
CanonicalIso canonical_theta(const Ambient& A, const YDModule& M);
CanonicalIso canonical_theta_prime(const Ambient& A, const YDModule& M);
// Θ: M* → *M.
CanonicalIso canonical_Theta(const Ambient& A, const YDModule& M);

struct GammaPair {
  CanonicalIso right;  // M** → M
  CanonicalIso left;   // **M → M
};
GammaPair canonical_gamma(const Ambient& A, const YDModule& M);

struct SigmaTriple {
  CanonicalIso star;      // M*⊗N* → (M⊗N)*
  CanonicalIso star_left; // *M⊗*N → *(M⊗N)
  CanonicalIso phi;       // N*⊗M* → (M⊗N)*
};
// With composites = false the φ* composite and the self-checks of (M⊗N)* are skipped;
// both cost (dim M·dim N)³.
SigmaTriple canonical_sigma(const Ambient& A, const YDModule& M, const YDModule& N, bool composites = true);

// map∘inverse, inverse∘map and the YD morphism property of both.
VerificationReport check_iso(const Ambient& A, const CanonicalIso& iso);

// Standalone element identities (ufo), (ufox), (uf).
VerificationReport rigid_identities(const Ambient& A);

// On QT embeddings: Γ maps are u-actions and σ* uses R⁻¹ (tags co1, co2); skipped without R.
VerificationReport qt_canonical_forms(const Ambient& A, const HModule& M, const HModule& N);

}  // namespace qhopf
