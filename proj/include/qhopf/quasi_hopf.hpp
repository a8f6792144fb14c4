#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qhopf/algebra_element.hpp"
#include "qhopf/linear_map.hpp"
#include "qhopf/report.hpp"
#include "qhopf/sweedler.hpp"

namespace qhopf {

// (H, Δ, ε, Φ, S, α, β). Φ⁻¹ is cached; S⁻¹ lives in the structure.
class QuasiHopfAlgebra {
 public:
  QuasiHopfAlgebra(std::string name, std::shared_ptr<const AlgebraStructure> s, AlgebraElement phi,
                   AlgebraElement phi_inv, AlgebraElement alpha, AlgebraElement beta);

  const std::string& name() const noexcept { return name_; }
  const AlgebraStructure& structure() const noexcept { return *s_; }
  std::shared_ptr<const AlgebraStructure> structure_ptr() const noexcept { return s_; }
  const Sweedler& sw() const noexcept { return sw_; }
  const Field& field() const noexcept { return s_->field; }
  std::size_t dim() const noexcept { return s_->n; }

  const AlgebraElement& phi() const noexcept { return phi_; }
  const AlgebraElement& phi_inv() const noexcept { return phi_inv_; }
  const AlgebraElement& alpha() const noexcept { return alpha_; }
  const AlgebraElement& beta() const noexcept { return beta_; }
  const LinearMap& S() const { return *s_->antipode; }
  const LinearMap& S_inv() const { return *s_->antipode_inv; }

  AlgebraElement one() const { return sw_.unit_element(1); }
  AlgebraElement one(std::size_t legs) const { return sw_.unit_element(legs); }
  AlgebraElement basis(std::size_t i) const { return AlgebraElement::basis(field(), dim(), {i}); }

 private:
  std::string name_;
  std::shared_ptr<const AlgebraStructure> s_;
  Sweedler sw_;
  AlgebraElement phi_, phi_inv_, alpha_, beta_;
};

// Builds the algebra; Φ⁻¹ is computed by linear solve, or cross-checked when supplied.
QuasiHopfAlgebra make_quasi_hopf(std::string name, AlgebraStructure s, AlgebraElement phi,
                                 AlgebraElement alpha, AlgebraElement beta,
                                 std::optional<AlgebraElement> phi_inv = std::nullopt);

// Structure with a replaced field: constants are reduced into the new field.
AlgebraStructure reduce_structure(const AlgebraStructure& s, const Field& f);
AlgebraElement reduce_element(const AlgebraElement& x, const Field& f);
QuasiHopfAlgebra over_field(const QuasiHopfAlgebra& H, const Field& f);

VerificationReport verify_quasi_bialgebra(const QuasiHopfAlgebra& H);
VerificationReport verify_antipode(const QuasiHopfAlgebra& H);

// Checks that m is multiplicative and unital (or anti-multiplicative) from A to B.
VerificationReport map_algebra(const LinearMap& m, const AlgebraStructure& A, const AlgebraStructure& B,
                               bool anti = false);

enum class Variant { op, cop, op_cop };
QuasiHopfAlgebra make_variant(const QuasiHopfAlgebra& H, Variant which);

struct GaugeTwist {
  AlgebraElement F;
  AlgebraElement F_inv;
};
// Validates counitality and invertibility; computes F⁻¹ when absent.
GaugeTwist make_gauge_twist(const QuasiHopfAlgebra& H, AlgebraElement F,
                            std::optional<AlgebraElement> F_inv = std::nullopt);
QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& H, const GaugeTwist& F);
// Φ_F as an element of H⊗H⊗H (no algebra is built).
AlgebraElement twisted_phi(const QuasiHopfAlgebra& H, const AlgebraElement& F, const AlgebraElement& F_inv);
// Exact equality of every structure constant.
bool same_structure(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b);

struct DrinfeldTwistData {
  AlgebraElement gamma, delta, f, f_inv;
};
DrinfeldTwistData compute_drinfeld_twist(const QuasiHopfAlgebra& H);
VerificationReport check_drinfeld_twist(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d);
// compute + check; throws ConsistencyFailure.
DrinfeldTwistData drinfeld_twist(const QuasiHopfAlgebra& H);

struct PQElements {
  AlgebraElement p_R, q_R, p_L, q_L;
};
PQElements compute_pq_elements(const QuasiHopfAlgebra& H);
VerificationReport check_pq_elements(const QuasiHopfAlgebra& H, const PQElements& pq,
                                     const DrinfeldTwistData& d);
PQElements pq_elements(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d);

// Rescales to ε(α) = ε(β) = 1 keeping αβ-type products fixed.
QuasiHopfAlgebra normalize(const QuasiHopfAlgebra& H);

}  // namespace qhopf
