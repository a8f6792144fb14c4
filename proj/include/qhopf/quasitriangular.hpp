#pragma once

#include <optional>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

struct QTStructure {
  AlgebraElement R, R_inv, u, u_inv;
  bool triangular = false;
};

VerificationReport verify_qt(const QuasiHopfAlgebra& H, const AlgebraElement& R);

// R⁻¹ by both closed forms and by linear solve.
struct RInverseRoutes {
  AlgebraElement closed1, closed2, solved;
};
RInverseRoutes r_inverse_routes(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R);
// Throws ConsistencyFailure when the routes disagree.
AlgebraElement r_inverse(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R);

struct UElements {
  AlgebraElement u, u_inv;
};
UElements compute_u(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R);
VerificationReport check_u(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const AlgebraElement& R,
                           const UElements& u);
UElements u_element(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const PQElements& pq,
                    const AlgebraElement& R);

bool is_triangular(const QuasiHopfAlgebra& H, const AlgebraElement& R, const AlgebraElement& R_inv);

// Throws NotQT when (qt1)-(qt4) fail, ConsistencyFailure on derived-element failures.
QTStructure make_qt(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const PQElements& pq,
                    const AlgebraElement& R);

// An algebra together with its derived records, computed once and shared.
struct Ambient {
  QuasiHopfAlgebra H;
  DrinfeldTwistData tw;
  PQElements pq;
  std::optional<QTStructure> qt;

  const Sweedler& sw() const noexcept { return H.sw(); }
  const Field& field() const noexcept { return H.field(); }
  std::size_t n() const noexcept { return H.dim(); }
  const QTStructure& require_qt() const;
};

Ambient make_ambient(QuasiHopfAlgebra H, std::optional<AlgebraElement> R = std::nullopt);
Ambient ambient_over(const Ambient& A, const Field& f);

}  // namespace qhopf
