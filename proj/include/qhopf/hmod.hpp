#pragma once

#include <functional>
#include <vector>

#include "qhopf/quasitriangular.hpp"

namespace qhopf {

enum class Side { left, right };

// Finite-dimensional module; action[h, v, w] gives e_h·v_v (or v_v·e_h) = Σ_w action v_w.
struct HModule {
  Side side = Side::left;
  std::size_t dim = 0;
  Tensor action;
};

struct ModuleMorphism {
  HModule src, dst;
  LinearMap map;
};

enum class DualSide { left, right };  // V* and *V

struct DualData {
  HModule dual;
  LinearMap ev;    // V*⊗V → k  or  V⊗*V → k
  LinearMap coev;  // k → V⊗V*  or  k → *V⊗V
};

// matrices[i] is the d×d matrix of e_i acting on coordinate columns.
HModule make_module(const QuasiHopfAlgebra& H, Side side, const std::vector<LinearMap>& matrices);
HModule trivial_module(const QuasiHopfAlgebra& H, Side side);
HModule regular_module(const QuasiHopfAlgebra& H, Side side);
VerificationReport verify_module(const QuasiHopfAlgebra& H, const HModule& M);

// Matrix of x acting on M.
LinearMap action_matrix(const QuasiHopfAlgebra& H, const HModule& M, const AlgebraElement& x);
LinearMap basis_action(const QuasiHopfAlgebra& H, const HModule& M, std::size_t i);

HModule tensor_modules(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N);
// (U⊗V)⊗W → U⊗(V⊗W); both sides flatten to the same coordinates.
LinearMap associator(const QuasiHopfAlgebra& H, const HModule& U, const HModule& V, const HModule& W);
LinearMap associator_inv(const QuasiHopfAlgebra& H, const HModule& U, const HModule& V, const HModule& W);

DualData dual_module(const QuasiHopfAlgebra& H, const HModule& M, DualSide side);
VerificationReport check_snakes(const QuasiHopfAlgebra& H, const HModule& M);

// c_{M,N}(m⊗n) = R²·n ⊗ R¹·m.
LinearMap qt_braiding(const Ambient& A, const HModule& M, const HModule& N);

bool is_module_morphism(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N, const LinearMap& f);
HModule direct_sum(const HModule& M, const HModule& N);
// New basis: action' = P·action·P⁻¹.
HModule conjugate(const HModule& M, const LinearMap& P, const LinearMap& P_inv);

LinearMap id_map(const Field& f, std::size_t d);

// Coherence data of a monoidal category whose objects flatten to coordinate spaces.
template <class Obj>
struct MonoidalOps {
  std::function<std::size_t(const Obj&)> dim;
  std::function<Obj(const Obj&, const Obj&)> tensor;
  std::function<LinearMap(const Obj&, const Obj&, const Obj&)> assoc, assoc_inv;
  std::function<LinearMap(const Obj&, const Obj&)> braid;
};

template <class Obj>
bool pentagon_holds(const Field& f, const MonoidalOps<Obj>& C, const Obj& U, const Obj& V, const Obj& W,
                    const Obj& X) {
  const auto I = [&](const Obj& o) { return id_map(f, C.dim(o)); };
  const LinearMap lhs = C.assoc(U, V, C.tensor(W, X)) * C.assoc(C.tensor(U, V), W, X);
  const LinearMap rhs = I(U).kron(C.assoc(V, W, X)) * C.assoc(U, C.tensor(V, W), X) *
                        C.assoc(U, V, W).kron(I(X));
  return lhs == rhs;
}

template <class Obj>
bool hexagons_hold(const Field& f, const MonoidalOps<Obj>& C, const Obj& U, const Obj& V, const Obj& W) {
  const auto I = [&](const Obj& o) { return id_map(f, C.dim(o)); };
  const LinearMap h1l = C.assoc(V, W, U) * C.braid(U, C.tensor(V, W)) * C.assoc(U, V, W);
  const LinearMap h1r = I(V).kron(C.braid(U, W)) * C.assoc(V, U, W) * C.braid(U, V).kron(I(W));
  const LinearMap h2l = C.assoc_inv(W, U, V) * C.braid(C.tensor(U, V), W) * C.assoc_inv(U, V, W);
  const LinearMap h2r = C.braid(U, W).kron(I(V)) * C.assoc_inv(U, W, V) * I(U).kron(C.braid(V, W));
  return h1l == h1r && h2l == h2r;
}

// c_{U',V'}∘(f⊗g) = (g⊗f)∘c_{U,V}.
template <class Obj>
bool braiding_natural(const MonoidalOps<Obj>& C, const Obj& U, const Obj& V, const Obj& U2, const Obj& V2,
                      const LinearMap& fu, const LinearMap& gv) {
  return C.braid(U2, V2) * fu.kron(gv) == gv.kron(fu) * C.braid(U, V);
}

// a∘((f⊗g)⊗h) = (f⊗(g⊗h))∘a.
template <class Obj>
bool associator_natural(const MonoidalOps<Obj>& C, const Obj& U, const Obj& V, const Obj& W, const Obj& U2,
                        const Obj& V2, const Obj& W2, const LinearMap& f, const LinearMap& g,
                        const LinearMap& h) {
  const LinearMap fgh = f.kron(g).kron(h);
  return C.assoc(U2, V2, W2) * fgh == fgh * C.assoc(U, V, W);
}

MonoidalOps<HModule> module_category(const QuasiHopfAlgebra& H);
// Left modules over a QT algebra with the braiding c(u⊗v) = R²v⊗R¹u.
MonoidalOps<HModule> braided_module_category(const Ambient& A);

}  // namespace qhopf
