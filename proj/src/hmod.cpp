#include "qhopf/hmod.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"

namespace qhopf {

LinearMap id_map(const Field& f, std::size_t d) { return LinearMap::identity(f, d); }

HModule make_module(const QuasiHopfAlgebra& H, Side side, const std::vector<LinearMap>& matrices) {
  if (matrices.size() != H.dim()) throw DimensionMismatch("one action matrix per basis element required");
  const std::size_t d = matrices.front().dst_dim();
  Tensor act(H.field(), {{"h", H.dim()}, {"v", d}, {"w", d}});
  for (std::size_t i = 0; i < H.dim(); ++i) {
    const auto& m = matrices[i];
    if (m.dst_dim() != d || m.src_dim() != d) throw DimensionMismatch("action matrices must be square");
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t w = 0; w < d; ++w) act.set_at({i, v, w}, H.field().reduce(m.get(w, v)));
  }
  return {side, d, std::move(act)};
}

HModule trivial_module(const QuasiHopfAlgebra& H, Side side) {
  Term t(H.sw());
  t.free("h", "a").eps("a").ident("v", "w", 1);
  return {side, 1, t.tensor().ordered({"h", "v", "w"})};
}

HModule regular_module(const QuasiHopfAlgebra& H, Side side) {
  const std::size_t n = H.dim();
  const Tensor& m = H.sw().mult_weight();
  // left: e_h·e_v;  right: e_v·e_h
  Tensor act = side == Side::left ? m.with_names({"h", "v", "w"}) : m.with_names({"v", "h", "w"}).ordered({"h", "v", "w"});
  return {side, n, std::move(act)};
}

LinearMap action_matrix(const QuasiHopfAlgebra& H, const HModule& M, const AlgebraElement& x) {
  Term t(H.sw());
  t.put(x, {"h"}).ident("i", "v", M.dim).act(M.action, "h", "v");
  return t.map({"v"}, {"i"});
}

LinearMap basis_action(const QuasiHopfAlgebra& H, const HModule& M, std::size_t i) {
  return action_matrix(H, M, H.basis(i));
}

VerificationReport verify_module(const QuasiHopfAlgebra& H, const HModule& M) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  Term l(sw), r(sw);
  l.ident("i", "v", M.dim).free("p", "a").free("q", "b");
  r.ident("i", "v", M.dim).free("p", "a").free("q", "b").mul({"a", "b"}).act(M.action, "a", "v");
  if (M.side == Side::left) {
    l.act(M.action, "b", "v").act(M.action, "a", "v");
  } else {
    l.act(M.action, "a", "v").act(M.action, "b", "v");
  }
  rep.expect_equal("representation", l.tensor(), r.tensor());
  rep.expect_equal("representation", action_matrix(H, M, H.one()), id_map(H.field(), M.dim), "unit");
  return rep;
}

HModule tensor_modules(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N) {
  if (M.side != N.side) throw DimensionMismatch("tensor product of modules on different sides");
  Term t(H.sw());
  t.free("h", "a").delta("a", "a1", "a2").ident("mi", "m", M.dim).act(M.action, "a1", "m");
  t.ident("ni", "n", N.dim).act(N.action, "a2", "n");
  Tensor act = t.tensor().ordered({"h", "mi", "ni", "m", "n"}).merged({"mi", "ni"}, "v").merged({"m", "n"}, "w");
  return {M.side, M.dim * N.dim, std::move(act)};
}

namespace {
LinearMap act3(const QuasiHopfAlgebra& H, const AlgebraElement& x, const HModule& U, const HModule& V,
               const HModule& W) {
  Term t(H.sw());
  t.put(x, {"X1", "X2", "X3"});
  t.ident("ui", "u", U.dim).act(U.action, "X1", "u");
  t.ident("vi", "v", V.dim).act(V.action, "X2", "v");
  t.ident("wi", "w", W.dim).act(W.action, "X3", "w");
  return t.map({"u", "v", "w"}, {"ui", "vi", "wi"});
}
}  // namespace

LinearMap associator(const QuasiHopfAlgebra& H, const HModule& U, const HModule& V, const HModule& W) {
  return act3(H, U.side == Side::left ? H.phi() : H.phi_inv(), U, V, W);
}

LinearMap associator_inv(const QuasiHopfAlgebra& H, const HModule& U, const HModule& V, const HModule& W) {
  return act3(H, U.side == Side::left ? H.phi_inv() : H.phi(), U, V, W);
}

DualData dual_module(const QuasiHopfAlgebra& H, const HModule& M, DualSide side) {
  if (M.side != Side::left) throw DimensionMismatch("duals are built for left modules");
  const Sweedler& sw = H.sw();
  const bool L = side == DualSide::left;
  Term a(sw);
  a.free("h", "a");
  if (L) a.S("a"); else a.Sinv("a");
  a.ident("j", "v", M.dim).act(M.action, "a", "v");
  HModule dual{Side::left, M.dim, a.tensor().ordered({"h", "v", "j"}).with_names({"h", "v", "w"})};

  Term e(sw), c(sw);
  e.put(H.alpha(), {"a"});
  c.put(H.beta(), {"a"});
  if (!L) {
    e.Sinv("a");
    c.Sinv("a");
  }
  e.ident("j", "v", M.dim).act(M.action, "a", "v");
  c.ident("i", "v", M.dim).act(M.action, "a", "v");
  if (L) {
    // ev(v^i ⊗ v_j) = (α·v_j)_i ;  coev(1) = Σ β·v_i ⊗ v^i
    return {std::move(dual), e.map({}, {"v", "j"}), c.map({"v", "i"}, {})};
  }
  // ev'(v_j ⊗ v^i) = (S⁻¹(α)·v_j)_i ;  coev'(1) = Σ v^i ⊗ S⁻¹(β)·v_i
  return {std::move(dual), e.map({}, {"j", "v"}), c.map({"i", "v"}, {})};
}

VerificationReport check_snakes(const QuasiHopfAlgebra& H, const HModule& V) {
  VerificationReport rep;
  const Field& f = H.field();
  const DualData L = dual_module(H, V, DualSide::left);
  const DualData R = dual_module(H, V, DualSide::right);
  const LinearMap I = id_map(f, V.dim);
  const LinearMap Id = id_map(f, V.dim);
  const HModule& Vs = L.dual;
  const HModule& sV = R.dual;
  rep.expect_equal("snake-left-1", I.kron(L.ev) * associator(H, V, Vs, V) * L.coev.kron(I), I);
  rep.expect_equal("snake-left-2", L.ev.kron(Id) * associator_inv(H, Vs, V, Vs) * Id.kron(L.coev), Id);
  rep.expect_equal("snake-right-1", R.ev.kron(I) * associator_inv(H, V, sV, V) * I.kron(R.coev), I);
  rep.expect_equal("snake-right-2", Id.kron(R.ev) * associator(H, sV, V, sV) * R.coev.kron(Id), Id);
  return rep;
}

LinearMap qt_braiding(const Ambient& A, const HModule& M, const HModule& N) {
  const QTStructure& qt = A.require_qt();
  Term t(A.sw());
  t.put(qt.R, {"R1", "R2"}).ident("mi", "m", M.dim).act(M.action, "R1", "m");
  t.ident("ni", "n", N.dim).act(N.action, "R2", "n");
  return t.map({"n", "m"}, {"mi", "ni"});
}

bool is_module_morphism(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N, const LinearMap& f) {
  if (f.src_dim() != M.dim || f.dst_dim() != N.dim) return false;
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (!(f * basis_action(H, M, i) == basis_action(H, N, i) * f)) return false;
  }
  return true;
}

HModule direct_sum(const HModule& M, const HModule& N) {
  if (M.side != N.side) throw DimensionMismatch("direct sum of modules on different sides");
  const std::size_t d = M.dim + N.dim;
  const std::size_t n = M.action.dim("h");
  Tensor act(M.action.field(), {{"h", n}, {"v", d}, {"w", d}});
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t v = 0; v < M.dim; ++v)
      for (std::size_t w = 0; w < M.dim; ++w) act.set_at({h, v, w}, M.action.at({h, v, w}));
    for (std::size_t v = 0; v < N.dim; ++v)
      for (std::size_t w = 0; w < N.dim; ++w) act.set_at({h, M.dim + v, M.dim + w}, N.action.at({h, v, w}));
  }
  return {M.side, d, std::move(act)};
}

HModule conjugate(const HModule& M, const LinearMap& P, const LinearMap& P_inv) {
  // action'[h] = P ρ(h) P⁻¹, in tensor form: v ↦ P⁻¹ (in), act, P (out).
  Tensor t = M.action.contract({"v"}, P_inv.transpose().as_weight(), {{"v", M.dim}});
  t = t.contract({"w"}, P.as_weight(), {{"w", M.dim}});
  return {M.side, M.dim, t.ordered({"h", "v", "w"})};
}

MonoidalOps<HModule> module_category(const QuasiHopfAlgebra& H) {
  MonoidalOps<HModule> C;
  C.dim = [](const HModule& m) { return m.dim; };
  C.tensor = [H](const HModule& a, const HModule& b) { return tensor_modules(H, a, b); };
  C.assoc = [H](const HModule& u, const HModule& v, const HModule& w) { return associator(H, u, v, w); };
  C.assoc_inv = [H](const HModule& u, const HModule& v, const HModule& w) { return associator_inv(H, u, v, w); };
  return C;
}

MonoidalOps<HModule> braided_module_category(const Ambient& A) {
  MonoidalOps<HModule> C = module_category(A.H);
  C.braid = [A](const HModule& m, const HModule& n) { return qt_braiding(A, m, n); };
  return C;
}

}  // namespace qhopf
