#include "qhopf/quasi_hopf.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"
#include "util.hpp"

namespace qhopf {

using detail::expect;

QuasiHopfAlgebra::QuasiHopfAlgebra(std::string name, std::shared_ptr<const AlgebraStructure> s,
                                   AlgebraElement phi, AlgebraElement phi_inv, AlgebraElement alpha,
                                   AlgebraElement beta)
    : name_(std::move(name)),
      s_(std::move(s)),
      sw_(s_),
      phi_(std::move(phi)),
      phi_inv_(std::move(phi_inv)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  if (!s_->antipode || !s_->antipode_inv) throw Error("quasi-Hopf algebra needs S and S^-1");
  if (phi_.legs() != 3 || phi_inv_.legs() != 3) throw DimensionMismatch("reassociator must have 3 legs");
  if (alpha_.legs() != 1 || beta_.legs() != 1) throw DimensionMismatch("alpha and beta must have 1 leg");
}

QuasiHopfAlgebra make_quasi_hopf(std::string name, AlgebraStructure s, AlgebraElement phi,
                                 AlgebraElement alpha, AlgebraElement beta,
                                 std::optional<AlgebraElement> phi_inv) {
  auto sp = std::make_shared<const AlgebraStructure>(std::move(s));
  Sweedler sw(sp);
  AlgebraElement inv = sw.invert(phi);
  if (phi_inv && !(*phi_inv == inv)) throw ConsistencyFailure("supplied phi_inv is not the inverse of phi");
  return QuasiHopfAlgebra(std::move(name), sp, std::move(phi), std::move(inv), std::move(alpha),
                          std::move(beta));
}

AlgebraStructure reduce_structure(const AlgebraStructure& s, const Field& f) {
  AlgebraStructure r;
  r.field = f;
  r.n = s.n;
  r.basis = s.basis;
  r.mult = detail::convert(s.mult, f);
  r.unit = detail::convert(s.unit, f);
  r.comult = detail::convert(s.comult, f);
  r.counit = detail::convert(s.counit, f);
  if (s.antipode) r.antipode = detail::convert(*s.antipode, f);
  if (s.antipode_inv) r.antipode_inv = detail::convert(*s.antipode_inv, f);
  return r;
}

AlgebraElement reduce_element(const AlgebraElement& x, const Field& f) {
  return AlgebraElement::from_tensor(detail::convert(x.tensor(), f));
}

QuasiHopfAlgebra over_field(const QuasiHopfAlgebra& H, const Field& f) {
  if (H.field() == f) return H;
  auto sp = std::make_shared<const AlgebraStructure>(reduce_structure(H.structure(), f));
  return QuasiHopfAlgebra(H.name(), sp, reduce_element(H.phi(), f), reduce_element(H.phi_inv(), f),
                          reduce_element(H.alpha(), f), reduce_element(H.beta(), f));
}

VerificationReport verify_quasi_bialgebra(const QuasiHopfAlgebra& H) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  const auto& phi = H.phi();
  const auto& phinv = H.phi_inv();

  {
    Term l(sw), r(sw);
    l.free("i", "a").free("j", "b").free("k", "c").mul({"a", "b"}).mul({"a", "c"});
    r.free("i", "a").free("j", "b").free("k", "c").mul({"b", "c"}).mul({"a", "b"});
    rep.expect_equal("assoc", l.tensor(), r.tensor());
    Term u(sw), v(sw), id(sw);
    u.one("u").free("i", "a").mul({"u", "a"}, "a");
    v.free("i", "a").one("u").mul({"a", "u"});
    id.free("i", "a");
    rep.expect_equal("unit", u.tensor(), id.tensor(), "1·a");
    rep.expect_equal("unit", v.tensor(), id.tensor(), "a·1");
  }
  {
    Term l(sw), r(sw);
    l.free("i", "a").free("j", "b").mul({"a", "b"}).delta("a", "x", "y");
    r.free("i", "a").free("j", "b").delta("a", "x", "y").delta("b", "z", "w").mul({"x", "z"}).mul({"y", "w"});
    rep.expect_equal("delta-hom", l.tensor(), r.tensor());
    expect(rep, "delta-hom", sw.coproduct_at(H.one(), 0), H.one(2), "unit");
    Term e1(sw), e2(sw);
    e1.free("i", "a").free("j", "b").mul({"a", "b"}).eps("a");
    e2.free("i", "a").free("j", "b").eps("a").eps("b");
    rep.expect_equal("eps-hom", e1.tensor(), e2.tensor());
    rep.add("eps-hom", sw.counit_value(H.one()) == 1, "eps(1) != 1");
  }
  expect(rep, "phi-inv", sw.multiply(phi, phinv), H.one(3), "phi·phi^-1");
  expect(rep, "phi-inv", sw.multiply(phinv, phi), H.one(3), "phi^-1·phi");

  {  // (id⊗Δ)Δ(h) Φ = Φ (Δ⊗id)Δ(h) written with Φ⁻¹ on the right
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "l1", "b").delta("b", "l2", "l3");
    r.free("h", "a").delta("a", "b", "l3").delta("b", "l1", "l2");
    r.put(phi, {"X1", "X2", "X3"}).put(phinv, {"x1", "x2", "x3"});
    r.mul({"X1", "l1", "x1"}, "l1").mul({"X2", "l2", "x2"}, "l2").mul({"X3", "l3", "x3"}, "l3");
    rep.expect_equal("(q1)", l.tensor(), r.tensor());
  }
  {
    Term id(sw), l(sw), r(sw);
    id.free("h", "a");
    l.free("h", "a").delta("a", "a", "b").eps("b");
    r.free("h", "a").delta("a", "b", "a").eps("b");
    rep.expect_equal("(q2)", l.tensor(), id.tensor(), "(id⊗ε)Δ");
    rep.expect_equal("(q2)", r.tensor(), id.tensor(), "(ε⊗id)Δ");
  }
  {
    const AlgebraElement lhs = sw.multiply(
        {sw.embed(phi, {2, 3, 4}, 4), sw.coproduct_at(phi, 1), sw.embed(phi, {1, 2, 3}, 4)});
    const AlgebraElement rhs = sw.multiply(sw.coproduct_at(phi, 2), sw.coproduct_at(phi, 0));
    expect(rep, "(q3)", lhs, rhs);
  }
  expect(rep, "(q4)", sw.counit_at(phi, 1), H.one(2));
  expect(rep, "(q7)", sw.counit_at(phi, 0), H.one(2), "(ε⊗id⊗id)Φ");
  expect(rep, "(q7)", sw.counit_at(phi, 2), H.one(2), "(id⊗id⊗ε)Φ");
  return rep;
}

VerificationReport verify_antipode(const QuasiHopfAlgebra& H) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  const auto& a = H.alpha();
  const auto& b = H.beta();

  rep.expect_equal("S-inverse", H.S() * H.S_inv(), LinearMap::identity(H.field(), H.dim()), "S∘S^-1");
  rep.expect_equal("S-inverse", H.S_inv() * H.S(), LinearMap::identity(H.field(), H.dim()), "S^-1∘S");
  rep.merge(map_algebra(H.S(), H.structure(), H.structure(), true));
  {
    Term l(sw), r(sw);
    l.free("h", "a").S("a").eps("a");
    r.free("h", "a").eps("a");
    rep.expect_equal("eps-S", l.tensor(), r.tensor());
  }
  rep.add("eps-alpha-beta", H.field().equal(sw.counit_value(a) * sw.counit_value(b), 1),
          "eps(alpha)eps(beta) != 1");
  {
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "x", "y").S("x").rmul("x", a).mul({"x", "y"});
    r.free("h", "a").eps("a").put(a, {"x"});
    rep.expect_equal("(q5)", l.tensor(), r.tensor(), "S(h1)αh2");
    Term l2(sw), r2(sw);
    l2.free("h", "a").delta("a", "x", "y").S("y").rmul("x", b).mul({"x", "y"});
    r2.free("h", "a").eps("a").put(b, {"x"});
    rep.expect_equal("(q5)", l2.tensor(), r2.tensor(), "h1βS(h2)");
  }
  {
    Term l(sw);
    l.put(H.phi(), {"X1", "X2", "X3"}).S("X2").rmul("X1", b).mul({"X1", "X2"}).rmul("X1", a).mul({"X1", "X3"});
    expect(rep, "(q6)", l.element({"X1"}), H.one(), "X1βS(X2)αX3");
    Term r(sw);
    r.put(H.phi_inv(), {"x1", "x2", "x3"}).S("x1").S("x3").rmul("x1", a).mul({"x1", "x2"}).rmul("x1", b).mul(
        {"x1", "x3"});
    expect(rep, "(q6)", r.element({"x1"}), H.one(), "S(x1)αx2βS(x3)");
  }
  return rep;
}

VerificationReport map_algebra(const LinearMap& m, const AlgebraStructure& A, const AlgebraStructure& B,
                               bool anti) {
  VerificationReport rep;
  const std::string tag = anti ? "S-anti" : "algebra-map";
  if (m.src_dim() != A.n || m.dst_dim() != B.n) throw DimensionMismatch("map_algebra: shape");
  auto sa = std::make_shared<const AlgebraStructure>(A);
  auto sb = std::make_shared<const AlgebraStructure>(B);
  Sweedler swa(sa), swb(sb);
  Tensor t = Tensor::outer(swa.free("i", "a"), swa.free("j", "b"));
  const Tensor lhs = swa.apply(swa.mul(t, "a", "b"), "a", m);
  Tensor r = swa.apply(swa.apply(t, "a", m), "b", m);
  r = anti ? swb.mul(r, "b", "a", "a") : swb.mul(r, "a", "b");
  rep.expect_equal(tag, lhs, r, "products");
  rep.expect_equal(tag, swa.apply(swa.one("u"), "u", m), swb.one("u"), "unit");
  return rep;
}

namespace {

AlgebraStructure copy_structure(const QuasiHopfAlgebra& H) { return H.structure(); }

Tensor swap_last_two(const Tensor& t) { return t.ordered({"a", "c", "b"}).with_names({"a", "b", "c"}); }
Tensor swap_first_two(const Tensor& t) { return t.ordered({"b", "a", "c"}).with_names({"a", "b", "c"}); }

}  // namespace

QuasiHopfAlgebra make_variant(const QuasiHopfAlgebra& H, Variant which) {
  AlgebraStructure s = copy_structure(H);
  const Sweedler& sw = H.sw();
  auto Sinv = [&](const AlgebraElement& x) { return detail::apply(sw, H.S_inv(), x); };
  const AlgebraElement phi321 = H.phi().permuted({2, 1, 0});
  const AlgebraElement phinv321 = H.phi_inv().permuted({2, 1, 0});
  std::string suffix;
  AlgebraElement phi, phinv, alpha, beta;
  switch (which) {
    case Variant::op:
      s.mult = swap_first_two(s.mult);
      std::swap(s.antipode, s.antipode_inv);
      phi = H.phi_inv();
      phinv = H.phi();
      alpha = Sinv(H.beta());
      beta = Sinv(H.alpha());
      suffix = "^op";
      break;
    case Variant::cop:
      s.comult = swap_last_two(s.comult);
      std::swap(s.antipode, s.antipode_inv);
      phi = phinv321;
      phinv = phi321;
      alpha = Sinv(H.alpha());
      beta = Sinv(H.beta());
      suffix = "^cop";
      break;
    case Variant::op_cop:
      s.mult = swap_first_two(s.mult);
      s.comult = swap_last_two(s.comult);
      phi = phi321;
      phinv = phinv321;
      alpha = H.beta();
      beta = H.alpha();
      suffix = "^opcop";
      break;
  }
  return QuasiHopfAlgebra(H.name() + suffix, std::make_shared<const AlgebraStructure>(std::move(s)),
                          std::move(phi), std::move(phinv), std::move(alpha), std::move(beta));
}

GaugeTwist make_gauge_twist(const QuasiHopfAlgebra& H, AlgebraElement F, std::optional<AlgebraElement> F_inv) {
  const Sweedler& sw = H.sw();
  if (F.legs() != 2) throw DimensionMismatch("gauge twist needs 2 legs");
  if (!(sw.counit_at(F, 0) == H.one()) || !(sw.counit_at(F, 1) == H.one())) {
    throw ConsistencyFailure("gauge twist is not counital");
  }
  AlgebraElement inv = F_inv ? *F_inv : sw.invert(F);
  if (!(sw.multiply(F, inv) == H.one(2)) || !(sw.multiply(inv, F) == H.one(2))) {
    throw NotInvertible("F_inv is not the inverse of F");
  }
  return {std::move(F), std::move(inv)};
}

AlgebraElement twisted_phi(const QuasiHopfAlgebra& H, const AlgebraElement& F, const AlgebraElement& F_inv) {
  const Sweedler& sw = H.sw();
  return sw.multiply({sw.embed(F, {2, 3}, 3), sw.coproduct_at(F, 1), H.phi(), sw.coproduct_at(F_inv, 0),
                      sw.embed(F_inv, {1, 2}, 3)});
}

QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& H, const GaugeTwist& F) {
  const Sweedler& sw = H.sw();
  AlgebraStructure s = copy_structure(H);
  Term t(sw);
  t.free("h", "a").delta("a", "a1", "a2").put(F.F, {"F1", "F2"}).put(F.F_inv, {"G1", "G2"});
  t.mul({"F1", "a1", "G1"}).mul({"F2", "a2", "G2"});
  s.comult = t.tensor().ordered({"h", "F1", "F2"}).with_names({"a", "b", "c"});

  AlgebraElement phi = twisted_phi(H, F.F, F.F_inv);
  AlgebraElement phinv = sw.multiply({sw.embed(F.F, {1, 2}, 3), sw.coproduct_at(F.F, 0), H.phi_inv(),
                                      sw.coproduct_at(F.F_inv, 1), sw.embed(F.F_inv, {2, 3}, 3)});
  Term a(sw), b(sw);
  a.put(F.F_inv, {"G1", "G2"}).S("G1").rmul("G1", H.alpha()).mul({"G1", "G2"});
  b.put(F.F, {"F1", "F2"}).S("F2").rmul("F1", H.beta()).mul({"F1", "F2"});
  return QuasiHopfAlgebra(H.name() + "_F", std::make_shared<const AlgebraStructure>(std::move(s)),
                          std::move(phi), std::move(phinv), a.element({"G1"}), b.element({"F1"}));
}

bool same_structure(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) {
  const auto& x = a.structure();
  const auto& y = b.structure();
  return x.field == y.field && x.n == y.n && x.mult == y.mult && x.unit == y.unit && x.comult == y.comult &&
         x.counit == y.counit && a.S() == b.S() && a.S_inv() == b.S_inv() && a.phi() == b.phi() &&
         a.phi_inv() == b.phi_inv() && a.alpha() == b.alpha() && a.beta() == b.beta();
}

DrinfeldTwistData compute_drinfeld_twist(const QuasiHopfAlgebra& H) {
  const Sweedler& sw = H.sw();
  const auto& al = H.alpha();
  const auto& be = H.beta();
  const AlgebraElement A = sw.multiply(sw.embed(H.phi(), {1, 2, 3}, 4), sw.coproduct_at(H.phi_inv(), 0));
  const AlgebraElement B = sw.multiply(sw.coproduct_at(H.phi(), 0), sw.embed(H.phi_inv(), {1, 2, 3}, 4));

  Term g(sw);
  g.put(A, {"A1", "A2", "A3", "A4"}).S("A2").rmul("A2", al).mul({"A2", "A3"});
  g.S("A1").rmul("A1", al).mul({"A1", "A4"});
  const AlgebraElement gamma = g.element({"A2", "A1"});

  Term d(sw);
  d.put(B, {"B1", "B2", "B3", "B4"}).S("B4").rmul("B1", be).mul({"B1", "B4"});
  d.S("B3").rmul("B2", be).mul({"B2", "B3"});
  const AlgebraElement delta = d.element({"B1", "B2"});

  Term f(sw);
  f.put(H.phi_inv(), {"x1", "x2", "x3"}).delta("x1", "a", "b").S("a").S("b");
  f.S("x3").rmul("x2", be).mul({"x2", "x3"}, "c").delta("c", "c1", "c2");
  f.put(gamma, {"G1", "G2"}).mul({"b", "G1", "c1"}).mul({"a", "G2", "c2"});
  const AlgebraElement fe = f.element({"b", "a"});

  Term fi(sw);
  fi.put(H.phi_inv(), {"x1", "x2", "x3"}).S("x1").rmul("x1", al).mul({"x1", "x2"}, "c").delta("c", "c1", "c2");
  fi.delta("x3", "a", "b").S("a").S("b");
  fi.put(delta, {"D1", "D2"}).mul({"c1", "D1", "b"}).mul({"c2", "D2", "a"});
  const AlgebraElement finv = fi.element({"c1", "c2"});

  return {gamma, delta, fe, finv};
}

VerificationReport check_drinfeld_twist(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  expect(rep, "f-inverse", sw.multiply(d.f, d.f_inv), H.one(2), "f·f^-1");
  expect(rep, "f-inverse", sw.multiply(d.f_inv, d.f), H.one(2), "f^-1·f");
  {
    Term l(sw), r(sw);
    l.free("h", "a").S("a").delta("a", "l1", "l2").put(d.f, {"f1", "f2"}).put(d.f_inv, {"g1", "g2"});
    l.mul({"f1", "l1", "g1"}, "l1").mul({"f2", "l2", "g2"}, "l2");
    r.free("h", "a").delta("a", "l2", "l1").S("l1").S("l2");
    rep.expect_equal("(ca)", l.tensor(), r.tensor());
  }
  expect(rep, "(gdf)", sw.multiply(d.f, sw.coproduct_at(H.alpha(), 0)), d.gamma, "fΔ(α)=γ");
  expect(rep, "(gdf)", sw.multiply(sw.coproduct_at(H.beta(), 0), d.f_inv), d.delta, "Δ(β)f^-1=δ");
  {
    Term l(sw);
    l.put(d.f_inv, {"g1", "g2"}).rmul("g2", H.alpha()).S("g2").mul({"g1", "g2"});
    expect(rep, "(l3a)", l.element({"g1"}), H.beta(), "g1S(g2α)=β");
    Term r(sw);
    r.put(d.f, {"f1", "f2"}).lmul("f1", H.beta()).S("f1").mul({"f1", "f2"});
    expect(rep, "(l3a)", r.element({"f1"}), H.alpha(), "S(βf1)f2=α");
  }
  {
    Term r(sw);
    r.put(H.phi(), {"X1", "X2", "X3"}).S("X1").S("X2").S("X3");
    expect(rep, "(pf)", twisted_phi(H, d.f, d.f_inv), r.element({"X3", "X2", "X1"}));
  }
  return rep;
}

DrinfeldTwistData drinfeld_twist(const QuasiHopfAlgebra& H) {
  DrinfeldTwistData d = compute_drinfeld_twist(H);
  const VerificationReport rep = check_drinfeld_twist(H, d);
  if (!rep.all_passed()) throw ConsistencyFailure("Drinfeld twist: " + rep.first_failure());
  return d;
}

PQElements compute_pq_elements(const QuasiHopfAlgebra& H) {
  const Sweedler& sw = H.sw();
  Term pr(sw), qr(sw), pl(sw), ql(sw);
  pr.put(H.phi_inv(), {"x1", "x2", "x3"}).S("x3").rmul("x2", H.beta()).mul({"x2", "x3"});
  qr.put(H.phi(), {"X1", "X2", "X3"}).lmul("X3", H.alpha()).Sinv("X3").mul({"X3", "X2"});
  pl.put(H.phi(), {"X1", "X2", "X3"}).rmul("X1", H.beta()).Sinv("X1").mul({"X2", "X1"});
  ql.put(H.phi_inv(), {"x1", "x2", "x3"}).S("x1").rmul("x1", H.alpha()).mul({"x1", "x2"});
  return {pr.element({"x1", "x2"}), qr.element({"X1", "X3"}), pl.element({"X2", "X3"}),
          ql.element({"x1", "x3"})};
}

VerificationReport check_pq_elements(const QuasiHopfAlgebra& H, const PQElements& pq,
                                     const DrinfeldTwistData& d) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  {
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "a", "b").delta("a", "l1", "l2").put(pq.p_R, {"p1", "p2"}).S("b");
    l.mul({"l1", "p1"}).mul({"l2", "p2", "b"});
    r.free("h", "a").put(pq.p_R, {"l1", "l2"}).mul({"l1", "a"});
    rep.expect_equal("(qr1)", l.tensor(), r.tensor());
  }
  {
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "a", "b").Sinv("b").put(pq.q_R, {"q1", "q2"}).delta("a", "a1", "a2");
    l.mul({"q1", "a1"}).mul({"b", "q2", "a2"});
    r.free("h", "a").put(pq.q_R, {"q1", "q2"}).mul({"a", "q1"});
    rep.expect_equal("(qr1a)", l.tensor().ordered({"h", "q1", "b"}).with_names({"h", "l1", "l2"}),
                     r.tensor().ordered({"h", "a", "q2"}).with_names({"h", "l1", "l2"}));
  }
  {
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "a", "b").S("a").put(pq.q_L, {"q1", "q2"}).delta("b", "b1", "b2");
    l.mul({"a", "q1", "b1"}).mul({"q2", "b2"});
    r.free("h", "a").put(pq.q_L, {"q1", "q2"}).mul({"a", "q2"});
    rep.expect_equal("(ql1a)", l.tensor().ordered({"h", "a", "q2"}).with_names({"h", "l1", "l2"}),
                     r.tensor().ordered({"h", "q1", "a"}).with_names({"h", "l1", "l2"}));
  }
  {
    Term t(sw);
    t.put(pq.q_R, {"q1", "q2"}).delta("q1", "a", "b").S("q2").put(pq.p_R, {"p1", "p2"});
    t.mul({"a", "p1"}).mul({"b", "p2", "q2"});
    expect(rep, "(pqr)", t.element({"a", "b"}), H.one(2));
  }
  {
    Term t(sw);
    t.put(pq.p_L, {"p1", "p2"}).S("p1").put(pq.q_L, {"q1", "q2"}).delta("p2", "a", "b");
    t.mul({"p1", "q1", "a"}).mul({"q2", "b"});
    expect(rep, "(pql)", t.element({"p1", "q2"}), H.one(2));
  }
  {
    Term t(sw);
    t.put(pq.q_L, {"q1", "q2"}).delta("q2", "a", "b").Sinv("q1").put(pq.p_L, {"p1", "p2"});
    t.mul({"a", "p1", "q1"}).mul({"b", "p2"});
    expect(rep, "(pqla)", t.element({"a", "b"}), H.one(2));
  }
  {
    const AlgebraElement lhs = sw.multiply(
        {H.phi(), sw.coproduct_at(pq.p_R, 0), sw.embed(pq.p_R, {1, 2}, 3)});
    Term r(sw);
    r.put(H.phi_inv(), {"x1", "x2", "x3"}).delta("x1", "a", "b").put(pq.p_R, {"p1", "p2"});
    r.mul({"a", "p1"}).mul({"b", "p2"}).delta("b", "b1", "b2");
    r.put(d.f_inv, {"g1", "g2"}).S("x3").S("x2").mul({"b1", "g1", "x3"}).mul({"b2", "g2", "x2"});
    expect(rep, "(tpr2)", lhs, r.element({"a", "b1", "b2"}));
  }
  return rep;
}

PQElements pq_elements(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d) {
  PQElements pq = compute_pq_elements(H);
  const VerificationReport rep = check_pq_elements(H, pq, d);
  if (!rep.all_passed()) throw ConsistencyFailure("p/q elements: " + rep.first_failure());
  return pq;
}

QuasiHopfAlgebra normalize(const QuasiHopfAlgebra& H) {
  const Scalar e = H.sw().counit_value(H.alpha());
  if (H.field().equal(e, 1)) return H;
  if (H.field().is_zero(e)) throw ConsistencyFailure("eps(alpha) vanishes");
  return QuasiHopfAlgebra(H.name(), H.structure_ptr(), H.phi(), H.phi_inv(),
                          H.alpha().scaled(H.field().inv(e)), H.beta().scaled(e));
}

}  // namespace qhopf
