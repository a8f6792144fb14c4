#include "qhopf/braided_hopf.hpp"

#include <stdexcept>

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"

namespace qhopf {

namespace {

LinearMap I(const Field& f, std::size_t d) { return id_map(f, d); }

bool colinear(const Ambient& A, const YDModule& src, const YDModule& dst, const LinearMap& f) {
  return coaction_map(dst) * f == I(A.field(), A.n()).kron(f) * coaction_map(src);
}

LinearMap vector_map(const AlgebraElement& x) {
  LinearMap v(x.field(), x.dim(), 1);
  for (std::size_t i = 0; i < x.dim(); ++i) v.set(i, 0, x.coeff({i}));
  return v;
}

LinearMap counit_map(const Ambient& A) {
  LinearMap e(A.field(), 1, A.n());
  const Tensor& c = A.sw().structure().counit;
  for (std::size_t i = 0; i < A.n(); ++i) e.set(0, i, c.get(i));
  return e;
}

// Weight consuming legs (x, y) and producing k.
Tensor mult_weight(const LinearMap& m, std::size_t d) {
  return m.as_tensor({{"k", d}}, {{"x", d}, {"y", d}}).ordered({"x", "y", "k"});
}

// Comultiplication as a tensor with legs o (input), m, n (output factors).
Tensor comult_tensor(const LinearMap& D, std::size_t d) {
  return D.as_tensor({{"m", d}, {"n", d}}, {{"o", d}});
}

void require_same(const std::string& tag, const LinearMap& explicit_form, const LinearMap& generic) {
  VerificationReport r;
  if (!r.expect_equal(tag, explicit_form, generic, "explicit formula vs generic construction")) {
    throw ConsistencyFailure(r.first_failure());
  }
}

HModule hstar_module(const QuasiHopfAlgebra& H) {
  Term t(H.sw());
  t.free("h", "a").delta("a", "a1", "a2").Sinv("a2").free("j", "b").mul({"a2", "b", "a1"});
  return {Side::left, H.dim(), t.tensor().ordered({"h", "a2", "j"}).with_names({"h", "v", "w"})};
}

// Element with legs (l, r) turned into φ ↦ (l⇀φ↼r) on dual coordinates: (l⇀φ↼r)(h) = φ(rhl).
LinearMap harpoons(Term t, const std::string& l, const std::string& r) {
  t.free("k", "h").mul({r, "h", l});
  return t.map({"k"}, {r});
}

// Σ x¹ ⊗ x² acting on M⊗N.
LinearMap act_pair(const Ambient& A, const AlgebraElement& x, const HModule& M, const HModule& N) {
  Term t(A.sw());
  t.ident("a", "m", M.dim).ident("b", "n", N.dim).put(x, {"x1", "x2"});
  t.act(M.action, "x1", "m").act(N.action, "x2", "n");
  return t.map({"m", "n"}, {"a", "b"});
}

struct Checks {
  VerificationReport rep;
  void algebra(const std::string& tag, const LinearMap& f, const BraidedHopfAlgebra& S,
               const BraidedHopfAlgebra& T) {
    rep.expect_equal(tag, f * S.mult, T.mult * f.kron(f), "multiplication");
    rep.expect_equal(tag, f * S.unit, T.unit, "unit");
  }
  void coalgebra(const std::string& tag, const LinearMap& f, const BraidedHopfAlgebra& S,
                 const BraidedHopfAlgebra& T) {
    rep.expect_equal(tag, f.kron(f) * S.comult, T.comult * f, "comultiplication");
    rep.expect_equal(tag, T.counit * f, S.counit, "counit");
  }
};

BraidedHopfAlgebra with_inverse(BraidedHopfAlgebra B) {
  B.antipode_inv = B.antipode.inverse();
  if (!B.antipode_inv) throw ConsistencyFailure("braided antipode is not invertible");
  return B;
}

}  // namespace

VerificationReport verify_braided_hopf(const Ambient& A, const BraidedHopfAlgebra& B, Braiding braiding) {
  VerificationReport rep;
  const QuasiHopfAlgebra& H = A.H;
  const Field& F = A.field();
  const YDModule& X = B.carrier;
  const std::size_t d = X.dim();
  const LinearMap Ib = I(F, d);
  const YDModule k = trivial_yd(H, Flavor::LL);
  const YDModule XX = yd_tensor(H, X, X);

  const VerificationReport y = verify_yd(H, X);
  rep.add("carrier", y.all_passed(), y.first_failure());

  const LinearMap& m = B.mult;
  const LinearMap& u = B.unit;
  const LinearMap& D = B.comult;
  const LinearMap& e = B.counit;
  const LinearMap a = yd_associator(H, X, X, X);
  const LinearMap a_inv = yd_associator_inv(H, X, X, X);

  rep.expect_equal("assoc", m * m.kron(Ib), m * (Ib.kron(m) * a));
  rep.expect_equal("unit", m * u.kron(Ib), Ib, "left");
  rep.expect_equal("unit", m * Ib.kron(u), Ib, "right");
  rep.add("(mal)", is_module_morphism(H, XX.module, X.module, m), "multiplication");
  rep.add("(mal)", is_module_morphism(H, k.module, X.module, u), "unit");
  rep.add("(qca1)", colinear(A, XX, X, m));
  rep.add("(qca2)", colinear(A, k, X, u));

  rep.expect_equal("(mc1)", a * (D.kron(Ib) * D), Ib.kron(D) * D);
  rep.expect_equal("counit", e.kron(Ib) * D, Ib, "left");
  rep.expect_equal("counit", Ib.kron(e) * D, Ib, "right");
  rep.add("(mc2)", is_module_morphism(H, X.module, XX.module, D), "comultiplication");
  rep.add("(mc2)", is_module_morphism(H, X.module, k.module, e), "counit");
  rep.add("(qcc1)", colinear(A, X, XX, D));
  rep.add("(qcc2)", colinear(A, X, k, e));

  // Δ∘m against (m⊗m)∘a⁻¹∘(I⊗a)∘(I⊗c⊗I)∘(I⊗a⁻¹)∘a∘(Δ⊗Δ), applied right to left.
  const LinearMap c = braiding == Braiding::standard ? yd_braiding(H, X, X) : yd_braiding_pair(A, X, X).c_inv;
  LinearMap rhs = yd_associator(H, X, X, XX) * D.kron(D);
  rhs = Ib.kron(a_inv) * rhs;
  rhs = Ib.kron(c.kron(Ib)) * rhs;
  rhs = Ib.kron(a) * rhs;
  rhs = yd_associator_inv(H, X, X, XX) * rhs;
  rep.expect_equal("(by)", D * m, m.kron(m) * rhs);

  rep.expect_equal("bialgebra-unit", D * u, u.kron(u), "comultiplication of the unit");
  rep.expect_equal("bialgebra-unit", e * m, e.kron(e), "counit of a product");
  rep.expect_equal("bialgebra-unit", e * u, I(F, 1), "counit of the unit");

  const LinearMap ue = u * e;
  rep.expect_equal("antipode", m * (B.antipode.kron(Ib) * D), ue, "left");
  rep.expect_equal("antipode", m * (Ib.kron(B.antipode) * D), ue, "right");
  if (B.antipode_inv) rep.expect_equal("antipode", B.antipode * *B.antipode_inv, Ib, "inverse");
  rep.add("antipode-morphism", is_yd_morphism(H, X, X, B.antipode));
  return rep;
}

BraidedHopfAlgebra trivial_braided_hopf(const Ambient& A) {
  const LinearMap one = I(A.field(), 1);
  return {trivial_yd(A.H, Flavor::LL), one, one, one, one, one, one};
}

Braiding variant_braiding(BraidedVariant which) {
  return which == BraidedVariant::op_cop ? Braiding::standard : Braiding::mirror;
}

BraidedHopfAlgebra braided_variant(const Ambient& A, const BraidedHopfAlgebra& B, BraidedVariant which) {
  if (!B.antipode_inv) throw std::invalid_argument("braided variant needs the antipode inverse");
  const BraidingPair c = yd_braiding_pair(A, B.carrier, B.carrier);
  BraidedHopfAlgebra out = B;
  switch (which) {
    case BraidedVariant::op:
      out.mult = B.mult * c.c_inv;
      std::swap(out.antipode, *out.antipode_inv);
      break;
    case BraidedVariant::cop:
      out.comult = c.c_inv * B.comult;
      std::swap(out.antipode, *out.antipode_inv);
      break;
    case BraidedVariant::op_cop:
      out.mult = B.mult * c.c;
      out.comult = c.c_inv * B.comult;
      break;
  }
  return out;
}

BraidedHopfAlgebra braided_dual(const Ambient& A, const BraidedHopfAlgebra& B, DualSide side) {
  const QuasiHopfAlgebra& H = A.H;
  const YDModule& X = B.carrier;
  const std::size_t d = X.dim();
  const Tensor& act = X.module.action;
  const YDDualData dual = yd_dual(A, X, side);
  const SigmaTriple s = canonical_sigma(A, X, X, false);
  const CanonicalIso& sigma = side == DualSide::left ? s.star : s.star_left;

  BraidedHopfAlgebra out;
  out.carrier = dual.dual;
  out.mult = B.comult.transpose() * sigma.map.map;
  out.comult = sigma.inverse.map * B.mult.transpose();
  out.unit = B.counit.transpose();
  out.counit = B.unit.transpose();
  out.antipode = B.antipode.transpose();
  if (B.antipode_inv) out.antipode_inv = B.antipode_inv->transpose();

  Term m(A.sw(), comult_tensor(B.comult, d));
  Term D(A.sw());
  D.ident("i", "mi", d).ident("j", "mj", d).put(A.tw.f_inv, {"g1", "g2"});
  if (side == DualSide::left) {
    m.put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "n").coact_left(X.coaction, "n", "c").mul({"c", "p2"});
    m.put(A.pq.q_L, {"Q1", "Q2"}).put(H.phi(), {"X1", "X2", "X3"}).mul({"Q1", "X1", "c"}).Sinv("Q1");
    m.delta("Q2", "Q21", "Q22").mul({"Q22", "X3", "Q1"}).mul({"Q21", "X2"});
    m.put(A.tw.f, {"f1", "f2"}).mul({"f2", "Q22"}).act(act, "f2", "m").mul({"f1", "Q21"}).act(act, "f1", "n");
    D.act(act, "g1", "mj").coact_left(X.coaction, "mj", "c").mul({"c", "g2"}).act(act, "c", "mi");
  } else {
    m.put(A.tw.f, {"f1", "f2"}).Sinv("f1").put(A.pq.p_L, {"P1", "P2"}).put(H.phi_inv(), {"x1", "x2", "x3"});
    m.mul({"x1", "P1", "f1"}).act(act, "x1", "n").coact_left(X.coaction, "n", "c");
    m.delta("P2", "P21", "P22").mul({"x2", "P21"}).put(A.pq.q_R, {"q1", "q2"});
    m.mul({"f2", "q1", "c", "x2"}).Sinv("f2").act(act, "f2", "m");
    m.mul({"x3", "P22"}).Sinv("x3").mul({"x3", "q2"}).act(act, "x3", "n");
    D.Sinv("g2").act(act, "g2", "mj").coact_left(X.coaction, "mj", "c");
    D.Sinv("g1").mul({"c", "g1"}).act(act, "c", "mi");
  }
  D.contract({"mi", "mj"}, mult_weight(B.mult, d), {Leg{"k", d}});
  require_same("dual-mult", m.map({"o"}, {"m", "n"}), out.mult);
  require_same("dual-comult", D.map({"i", "j"}, {"k"}), out.comult);
  return out;
}

HModule adjoint_module(const QuasiHopfAlgebra& H) { return adjoint_yd(H).module; }

LinearMap h0_mult(const QuasiHopfAlgebra& H) {
  Term t(H.sw());
  t.put(H.phi(), {"X1", "X2", "X3"}).put(H.phi_inv(), {"x1", "x2", "x3"});
  t.mul({"x1", "X2"}).S("x1").delta("X3", "X31", "X32").mul({"x3", "X32"}).S("x3");
  t.free("u", "h").mul({"X1", "h", "x1"}).rmul("X1", H.alpha()).mul({"X1", "x2", "X31"});
  t.free("w", "k").mul({"X1", "k", "x3"});
  return t.map({"X1"}, {"u", "w"});
}

YDModule h0_yd(const Ambient& A) {
  const QuasiHopfAlgebra& H = A.H;
  Term t(A.sw());
  t.free("u", "h").delta("h", "h1", "h2").put(A.tw.f_inv, {"g1", "g2"}).mul({"h1", "g1"}).mul({"h2", "g2"});
  t.put(H.phi(), {"Y1", "Y2", "Y3"}).delta("Y1", "Y11", "Y12").mul({"Y11", "h1"}).mul({"Y12", "h2"});
  t.delta("Y2", "Y21", "Y22").put(A.pq.q_R, {"q1", "q2"}).mul({"q2", "Y22"}).S("q2").mul({"Y11", "q2", "Y3"});
  t.put(H.phi(), {"X1", "X2", "X3"}).mul({"X3", "q1", "Y21"}).S("X3");
  t.mul({"X1", "Y11"}).mul({"X2", "Y12", "X3"});
  return make_yd(Flavor::LL, adjoint_module(H), t.tensor().ordered({"u", "X1", "X2"}).with_names({"v", "h", "w"}));
}

VerificationReport check_h0_algebra(const Ambient& A) {
  VerificationReport rep;
  const QuasiHopfAlgebra& H = A.H;
  const YDModule B = h0_yd(A);
  const YDModule BB = yd_tensor(H, B, B);
  const YDModule k = trivial_yd(H, Flavor::LL);
  const LinearMap m = h0_mult(H);
  const LinearMap u = vector_map(H.beta());
  const LinearMap Ib = I(A.field(), A.n());
  rep.expect_equal("assoc", m * m.kron(Ib), m * (Ib.kron(m) * yd_associator(H, B, B, B)));
  rep.expect_equal("unit", m * u.kron(Ib), Ib, "left");
  rep.expect_equal("unit", m * Ib.kron(u), Ib, "right");
  rep.add("(mal)", is_module_morphism(H, BB.module, B.module, m), "multiplication");
  rep.add("(mal)", is_module_morphism(H, k.module, B.module, u), "unit");
  const VerificationReport y = verify_yd(H, B);
  rep.add("(s2)", y.all_passed(), y.first_failure());
  rep.add("(qca1)", colinear(A, BB, B, m));
  rep.add("(qca2)", colinear(A, k, B, u));
  return rep;
}

BraidedHopfAlgebra build_H0(const Ambient& A) {
  if (!A.qt) throw NotQT("H0 needs an R-matrix");
  const QuasiHopfAlgebra& H = A.H;
  const QTStructure& qt = *A.qt;
  BraidedHopfAlgebra B;
  B.carrier = qt_embed(A, adjoint_module(H));
  B.mult = h0_mult(H);
  B.unit = vector_map(H.beta());
  B.counit = counit_map(A);

  // ⊳ acts on the whole right factor y¹X²h₂g²S(y²X³₁).
  Term D(A.sw());
  D.free("u", "h").delta("h", "h1", "h2").put(A.tw.f_inv, {"g1", "g2"}).mul({"h1", "g1"}).mul({"h2", "g2"});
  D.put(H.phi(), {"X1", "X2", "X3"}).delta("X3", "X31", "X32").mul({"X1", "h1"}).mul({"X2", "h2"});
  D.put(H.phi_inv(), {"y1", "y2", "y3"}).mul({"y2", "X31"}).S("y2").mul({"y1", "X2", "y2"});
  D.put(qt.R, {"R1", "R2"}).mul({"R2", "y3", "X32"});
  D.put(H.phi_inv(), {"x1", "x2", "x3"}).mul({"x2", "R2"}).S("x2").mul({"x1", "X1", "x2"});
  D.mul({"x3", "R1"}).delta("x3", "a", "b").S("b").mul({"a", "y1", "b"});
  B.comult = D.map({"x1", "a"}, {"u"});

  Term S(A.sw());
  S.free("u", "h").put(A.pq.p_R, {"p1", "p2"}).put(qt.R, {"R1", "R2"}).put(H.phi(), {"X1", "X2", "X3"});
  S.mul({"X2", "R1", "p1"}).delta("X2", "a", "b").S("b").mul({"a", "h", "b"});
  S.put(A.pq.q_R, {"q1", "q2"}).S("q2").mul({"q1", "a", "q2", "X3"}).S("q1").mul({"X1", "R2", "p2", "q1"});
  B.antipode = S.map({"X1"}, {"u"});
  return with_inverse(std::move(B));
}

H0Duals h0_duals(const Ambient& A, const BraidedHopfAlgebra& H0) {
  const QTStructure& qt = A.require_qt();
  const Tensor& ad = H0.carrier.module.action;
  const std::size_t n = A.n();
  H0Duals out{braided_dual(A, H0, DualSide::left), braided_dual(A, H0, DualSide::right)};

  for (const DualSide side : {DualSide::left, DualSide::right}) {
    const bool left = side == DualSide::left;
    BraidedHopfAlgebra& G = left ? out.left : out.right;
    Term m(A.sw(), comult_tensor(H0.comult, n));
    m.put(qt.R_inv, {"r1", "r2"}).put(A.tw.f, {"f1", "f2"}).mul({"f2", "r2"}).mul({"f1", "r1"});
    if (!left) m.Sinv("f2").Sinv("f1");
    m.act(ad, "f2", "m").act(ad, "f1", "n");
    Term D(A.sw());
    D.ident("i", "mi", n).ident("j", "mj", n).put(qt.R, {"R1", "R2"}).put(A.tw.f_inv, {"g1", "g2"});
    D.mul({"R2", "g2"}).mul({"R1", "g1"});
    if (!left) D.Sinv("R2").Sinv("R1");
    D.act(ad, "R2", "mi").act(ad, "R1", "mj").contract({"mi", "mj"}, mult_weight(H0.mult, n), {Leg{"k", n}});

    const std::string tag = left ? "(dmhz1)" : "(dmhz2)";
    require_same(tag, m.map({"o"}, {"m", "n"}), G.mult);
    require_same(left ? "(dcmhz)" : "(dcmhz2)", D.map({"i", "j"}, {"k"}), G.comult);
    require_same("(duhz)", counit_map(A).transpose(), G.unit);
    require_same(left ? "(dchz)" : "(dchz2)", vector_map(A.H.beta()).transpose(), G.counit);
    require_same("(danthz)", H0.antipode.transpose(), G.antipode);
    require_same("dual-coaction", coaction_map(qt_embed(A, G.carrier.module)), coaction_map(G.carrier));
  }
  return out;
}

ThetaH0 theta_H0(const Ambient& A, const BraidedHopfAlgebra& H0, const H0Duals& D) {
  const QTStructure& qt = A.require_qt();
  const QuasiHopfAlgebra& H = A.H;
  ThetaH0 out{canonical_Theta(A, H0.carrier), {}, qt.triangular, false, false};
  const LinearMap& th = out.iso.map.map;
  const LinearMap& th_inv = out.iso.inverse.map;
  Checks ck;
  ck.rep.expect_equal("theta-u", th, action_matrix(H, D.right.carrier.module, qt.u_inv));
  ck.rep.expect_equal("theta-u-inverse", th_inv, action_matrix(H, D.left.carrier.module, qt.u));

  const BraidedHopfAlgebra& L = D.left;
  const BraidedHopfAlgebra& R = D.right;
  out.plain_algebra = th * L.mult == R.mult * th.kron(th) && th * L.unit == R.unit;
  out.plain_coalgebra = th.kron(th) * L.comult == R.comult * th && R.counit * th == L.counit;
  if (qt.triangular) {
    ck.algebra("theta-algebra", th, L, R);
    ck.coalgebra("theta-coalgebra", th, L, R);
  } else {
    Term E(A.sw());
    E.put(qt.R_inv, {"r1", "r2"}).put(qt.R_inv, {"s1", "s2"}).mul({"r1", "s2"}).mul({"r2", "s1"});
    Term Q(A.sw());
    Q.put(qt.R, {"R1", "R2"}).put(qt.R, {"r1", "r2"}).mul({"R2", "r1"}).mul({"R1", "r2"});
    const HModule& ml = L.carrier.module;
    const HModule& mr = R.carrier.module;
    const LinearMap e_act = act_pair(A, E.element({"r1", "r2"}), ml, ml);
    const LinearMap q_act = act_pair(A, Q.element({"R2", "R1"}), mr, mr);
    ck.rep.expect_equal("theta-twisted-algebra", th * L.mult * e_act, R.mult * th.kron(th));
    ck.rep.expect_equal("theta-twisted-coalgebra", R.comult * th, q_act * th.kron(th) * L.comult);
  }
  out.report = std::move(ck.rep);
  return out;
}

BraidedHopfAlgebra build_underline_Hstar(const Ambient& A) {
  if (!A.qt) throw NotQT("underline H* needs an R-matrix");
  const QuasiHopfAlgebra& H = A.H;
  const QTStructure& qt = *A.qt;
  const Sweedler& sw = A.sw();
  BraidedHopfAlgebra B;
  B.carrier = qt_embed(A, hstar_module(H));

  // φ•Ψ with (A1, A2, B1, B2) = (x¹X¹, S⁻¹(f²x³₂Y³R¹X²), x²Y¹R²₁X³₁, S⁻¹(f¹x³₁Y²R²₂X³₂)).
  Term m(sw);
  m.put(H.phi(), {"X1", "X2", "X3"}).delta("X3", "X31", "X32");
  m.put(qt.R, {"R1", "R2"}).mul({"R1", "X2"}).delta("R2", "R21", "R22").mul({"R21", "X31"}).mul({"R22", "X32"});
  m.put(H.phi(), {"Y1", "Y2", "Y3"}).mul({"Y3", "R1"}).mul({"Y1", "R21"}).mul({"Y2", "R22"});
  m.put(H.phi_inv(), {"x1", "x2", "x3"}).mul({"x1", "X1"}).mul({"x2", "Y1"});
  m.delta("x3", "x31", "x32").mul({"x32", "Y3"}).mul({"x31", "Y2"});
  m.put(A.tw.f, {"f1", "f2"}).mul({"f2", "x32"}).mul({"f1", "x31"}).Sinv("f2").Sinv("f1");
  m.free("b", "h").delta("h", "h1", "h2").mul({"f2", "h1", "x1"}).mul({"f1", "h2", "x2"});
  B.mult = m.map({"b"}, {"f2", "f1"});
  B.unit = counit_map(A).transpose();

  // Δ(φ)(e_i ⊗ e_j) = φ(S⁻¹(X³)e_jX²·S⁻¹(X¹₂p²)e_iX¹₁p¹).
  Term D(sw);
  D.put(H.phi(), {"X1", "X2", "X3"}).delta("X1", "X11", "X12").put(A.pq.p_R, {"p1", "p2"});
  D.mul({"X11", "p1"}).mul({"X12", "p2"}).Sinv("X12").Sinv("X3");
  D.free("i", "a").free("j", "b").mul({"X3", "b", "X2", "X12", "a", "X11"});
  B.comult = D.map({"i", "j"}, {"X3"});

  Term e(sw);
  e.put(H.alpha(), {"a"}).Sinv("a");
  B.counit = vector_map(e.element({"a"})).transpose();

  // S(φ)(h) = φ(S⁻¹(b·S⁻¹(c₂)hc₁·a)), a = p¹P²S(Q²), b = S(q²R¹x¹P¹)x³S⁻¹(p²), c = Q¹q¹R²x².
  Term S(sw);
  S.put(qt.R, {"R1", "R2"}).put(H.phi_inv(), {"x1", "x2", "x3"}).mul({"R2", "x2"}).mul({"R1", "x1"});
  S.put(A.pq.q_R, {"q1", "q2"}).mul({"q1", "R2"}).mul({"q2", "R1"});
  S.put(A.pq.p_R, {"P1", "P2"}).mul({"q2", "P1"}).S("q2");
  S.put(A.pq.p_R, {"p1", "p2"}).Sinv("p2").mul({"q2", "x3", "p2"});
  S.put(A.pq.q_R, {"Q1", "Q2"}).mul({"Q1", "q1"}).S("Q2").mul({"p1", "P2", "Q2"});
  S.delta("Q1", "c1", "c2").Sinv("c2").free("k", "h").mul({"q2", "c2", "h", "c1", "p1"}).Sinv("q2");
  B.antipode = S.map({"k"}, {"q2"});
  return with_inverse(std::move(B));
}

VerificationReport hstar_identities(const Ambient& A) {
  VerificationReport rep;
  const QuasiHopfAlgebra& H = A.H;
  const Sweedler& sw = A.sw();
  const std::size_t n = A.n();
  const Field& F = A.field();

  // ⇀ and ↼ on dual coordinates are transposes of right and left multiplication.
  const auto lh = [&](const AlgebraElement& h) { return sw.right_multiplication(h).transpose(); };
  const auto rh = [&](const AlgebraElement& h) { return sw.left_multiplication(h).transpose(); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const AlgebraElement ea = H.basis(a), eb = H.basis(b), ab = sw.multiply(ea, eb);
      rep.expect_equal("bimodule", lh(ab), lh(ea) * lh(eb), "left action");
      rep.expect_equal("bimodule", rh(ab), rh(eb) * rh(ea), "right action");
      rep.expect_equal("bimodule", lh(ea) * rh(eb), rh(eb) * lh(ea), "commuting actions");
    }
  }

  // Convolution H*⊗H* → H*.
  const LinearMap conv = LinearMap::from_tensor(sw.comult_weight().with_names({"k", "i", "j"}), {"k"}, {"i", "j"});
  const LinearMap In = I(F, n);
  Term T(sw);
  T.put(H.phi(), {"X1", "X2", "X3"}).put(H.phi_inv(), {"x1", "x2", "x3"});
  T.free("o1", "h1").mul({"x1", "h1", "X1"}).free("o2", "h2").mul({"x2", "h2", "X2"});
  T.free("o3", "h3").mul({"x3", "h3", "X3"});
  const LinearMap harp = T.map({"o1", "o2", "o3"}, {"x1", "x2", "x3"});
  rep.expect_equal("(mbia1)", conv * conv.kron(In), conv * (In.kron(conv) * harp));

  Term l(sw), r(sw);
  l.free("hh", "a").free("kk", "b").mul({"b", "a"}).delta("b", "b1", "b2");
  r.free("hh", "a").delta("a", "a1", "a2").free("kk", "b").delta("b", "b1", "b2").mul({"b1", "a1"}).mul({"b2", "a2"});
  rep.expect_equal("(mbia2)", l.map({"kk"}, {"hh", "b1", "b2"}), r.map({"kk"}, {"hh", "b1", "b2"}), "left harpoon");
  Term l2(sw), r2(sw);
  l2.free("hh", "a").free("kk", "b").mul({"a", "b"}).delta("a", "b1", "b2");
  r2.free("hh", "a").delta("a", "a1", "a2").free("kk", "b").delta("b", "b1", "b2").mul({"a1", "b1"}, "b1");
  r2.mul({"a2", "b2"}, "b2");
  rep.expect_equal("(mbia2)", l2.map({"kk"}, {"hh", "b1", "b2"}), r2.map({"kk"}, {"hh", "b1", "b2"}),
                   "right harpoon");
  return rep;
}

MuIso mu_iso(const Ambient& A, const H0Duals& D, const BraidedHopfAlgebra& Hstar, const ThetaH0& theta) {
  const QTStructure& qt = A.require_qt();
  if (!qt.triangular) throw NotTriangular("mu needs a triangular R-matrix");
  const Sweedler& sw = A.sw();
  Term g(sw), f(sw);
  g.put(A.tw.f_inv, {"g1", "g2"}).Sinv("g2");
  f.put(A.tw.f, {"g1", "g2"}).Sinv("g2");
  const BraidedHopfAlgebra cop = braided_variant(A, Hstar, BraidedVariant::cop);
  const BraidedHopfAlgebra& src = D.right;

  MuIso out{YDMorphism{src.carrier, cop.carrier, harpoons(g, "g1", "g2")}, harpoons(f, "g1", "g2"), {}};
  const LinearMap& mu = out.map.map;
  const LinearMap Id = I(A.field(), A.n());
  Checks ck;
  ck.rep.expect_equal("mu-inverse", mu * out.inverse, Id, "right");
  ck.rep.expect_equal("mu-inverse", out.inverse * mu, Id, "left");
  ck.rep.add("mu-morphism", is_yd_morphism(A.H, src.carrier, cop.carrier, mu));
  ck.rep.expect_equal("mu-algebra", mu * src.mult, cop.mult * mu.kron(mu));
  ck.rep.expect_equal("mu-unit", mu * src.unit, cop.unit);
  ck.rep.expect_equal("mu-coalgebra", mu.kron(mu) * src.comult, cop.comult * mu);
  ck.rep.expect_equal("mu-counit", cop.counit * mu, src.counit);
  ck.rep.expect_equal("mu-antipode", mu * src.antipode, cop.antipode * mu);

  const LinearMap chain = mu * theta.iso.map.map;
  ck.algebra("chain", chain, D.left, cop);
  ck.coalgebra("chain", chain, D.left, cop);
  ck.rep.add("chain", is_yd_morphism(A.H, D.left.carrier, cop.carrier, chain), "morphism");
  out.report = std::move(ck.rep);
  return out;
}

}  // namespace qhopf
