#include "qhopf/yd_rigid.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"

namespace qhopf {

namespace {

void require_equal(const std::string& tag, const LinearMap& closed, const LinearMap& composite) {
  VerificationReport r;
  if (!r.expect_equal(tag, closed, composite, "closed form vs composite")) {
    throw ConsistencyFailure(r.first_failure());
  }
}

void require_ll(const YDModule& M) {
  if (M.flavor != Flavor::LL) throw DimensionMismatch("rigid structure is built for LL modules");
}

LinearMap I(const Ambient& A, const YDModule& M) { return id_map(A.field(), M.dim()); }

// Θ: X* → *X by (rl) and Θ⁻¹ by (lr).
struct ThetaComposite {
  LinearMap map, inverse;
};

ThetaComposite theta_composite(const Ambient& A, const YDModule& X, const YDDualData& L, const YDDualData& R) {
  const QuasiHopfAlgebra& H = A.H;
  const YDModule& Xs = L.dual;
  const YDModule& sX = R.dual;
  const BraidingPair c = yd_braiding_pair(A, sX, Xs);  // c: *X⊗X* → X*⊗*X, c_inv the other way
  const LinearMap c_fwd = yd_braiding(H, Xs, sX);      // X*⊗*X → *X⊗X*
  LinearMap fwd = I(A, sX).kron(L.ev) * yd_associator(H, sX, Xs, X) * c_fwd.kron(I(A, X)) *
                  yd_associator_inv(H, Xs, sX, X) * I(A, Xs).kron(R.coev);
  LinearMap inv = R.ev.kron(I(A, Xs)) * yd_associator_inv(H, X, sX, Xs) * I(A, X).kron(c.c_inv) *
                  yd_associator(H, X, Xs, sX) * L.coev.kron(I(A, sX));
  return {std::move(fwd), std::move(inv)};
}

// (rly)
LinearMap theta_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  const std::size_t d = X.dim();
  Term t(A.sw());
  t.ident("j", "m", d).put(A.tw.f_inv, {"g1", "g2"}).act(act, "g1", "m").coact_left(X.coaction, "m", "c");
  t.put(A.tw.f, {"f1", "f2"}).mul({"f1", "c", "g2"}).Sinv("f1");
  t.put(A.pq.p_R, {"p1", "p2"}).S("p1").mul({"p1", "f2"}).act(act, "p1", "m");
  t.put(A.pq.q_R, {"q1", "q2"}).mul({"q1", "f1", "p2"}).Sinv("q1").S("q2").mul({"q2", "q1"});
  t.ident("i", "n", d).act(act, "q2", "n").trace("n", "j");
  return t.map({"i"}, {"m"});
}

AlgebraElement v_element(const Ambient& A) {
  Term v(A.sw());
  v.put(A.tw.f, {"f1", "f2"}).put(A.pq.p_R, {"p1", "p2"});
  v.mul({"f2", "p2"}).Sinv("f2").mul({"f1", "p1"}).Sinv("f1");
  return v.element({"f2", "f1"});
}

// (irly)
LinearMap theta_inv_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  const std::size_t d = X.dim();
  Term t(A.sw());
  t.ident("j", "m", d).coact_left(X.coaction, "m", "c").put(v_element(A), {"V1", "V2"}).act(act, "V2", "m");
  t.mul({"V1", "c"}).S("V1").lmul("V1", A.H.beta());
  t.ident("i", "n", d).act(act, "V1", "n").trace("n", "j");
  return t.map({"i"}, {"m"});
}

// 𝓕 = S(g²)f¹ ⊗ S(g¹)f².
AlgebraElement calf(const Ambient& A) {
  Term t(A.sw());
  t.put(A.tw.f_inv, {"g1", "g2"}).put(A.tw.f, {"f1", "f2"});
  t.S("g2").mul({"g2", "f1"}).S("g1").mul({"g1", "f2"});
  return t.element({"g2", "g1"});
}

LinearMap gamma_r_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  const AlgebraElement F = calf(A);
  const AlgebraElement G = A.sw().invert(F);
  Term t(A.sw());
  t.ident("i", "m", X.dim()).put(A.pq.p_R, {"p1", "p2"}).S("p1").S("p1").act(act, "p1", "m");
  t.put(G, {"G1", "G2"}).act(act, "G1", "m").coact_left(X.coaction, "m", "c");
  t.put(F, {"F1", "F2"}).mul({"F1", "c", "G2"}).act(act, "F2", "m").Sinv("F1").Sinv("F1");
  t.put(A.pq.q_R, {"q1", "q2"}).S("q2").S("q2").mul({"q1", "F1", "p2", "q2"}).act(act, "q1", "m");
  return t.map({"m"}, {"i"});
}

LinearMap gamma_r_inv_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  Term t(A.sw());
  t.ident("j", "m", X.dim()).put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "m").coact_left(X.coaction, "m", "c");
  t.mul({"c", "p2"}).S("c").rmul("c", A.H.alpha()).act(act, "c", "m");
  return t.map({"m"}, {"j"});
}

LinearMap gamma_l_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  Term t(A.sw());
  t.ident("i", "m", X.dim()).put(v_element(A), {"V1", "V2"}).put(A.tw.f_inv, {"g1", "g2"});
  t.mul({"V2", "g2"}).Sinv("V2").act(act, "V2", "m").coact_left(X.coaction, "m", "c");
  t.S("c").rmul("c", A.H.alpha()).mul({"V1", "g1", "c"}).act(act, "V1", "m");
  return t.map({"m"}, {"i"});
}

LinearMap gamma_l_inv_closed(const Ambient& A, const YDModule& X) {
  const Tensor& act = X.module.action;
  Term t(A.sw());
  t.ident("j", "m", X.dim()).put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "m").coact_left(X.coaction, "m", "c");
  t.put(A.pq.q_R, {"q1", "q2"}).mul({"q1", "c", "p2"}).Sinv("q1").Sinv("q1").mul({"q1", "q2"});
  t.act(act, "q1", "m");
  return t.map({"m"}, {"j"});
}

// Maps out of / into (M⊗N)* and *(M⊗N); the dual of a tensor product pairs with ₐm⊗_bn.
LinearMap sigma_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  const Tensor& am = M.module.action;
  const Tensor& an = N.module.action;
  Term t(A.sw());
  t.ident("a", "m", M.dim()).ident("b", "n", N.dim());
  t.put(A.pq.p_R, {"p1", "p2"}).act(an, "p1", "n").coact_left(N.coaction, "n", "c").mul({"c", "p2"});
  t.put(A.pq.q_L, {"Q1", "Q2"}).put(A.H.phi(), {"X1", "X2", "X3"}).mul({"Q1", "X1", "c"}).Sinv("Q1");
  t.delta("Q2", "Q21", "Q22").mul({"Q22", "X3", "Q1"}).mul({"Q21", "X2"});
  t.put(A.tw.f, {"f1", "f2"}).mul({"f2", "Q22"}).act(am, "f2", "m").mul({"f1", "Q21"}).act(an, "f1", "n");
  return t.map({"a", "b"}, {"m", "n"});
}

LinearMap sigma_inv_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  Term t(A.sw());
  t.ident("i", "m", M.dim()).ident("j", "n", N.dim()).put(A.tw.f_inv, {"g1", "g2"});
  t.act(N.module.action, "g1", "n").coact_left(N.coaction, "n", "c").mul({"c", "g2"});
  t.act(M.module.action, "c", "m");
  return t.map({"i", "j"}, {"m", "n"});
}

LinearMap star_sigma_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  const Tensor& am = M.module.action;
  const Tensor& an = N.module.action;
  Term t(A.sw());
  t.ident("a", "m", M.dim()).ident("b", "n", N.dim());
  t.put(A.tw.f, {"f1", "f2"}).Sinv("f1").put(A.pq.p_L, {"P1", "P2"}).mul({"P1", "f1"});
  t.put(A.H.phi_inv(), {"x1", "x2", "x3"}).mul({"x1", "P1"}).act(an, "x1", "n");
  t.coact_left(N.coaction, "n", "c").delta("P2", "P21", "P22").mul({"x2", "P21"});
  t.put(A.pq.q_R, {"q1", "q2"}).mul({"f2", "q1", "c", "x2"}).Sinv("f2").act(am, "f2", "m");
  t.mul({"x3", "P22"}).Sinv("x3").mul({"x3", "q2"}).act(an, "x3", "n");
  return t.map({"a", "b"}, {"m", "n"});
}

LinearMap star_sigma_inv_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  Term t(A.sw());
  t.ident("i", "m", M.dim()).ident("j", "n", N.dim()).put(A.tw.f_inv, {"g1", "g2"});
  t.Sinv("g2").act(N.module.action, "g2", "n").coact_left(N.coaction, "n", "c");
  t.Sinv("g1").mul({"c", "g1"}).act(M.module.action, "c", "m");
  return t.map({"i", "j"}, {"m", "n"});
}

// φ*(n*⊗m*)(m⊗n) = ⟨m*, f¹·m⟩⟨n*, f²·n⟩ and its inverse.
LinearMap phi_star_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  Term t(A.sw());
  t.ident("a", "m", M.dim()).ident("b", "n", N.dim()).put(A.tw.f, {"f1", "f2"});
  t.act(M.module.action, "f1", "m").act(N.module.action, "f2", "n");
  return t.map({"a", "b"}, {"n", "m"});
}

LinearMap phi_star_inv_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  Term t(A.sw());
  t.ident("i", "m", M.dim()).ident("j", "n", N.dim()).put(A.tw.f_inv, {"g1", "g2"});
  t.act(M.module.action, "g1", "m").act(N.module.action, "g2", "n");
  return t.map({"j", "i"}, {"m", "n"});
}

LinearMap star_phi_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  Term t(A.sw());
  t.ident("a", "m", M.dim()).ident("b", "n", N.dim()).put(A.tw.f, {"f1", "f2"});
  t.Sinv("f2").act(M.module.action, "f2", "m").Sinv("f1").act(N.module.action, "f1", "n");
  return t.map({"a", "b"}, {"n", "m"});
}

CanonicalIso make_iso(IsoKind k, const YDModule& src, const YDModule& dst, LinearMap map, LinearMap inv) {
  return {k, YDMorphism{src, dst, std::move(map)}, YDMorphism{dst, src, std::move(inv)}};
}

}  // namespace

VerificationReport dual_pq_relations(const Ambient& A) {
  VerificationReport rep;
  const Sweedler& sw = A.sw();
  Term l(sw), r(sw);
  l.put(A.pq.q_L, {"Q1", "Q2"}).put(A.H.phi(), {"X1", "X2", "X3"}).mul({"Q1", "X1"});
  l.delta("Q2", "a", "b").mul({"a", "X2"}).mul({"b", "X3"});
  r.put(A.H.phi_inv(), {"x1", "x2", "x3"}).put(A.pq.q_L, {"Q1", "Q2"}).delta("x2", "y", "z");
  r.S("x1").mul({"x1", "Q1", "y"}).mul({"Q2", "z"});
  rep.expect_equal("(fo1)", l.element({"Q1", "a", "b"}).tensor(), r.element({"x1", "Q2", "x3"}).tensor());

  Term t(sw);
  t.put(A.pq.p_R, {"p1", "p2"}).put(A.pq.q_L, {"a1", "a2"}).put(A.pq.q_L, {"b1", "b2"});
  t.S("p1").delta("p2", "p21", "p22").S("b2").delta("b2", "s1", "s2");
  t.mul({"p1", "a1", "p21", "s1"}).mul({"b1", "a2", "p22", "s2"});
  rep.expect_equal("(fo2)", t.element({"p1", "b1"}).tensor(), A.tw.f.tensor());
  return rep;
}

YDDualData yd_dual(const Ambient& A, const YDModule& M, DualSide side, bool check) {
  require_ll(M);
  const Tensor& act = M.module.action;
  DualData D = dual_module(A.H, M.module, side);
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.tw.f_inv, {"g1", "g2"});
  Tensor coaction;
  if (side == DualSide::left) {
    t.act(act, "g1", "m").coact_left(M.coaction, "m", "c").put(A.tw.f, {"f1", "f2"});
    t.mul({"f1", "c", "g2"}).Sinv("f1").act(act, "f2", "m");
    coaction = t.tensor().ordered({"m", "f1", "i"}).with_names({"v", "h", "w"});
  } else {
    t.Sinv("g2").act(act, "g2", "m").coact_left(M.coaction, "m", "c").S("c");
    t.put(A.tw.f, {"f1", "f2"}).Sinv("f1").act(act, "f1", "m").mul({"g1", "c", "f2"});
    coaction = t.tensor().ordered({"m", "g1", "i"}).with_names({"v", "h", "w"});
  }
  YDDualData out{make_yd(Flavor::LL, std::move(D.dual), std::move(coaction)), std::move(D.ev), std::move(D.coev),
                 side};
  if (!check) return out;
  const VerificationReport rep = check_yd_dual(A, M, out);
  if (!rep.all_passed()) throw NotInYD("dual module: " + rep.first_failure());
  return out;
}

VerificationReport check_yd_dual(const Ambient& A, const YDModule& M, const YDDualData& D) {
  VerificationReport rep;
  const QuasiHopfAlgebra& H = A.H;
  const VerificationReport y = verify_yd(H, D.dual);
  rep.add("dual-yd", y.all_passed(), y.first_failure());
  const YDModule k = trivial_yd(H, Flavor::LL);
  const YDModule& X = D.dual;
  const LinearMap Im = I(A, M), Ix = I(A, X);
  if (D.side == DualSide::left) {
    rep.add("ev-morphism", is_yd_morphism(H, yd_tensor(H, X, M), k, D.ev));
    rep.add("coev-morphism", is_yd_morphism(H, k, yd_tensor(H, M, X), D.coev));
    rep.expect_equal("snake-1", Im.kron(D.ev) * yd_associator(H, M, X, M) * D.coev.kron(Im), Im);
    rep.expect_equal("snake-2", D.ev.kron(Ix) * yd_associator_inv(H, X, M, X) * Ix.kron(D.coev), Ix);
  } else {
    rep.add("ev-morphism", is_yd_morphism(H, yd_tensor(H, M, X), k, D.ev));
    rep.add("coev-morphism", is_yd_morphism(H, k, yd_tensor(H, X, M), D.coev));
    rep.expect_equal("snake-1", D.ev.kron(Im) * yd_associator_inv(H, M, X, M) * Im.kron(D.coev), Im);
    rep.expect_equal("snake-2", Ix.kron(D.ev) * yd_associator(H, X, M, X) * D.coev.kron(Ix), Ix);
  }
  return rep;
}

YDMorphism yd_transpose(const Ambient& A, const YDMorphism& nu, DualSide side) {
  const QuasiHopfAlgebra& H = A.H;
  const YDModule& M = nu.src;
  const YDModule& N = nu.dst;
  const YDDualData Dm = yd_dual(A, M, side);
  const YDDualData Dn = yd_dual(A, N, side);
  const LinearMap Ims = I(A, Dm.dual), Ins = I(A, Dn.dual);
  LinearMap t;
  if (side == DualSide::left) {
    t = Dn.ev.kron(Ims) * yd_associator_inv(H, Dn.dual, N, Dm.dual) * Ins.kron(nu.map.kron(Ims)) *
        Ins.kron(Dm.coev);
  } else {
    t = Ims.kron(Dn.ev) * yd_associator(H, Dm.dual, N, Dn.dual) * Ims.kron(nu.map).kron(Ins) *
        Dm.coev.kron(Ins);
  }
  require_equal(side == DualSide::left ? "(rt)" : "(lt)", nu.map.transpose(), t);
  return {Dn.dual, Dm.dual, std::move(t)};
}

std::string iso_kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::theta: return "theta";
    case IsoKind::theta_prime: return "theta_prime";
    case IsoKind::Theta: return "Theta";
    case IsoKind::gamma_r: return "gamma_r";
    case IsoKind::gamma_l: return "gamma_l";
    case IsoKind::sigma_star: return "sigma_star";
    case IsoKind::star_sigma: return "star_sigma";
    case IsoKind::phi_star: return "phi_star";
  }
  return "?";
}

CanonicalIso canonical_theta(const Ambient& A, const YDModule& M) {
  const QuasiHopfAlgebra& H = A.H;
  const YDDualData R = yd_dual(A, M, DualSide::right);
  const YDDualData RL = yd_dual(A, R.dual, DualSide::left);
  const YDModule& X = RL.dual;  // (*M)*
  const LinearMap fwd = R.ev.kron(I(A, X)) * yd_associator_inv(H, M, R.dual, X) * I(A, M).kron(RL.coev);
  const LinearMap inv = RL.ev.kron(I(A, M)) * yd_associator_inv(H, X, R.dual, M) * I(A, X).kron(R.coev);
  require_equal("(theta)", I(A, M), fwd);
  require_equal("(thetam)", I(A, M), inv);
  return make_iso(IsoKind::theta, M, X, fwd, inv);
}

CanonicalIso canonical_theta_prime(const Ambient& A, const YDModule& M) {
  const QuasiHopfAlgebra& H = A.H;
  const YDDualData L = yd_dual(A, M, DualSide::left);
  const YDDualData LR = yd_dual(A, L.dual, DualSide::right);
  const YDModule& X = LR.dual;  // *(M*)
  const LinearMap fwd = I(A, X).kron(L.ev) * yd_associator(H, X, L.dual, M) * LR.coev.kron(I(A, M));
  const LinearMap inv = I(A, M).kron(LR.ev) * yd_associator(H, M, L.dual, X) * L.coev.kron(I(A, X));
  require_equal("theta-prime", I(A, M), fwd);
  require_equal("theta-prime-inv", I(A, M), inv);
  return make_iso(IsoKind::theta_prime, M, X, fwd, inv);
}

CanonicalIso canonical_Theta(const Ambient& A, const YDModule& M) {
  const YDDualData L = yd_dual(A, M, DualSide::left);
  const YDDualData R = yd_dual(A, M, DualSide::right);
  const ThetaComposite comp = theta_composite(A, M, L, R);
  LinearMap fwd = theta_closed(A, M);
  LinearMap inv = theta_inv_closed(A, M);
  require_equal("(rly)", fwd, comp.map);
  require_equal("(irly)", inv, comp.inverse);
  return make_iso(IsoKind::Theta, L.dual, R.dual, std::move(fwd), std::move(inv));
}

GammaPair canonical_gamma(const Ambient& A, const YDModule& M) {
  const YDDualData L = yd_dual(A, M, DualSide::left);
  const YDDualData R = yd_dual(A, M, DualSide::right);
  const YDDualData LL = yd_dual(A, L.dual, DualSide::left);
  const YDDualData LR = yd_dual(A, L.dual, DualSide::right);
  const YDDualData RL = yd_dual(A, R.dual, DualSide::left);
  const YDDualData RR = yd_dual(A, R.dual, DualSide::right);

  // ʳΓ = θ′⁻¹∘Θ_{M*} and ˡΓ = θ⁻¹∘Θ⁻¹_{*M}.
  const CanonicalIso tp = canonical_theta_prime(A, M);
  const CanonicalIso th = canonical_theta(A, M);
  const ThetaComposite on_left = theta_composite(A, L.dual, LL, LR);
  const ThetaComposite on_right = theta_composite(A, R.dual, RL, RR);

  LinearMap gr = gamma_r_closed(A, M), gr_inv = gamma_r_inv_closed(A, M);
  LinearMap gl = gamma_l_closed(A, M), gl_inv = gamma_l_inv_closed(A, M);
  require_equal("(gr)", gr, tp.inverse.map * on_left.map);
  require_equal("(igr)", gr_inv, on_left.inverse * tp.map.map);
  require_equal("(gl)", gl, th.inverse.map * on_right.inverse);
  require_equal("(igl)", gl_inv, on_right.map * th.map.map);
  return {make_iso(IsoKind::gamma_r, LL.dual, M, std::move(gr), std::move(gr_inv)),
          make_iso(IsoKind::gamma_l, RR.dual, M, std::move(gl), std::move(gl_inv))};
}

SigmaTriple canonical_sigma(const Ambient& A, const YDModule& M, const YDModule& N, bool composites) {
  const QuasiHopfAlgebra& H = A.H;
  const YDModule P = yd_tensor(H, M, N);
  const YDDualData Ml = yd_dual(A, M, DualSide::left), Nl = yd_dual(A, N, DualSide::left);
  const YDDualData Mr = yd_dual(A, M, DualSide::right), Nr = yd_dual(A, N, DualSide::right);
  const YDDualData Pl = yd_dual(A, P, DualSide::left, composites);
  const YDDualData Pr = yd_dual(A, P, DualSide::right, composites);

  LinearMap phi = phi_star_closed(A, M, N), phi_inv = phi_star_inv_closed(A, M, N);
  if (composites) {
    const YDModule& Ms = Ml.dual;
    const YDModule& Ns = Nl.dual;
    const YDModule& Ps = Pl.dual;
    const YDModule NsMs = yd_tensor(H, Ns, Ms);
    const LinearMap In = I(A, Ns), Ip = I(A, Ps);
    const LinearMap fwd = Nl.ev.kron(Ip) * In.kron(Ml.ev.kron(I(A, N))).kron(Ip) *
                          In.kron(yd_associator_inv(H, Ms, M, N)).kron(Ip) *
                          yd_associator(H, Ns, Ms, P).kron(Ip) * yd_associator_inv(H, NsMs, P, Ps) *
                          I(A, NsMs).kron(Pl.coev);
    const LinearMap inv = Pl.ev.kron(In).kron(I(A, Ms)) * yd_associator_inv(H, Ps, P, Ns).kron(I(A, Ms)) *
                          Ip.kron(yd_associator_inv(H, M, N, Ns)).kron(I(A, Ms)) *
                          Ip.kron(I(A, M).kron(Nl.coev)).kron(I(A, Ms)) * yd_associator_inv(H, Ps, M, Ms) *
                          Ip.kron(Ml.coev);
    require_equal("(phir)", phi, fwd);
    require_equal("(sat)", phi_inv, inv);
  }

  LinearMap s = sigma_closed(A, M, N), s_inv = sigma_inv_closed(A, M, N);
  LinearMap ls = star_sigma_closed(A, M, N), ls_inv = star_sigma_inv_closed(A, M, N);
  const LinearMap c_left = yd_braiding_pair(A, Nl.dual, Ml.dual).c_inv;   // M*⊗N* → N*⊗M*
  const LinearMap c_right = yd_braiding_pair(A, Nr.dual, Mr.dual).c_inv;  // *M⊗*N → *N⊗*M
  require_equal("(ydsr)", s, phi * c_left);
  require_equal("(ydsl)", ls, star_phi_closed(A, M, N) * c_right);

  SigmaTriple out{
      make_iso(IsoKind::sigma_star, yd_tensor(H, Ml.dual, Nl.dual), Pl.dual, std::move(s), std::move(s_inv)),
      make_iso(IsoKind::star_sigma, yd_tensor(H, Mr.dual, Nr.dual), Pr.dual, std::move(ls), std::move(ls_inv)),
      make_iso(IsoKind::phi_star, yd_tensor(H, Nl.dual, Ml.dual), Pl.dual, std::move(phi), std::move(phi_inv))};
  return out;
}

VerificationReport check_iso(const Ambient& A, const CanonicalIso& iso) {
  VerificationReport rep;
  const std::string k = iso_kind_name(iso.kind);
  const YDModule& src = iso.map.src;
  const YDModule& dst = iso.map.dst;
  rep.expect_equal(k + "-right-inverse", iso.map.map * iso.inverse.map, I(A, dst));
  rep.expect_equal(k + "-left-inverse", iso.inverse.map * iso.map.map, I(A, src));
  rep.add(k + "-morphism", is_yd_morphism(A.H, src, dst, iso.map.map));
  rep.add(k + "-inverse-morphism", is_yd_morphism(A.H, dst, src, iso.inverse.map));
  return rep;
}

VerificationReport rigid_identities(const Ambient& A) {
  VerificationReport rep;
  const Sweedler& sw = A.sw();
  const AlgebraElement& beta = A.H.beta();
  {
    Term l(sw), r(sw);
    l.put(A.pq.q_R, {"q1", "q2"}).put(A.tw.f_inv, {"g1", "g2"}).delta("g1", "a", "b");
    l.mul({"q1", "a"}).mul({"q2", "b"}).S("q2").mul({"q2", "g2"});
    r.put(A.H.phi(), {"X1", "X2", "X3"}).put(A.tw.f, {"f1", "f2"}).S("X3").mul({"X3", "f1"});
    r.rmul("X1", beta).S("X2").mul({"X1", "X2", "f2"}).S("X1");
    rep.expect_equal("(ufo)", l.element({"q1", "q2"}).tensor(), r.element({"X3", "X1"}).tensor());
  }
  {
    Term l(sw);
    l.put(A.pq.p_R, {"p1", "p2"}).put(A.tw.f, {"f1", "f2"}).put(A.tw.f, {"F1", "F2"});
    l.delta("f2", "f21", "f22").mul({"p2", "f1"}).S("p2").mul({"p2", "F1", "f21"});
    l.S("p1").mul({"p1", "F2", "f22"});
    rep.expect_equal("(ufox)", l.element({"p2", "p1"}).tensor(), A.pq.q_L.tensor());
  }
  {
    Term l(sw), r(sw);
    l.put(A.tw.f_inv, {"g1", "g2"}).put(A.H.phi(), {"X1", "X2", "X3"}).put(A.pq.q_L, {"Q1", "Q2"});
    l.delta("Q2", "Q21", "Q22").mul({"Q21", "X2"}).S("Q21").put(A.tw.f, {"f1", "f2"});
    l.mul({"g1", "Q21", "f2"}).delta("g1", "w1", "w2").put(A.pq.q_R, {"q1", "q2"});
    l.mul({"q1", "w1"}).mul({"q2", "w2"}).S("q2").mul({"Q1", "X1"}).S("Q1").mul({"q2", "g2", "Q1"});
    l.mul({"Q22", "X3"}).S("Q22").mul({"Q22", "f1"});
    r.put(A.tw.f, {"f1", "f2"}).put(A.tw.f, {"F1", "F2"}).put(A.H.phi_inv(), {"x1", "x2", "x3"});
    r.delta("F1", "F11", "F12").mul({"f2", "F12", "x2"}).mul({"F2", "x3"}).S("F2").mul({"f1", "F11", "x1"});
    rep.expect_equal("(uf)", l.element({"q1", "q2", "Q22"}).tensor(), r.element({"f2", "F2", "f1"}).tensor());
  }
  return rep;
}

VerificationReport qt_canonical_forms(const Ambient& A, const HModule& Mh, const HModule& Nh) {
  VerificationReport rep;
  if (!A.qt) {
    rep.skip("co1", "no R-matrix");
    rep.skip("co2", "no R-matrix");
    return rep;
  }
  const QTStructure& qt = *A.qt;
  const YDModule M = qt_embed(A, Mh);
  const YDModule N = qt_embed(A, Nh);
  const QuasiHopfAlgebra& H = A.H;

  const GammaPair g = canonical_gamma(A, M);
  const LinearMap u = action_matrix(H, Mh, qt.u), u_inv = action_matrix(H, Mh, qt.u_inv);
  rep.expect_equal("co1", g.right.map.map, u_inv, "right gamma");
  rep.expect_equal("co1", g.right.inverse.map, u, "right gamma inverse");
  rep.expect_equal("co1", g.left.map.map, u, "left gamma");
  rep.expect_equal("co1", g.left.inverse.map, u_inv, "left gamma inverse");

  const Tensor& am = Mh.action;
  const Tensor& an = Nh.action;
  const auto pair_form = [&](bool inverse_antipode) {
    Term t(A.sw());
    t.ident("a", "m", Mh.dim).ident("b", "n", Nh.dim).put(qt.R_inv, {"r1", "r2"}).put(A.tw.f, {"f1", "f2"});
    t.mul({"f2", "r2"}).mul({"f1", "r1"});
    if (inverse_antipode) t.Sinv("f2").Sinv("f1");
    t.act(am, "f2", "m").act(an, "f1", "n");
    return t.map({"a", "b"}, {"m", "n"});
  };
  const auto pair_inv_form = [&](bool inverse_antipode) {
    Term t(A.sw());
    t.ident("i", "m", Mh.dim).ident("j", "n", Nh.dim).put(qt.R, {"r1", "r2"}).put(A.tw.f_inv, {"g1", "g2"});
    t.mul({"r2", "g2"}).mul({"r1", "g1"});
    if (inverse_antipode) t.Sinv("r2").Sinv("r1");
    t.act(am, "r2", "m").act(an, "r1", "n");
    return t.map({"i", "j"}, {"m", "n"});
  };
  const SigmaTriple s = canonical_sigma(A, M, N, false);
  rep.expect_equal("co2", s.star.map.map, pair_form(false), "sigma star");
  rep.expect_equal("co2", s.star.inverse.map, pair_inv_form(false), "sigma star inverse");
  rep.expect_equal("co2", s.star_left.map.map, pair_form(true), "star sigma");
  rep.expect_equal("co2", s.star_left.inverse.map, pair_inv_form(true), "star sigma inverse");
  return rep;
}

}  // namespace qhopf
