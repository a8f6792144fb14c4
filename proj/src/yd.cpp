#include "qhopf/yd.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"

namespace qhopf {

namespace {

Tensor norm(const Term& t, std::initializer_list<std::string> order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order.size(); ++i) names.push_back("l" + std::to_string(i));
  return t.tensor().ordered(order).with_names(std::move(names));
}

void require_flavor(const YDModule& M, Flavor f) {
  if (M.flavor != f) throw DimensionMismatch("expected a " + flavor_name(f) + " module, got " + flavor_name(M.flavor));
}

Tensor left_coaction_tensor(const Term& t, const std::string& in, const std::string& h, const std::string& out) {
  return t.tensor().ordered({in, h, out}).with_names({"v", "h", "w"});
}

Tensor right_coaction_tensor(const Term& t, const std::string& in, const std::string& h, const std::string& out) {
  return t.tensor().ordered({in, out, h}).with_names({"v", "w", "h"});
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::LL: return "LL";
    case Flavor::LR: return "LR";
    case Flavor::RL: return "RL";
    case Flavor::RR: return "RR";
  }
  return "?";
}

Side action_side(Flavor f) { return f == Flavor::LL || f == Flavor::LR ? Side::left : Side::right; }
bool left_coaction(Flavor f) { return f == Flavor::LL || f == Flavor::RL; }

YDModule make_yd(Flavor flavor, HModule module, Tensor coaction) {
  if (module.side != action_side(flavor)) throw DimensionMismatch("action side does not match the YD flavor");
  const std::size_t d = module.dim;
  const std::size_t n = module.action.dim("h");
  const std::vector<Leg> want = left_coaction(flavor) ? std::vector<Leg>{{"v", d}, {"h", n}, {"w", d}}
                                                      : std::vector<Leg>{{"v", d}, {"w", d}, {"h", n}};
  if (coaction.legs() != want) throw DimensionMismatch("coaction tensor has the wrong shape for its flavor");
  return {flavor, std::move(module), std::move(coaction)};
}

LinearMap coaction_map(const YDModule& M) {
  return left_coaction(M.flavor) ? LinearMap::from_tensor(M.coaction, {"h", "w"}, {"v"})
                                 : LinearMap::from_tensor(M.coaction, {"w", "h"}, {"v"});
}

YDModule yd_from_map(Flavor flavor, HModule module, const LinearMap& coaction) {
  const std::size_t d = module.dim;
  const std::size_t n = module.action.dim("h");
  Tensor t = left_coaction(flavor) ? coaction.as_tensor({{"h", n}, {"w", d}}, {{"v", d}}).ordered({"v", "h", "w"})
                                   : coaction.as_tensor({{"w", d}, {"h", n}}, {{"v", d}}).ordered({"v", "w", "h"});
  return make_yd(flavor, std::move(module), std::move(t));
}

VerificationReport verify_yd(const QuasiHopfAlgebra& H, const YDModule& M) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  const Tensor& A = M.module.action;
  const Tensor& C = M.coaction;
  const std::size_t d = M.dim();
  const auto& phi = H.phi();
  const auto& phinv = H.phi_inv();
  const auto base = [&] {
    Term t(sw);
    t.ident("i", "m", d);
    return t;
  };
  const auto pair = [&] {
    Term t(sw);
    t.free("h", "a").delta("a", "a1", "a2").ident("i", "m", d);
    return t;
  };

  switch (M.flavor) {
    case Flavor::LL: {
      Term l = base(), r = base();
      l.coact_left(C, "m", "c").put(phi, {"X1", "X2", "X3"}).mul({"X1", "c"}).act(A, "X2", "m");
      l.coact_left(C, "m", "d").mul({"d", "X3"});
      r.put(phi, {"Y1", "Y2", "Y3"}).act(A, "Y1", "m").coact_left(C, "m", "c").delta("c", "c1", "c2");
      r.put(phi, {"X1", "X2", "X3"}).mul({"X1", "c1", "Y2"}).mul({"X2", "c2", "Y3"}).act(A, "X3", "m");
      rep.expect_equal("(y1)", norm(l, {"i", "X1", "d", "m"}), norm(r, {"i", "X1", "X2", "m"}));
      Term e = base();
      e.coact_left(C, "m", "c").eps("c");
      rep.expect_equal("(y2)", norm(e, {"i", "m"}), norm(base(), {"i", "m"}));
      Term l3 = pair(), r3 = pair();
      l3.coact_left(C, "m", "c").mul({"a1", "c"}).act(A, "a2", "m");
      r3.act(A, "a1", "m").coact_left(C, "m", "c").mul({"c", "a2"});
      rep.expect_equal("(y3)", norm(l3, {"h", "i", "a1", "m"}), norm(r3, {"h", "i", "c", "m"}));
      break;
    }
    case Flavor::LR: {
      Term l = base(), r = base();
      l.coact_right(C, "m", "c").put(phinv, {"x1", "x2", "x3"}).act(A, "x2", "m").coact_right(C, "m", "d");
      l.mul({"d", "x1"}).mul({"x3", "c"});
      r.put(phinv, {"y1", "y2", "y3"}).act(A, "y3", "m").coact_right(C, "m", "c").delta("c", "c1", "c2");
      r.put(phinv, {"x1", "x2", "x3"}).act(A, "x1", "m").mul({"x2", "c1", "y1"}).mul({"x3", "c2", "y2"});
      rep.expect_equal("(lry1)", norm(l, {"i", "m", "d", "x3"}), norm(r, {"i", "m", "x2", "x3"}));
      Term e = base();
      e.coact_right(C, "m", "c").eps("c");
      rep.expect_equal("(lry2)", norm(e, {"i", "m"}), norm(base(), {"i", "m"}));
      Term l3 = pair(), r3 = pair();
      l3.coact_right(C, "m", "c").act(A, "a1", "m").mul({"a2", "c"});
      r3.act(A, "a2", "m").coact_right(C, "m", "c").mul({"c", "a1"});
      rep.expect_equal("(lry3)", norm(l3, {"h", "i", "m", "a2"}), norm(r3, {"h", "i", "m", "c"}));
      break;
    }
    case Flavor::RL: {
      Term l = base(), r = base();
      l.coact_left(C, "m", "c").put(phinv, {"x1", "x2", "x3"}).mul({"c", "x1"}).act(A, "x2", "m");
      l.coact_left(C, "m", "d").mul({"x3", "d"});
      r.put(phinv, {"y1", "y2", "y3"}).act(A, "y1", "m").coact_left(C, "m", "c").delta("c", "c1", "c2");
      r.put(phinv, {"x1", "x2", "x3"}).mul({"y2", "c1", "x1"}).mul({"y3", "c2", "x2"}).act(A, "x3", "m");
      rep.expect_equal("(rly1)", norm(l, {"i", "c", "x3", "m"}), norm(r, {"i", "y2", "y3", "m"}));
      Term e = base();
      e.coact_left(C, "m", "c").eps("c");
      rep.expect_equal("(rly2)", norm(e, {"i", "m"}), norm(base(), {"i", "m"}));
      Term l3 = pair(), r3 = pair();
      l3.coact_left(C, "m", "c").mul({"c", "a1"}).act(A, "a2", "m");
      r3.act(A, "a1", "m").coact_left(C, "m", "c").mul({"a2", "c"});
      rep.expect_equal("(rly3)", norm(l3, {"h", "i", "c", "m"}), norm(r3, {"h", "i", "a2", "m"}));
      break;
    }
    case Flavor::RR: {
      Term l = base(), r = base();
      l.coact_right(C, "m", "c").put(phi, {"X1", "X2", "X3"}).act(A, "X2", "m").coact_right(C, "m", "d");
      l.mul({"X1", "d"}).mul({"c", "X3"});
      r.put(phi, {"Y1", "Y2", "Y3"}).act(A, "Y3", "m").coact_right(C, "m", "c").delta("c", "c1", "c2");
      r.put(phi, {"X1", "X2", "X3"}).act(A, "X1", "m").mul({"Y1", "c1", "X2"}).mul({"Y2", "c2", "X3"});
      rep.expect_equal("(ry1)", norm(l, {"i", "m", "X1", "c"}), norm(r, {"i", "m", "Y1", "Y2"}));
      Term e = base();
      e.coact_right(C, "m", "c").eps("c");
      rep.expect_equal("(ry2)", norm(e, {"i", "m"}), norm(base(), {"i", "m"}));
      Term l3 = pair(), r3 = pair();
      l3.coact_right(C, "m", "c").act(A, "a1", "m").mul({"c", "a2"});
      r3.act(A, "a2", "m").coact_right(C, "m", "c").mul({"a1", "c"});
      rep.expect_equal("(ry3)", norm(l3, {"h", "i", "m", "c"}), norm(r3, {"h", "i", "m", "a1"}));
      break;
    }
  }
  return rep;
}

VerificationReport check_y3p(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LL);
  VerificationReport rep;
  const Sweedler& sw = A.sw();
  const Tensor& act = M.module.action;
  const Tensor& C = M.coaction;
  const std::size_t d = M.dim();

  Term l(sw), r(sw);
  l.free("h", "a").ident("i", "m", d).act(act, "a", "m").coact_left(C, "m", "c");
  r.free("h", "a").delta("a", "a1", "a2").ident("i", "m", d).put(A.pq.q_R, {"q1", "q2"});
  r.mul({"q1", "a1"}).delta("q1", "k1", "k2").mul({"q2", "a2"}).S("q2");
  r.put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "m").coact_left(C, "m", "c");
  r.mul({"k1", "c", "p2", "q2"}).act(act, "k2", "m");
  rep.expect_equal("(y3p)", norm(l, {"h", "i", "c", "m"}), norm(r, {"h", "i", "k1", "m"}));

  // λ rebuilt from (syd)
  Term s(sw);
  s.ident("i", "m", d).put(A.pq.q_R, {"q1", "q2"}).delta("q1", "k1", "k2").S("q2");
  s.put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "m").coact_left(C, "m", "c");
  s.mul({"k1", "c", "p2", "q2"}).act(act, "k2", "m");
  const Tensor rebuilt = left_coaction_tensor(s, "i", "k1", "m");
  rep.expect_equal("(syd)", rebuilt, C, "coaction rebuilt from (syd)");
  const VerificationReport again = verify_yd(A.H, YDModule{Flavor::LL, M.module, rebuilt});
  rep.add("(syd)", again.passed("(y3)"), again.passed("(y3)") ? "" : "rebuilt coaction fails (y3)");
  return rep;
}

YDModule trivial_yd(const QuasiHopfAlgebra& H, Flavor flavor) {
  HModule k = trivial_module(H, action_side(flavor));
  Term t(H.sw());
  t.ident("v", "w", 1).one("h");
  Tensor c = left_coaction(flavor) ? t.tensor().ordered({"v", "h", "w"}) : t.tensor().ordered({"v", "w", "h"});
  return make_yd(flavor, std::move(k), std::move(c));
}

YDModule adjoint_yd(const QuasiHopfAlgebra& H) {
  Term a(H.sw());
  a.free("h", "a").delta("a", "a1", "a2").S("a2").free("v", "w").mul({"a1", "w", "a2"}, "w");
  HModule m{Side::left, H.dim(), a.tensor().ordered({"h", "v", "w"})};
  return make_yd(Flavor::LL, std::move(m), H.sw().comult_weight().with_names({"v", "h", "w"}));
}

YDModule yd_tensor(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N) {
  if (M.flavor != N.flavor) throw DimensionMismatch("tensor product of YD modules of different flavors");
  const Sweedler& sw = H.sw();
  const Tensor &AM = M.module.action, &AN = N.module.action, &CM = M.coaction, &CN = N.coaction;
  const auto& phi = H.phi();
  const auto& phinv = H.phi_inv();
  Term t(sw);
  t.ident("mi", "m", M.dim()).ident("ni", "n", N.dim());
  std::string h;
  switch (M.flavor) {
    case Flavor::LL:
      t.put(phi, {"Y1", "Y2", "Y3"}).act(AN, "Y2", "n").put(phinv, {"x1", "x2", "x3"});
      t.mul({"x1", "Y1"}).act(AM, "x1", "m").coact_left(CM, "m", "cm").coact_left(CN, "n", "cn");
      t.mul({"cm", "x2", "cn", "Y3"}).put(phi, {"X1", "X2", "X3"});
      t.act(AM, "X2", "m").mul({"X3", "x3"}).act(AN, "X3", "n").mul({"X1", "cm"});
      h = "X1";
      break;
    case Flavor::LR:
      t.put(phinv, {"y1", "y2", "y3"}).act(AM, "y2", "m").coact_right(CM, "m", "cm");
      t.put(phi, {"X1", "X2", "X3"}).mul({"X3", "y3"}).act(AN, "X3", "n").coact_right(CN, "n", "cn");
      t.mul({"cn", "X2", "cm", "y1"}).put(phinv, {"x1", "x2", "x3"});
      t.mul({"x1", "X1"}).act(AM, "x1", "m").act(AN, "x2", "n").mul({"x3", "cn"});
      h = "x3";
      break;
    case Flavor::RR:
      t.put(phi, {"X1", "X2", "X3"}).act(AM, "X2", "m").coact_right(CM, "m", "cm");
      t.put(phinv, {"x1", "x2", "x3"}).mul({"X3", "x3"}).act(AN, "X3", "n").coact_right(CN, "n", "cn");
      t.mul({"cm", "x2", "cn"}).put(phi, {"Y1", "Y2", "Y3"});
      t.mul({"x1", "Y1"}).act(AM, "x1", "m").act(AN, "Y2", "n").mul({"X1", "cm", "Y3"});
      h = "X1";
      break;
    case Flavor::RL:
      t.put(phinv, {"x1", "x2", "x3"}).act(AN, "x2", "n").coact_left(CN, "n", "cn");
      t.put(phi, {"X1", "X2", "X3"}).mul({"x1", "X1"}).act(AM, "x1", "m").coact_left(CM, "m", "cm");
      t.mul({"x3", "cn", "X2", "cm"}).put(phinv, {"y1", "y2", "y3"});
      t.act(AM, "y2", "m").mul({"X3", "y3"}).act(AN, "X3", "n").mul({"x3", "y1"});
      h = "x3";
      break;
  }
  const Tensor& raw = t.tensor();
  Tensor c = left_coaction(M.flavor) ? raw.ordered({"mi", "ni", h, "m", "n"})
                                     : raw.ordered({"mi", "ni", "m", "n", h});
  c = c.merged({"mi", "ni"}, "v").merged({"m", "n"}, "w").renamed(h, "h");
  return make_yd(M.flavor, tensor_modules(H, M.module, N.module), std::move(c));
}

LinearMap yd_associator(const QuasiHopfAlgebra& H, const YDModule& U, const YDModule& V, const YDModule& W) {
  return associator(H, U.module, V.module, W.module);
}

LinearMap yd_associator_inv(const QuasiHopfAlgebra& H, const YDModule& U, const YDModule& V,
                            const YDModule& W) {
  return associator_inv(H, U.module, V.module, W.module);
}

LinearMap yd_braiding(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N) {
  if (M.flavor != N.flavor) throw DimensionMismatch("braiding between YD modules of different flavors");
  Term t(H.sw());
  t.ident("mi", "m", M.dim()).ident("ni", "n", N.dim());
  if (left_coaction(M.flavor)) {
    // LL: m₋₁·n ⊗ m₀;  RL: n·m₋₁ ⊗ m₀
    t.coact_left(M.coaction, "m", "c").act(N.module.action, "c", "n");
  } else {
    // LR: n₀ ⊗ n₁·m;  RR: n₀ ⊗ m·n₁
    t.coact_right(N.coaction, "n", "c").act(M.module.action, "c", "m");
  }
  return t.map({"n", "m"}, {"mi", "ni"});
}

LinearMap yd_braiding_inv_closed(const Ambient& A, const YDModule& M, const YDModule& N) {
  if (M.flavor != N.flavor) throw DimensionMismatch("braiding between YD modules of different flavors");
  const Tensor &AM = M.module.action, &AN = N.module.action;
  Term t(A.sw());
  t.ident("ni", "n", N.dim()).ident("mi", "m", M.dim());
  if (M.flavor == Flavor::LL) {
    t.put(A.pq.p_R, {"p1", "p2"}).act(AM, "p1", "m").coact_left(M.coaction, "m", "c");
    t.mul({"c", "p2"}).put(A.pq.q_L, {"Q1", "Q2"}).put(A.H.phi(), {"X1", "X2", "X3"}).mul({"Q1", "X1", "c"});
    t.delta("Q2", "Q21", "Q22").mul({"Q22", "X3"}).S("Q22").mul({"Q1", "Q22"}).Sinv("Q1").act(AN, "Q1", "n");
    t.mul({"Q21", "X2"}).act(AM, "Q21", "m");
  } else if (M.flavor == Flavor::LR) {
    t.put(A.pq.p_L, {"P1", "P2"}).act(AN, "P2", "n").coact_right(N.coaction, "n", "c");
    t.mul({"c", "P1"}).put(A.H.phi_inv(), {"x1", "x2", "x3"}).mul({"x3", "c"}).put(A.pq.q_R, {"q1", "q2"});
    t.mul({"q2", "x3"}).S("q2").delta("q1", "q11", "q12");
    t.mul({"q11", "x1", "q2"}).act(AM, "q11", "m").mul({"q12", "x2"}).act(AN, "q12", "n");
  } else {
    throw std::invalid_argument("no closed-form braiding inverse for flavor " + flavor_name(M.flavor));
  }
  return t.map({"m", "n"}, {"ni", "mi"});
}

BraidingPair yd_braiding_pair(const Ambient& A, const YDModule& M, const YDModule& N) {
  LinearMap c = yd_braiding(A.H, M, N);
  auto inv = c.inverse();
  if (!inv) throw NotInvertible("YD braiding is not invertible");
  if (M.flavor == Flavor::LL || M.flavor == Flavor::LR) {
    if (!(yd_braiding_inv_closed(A, M, N) == *inv)) {
      throw ConsistencyFailure("closed-form braiding inverse differs from the matrix inverse");
    }
  }
  return {std::move(c), std::move(*inv)};
}

YDModule functor_F(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LR);
  const Tensor& act = M.module.action;
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.pq.p_L, {"P1", "P2"}).act(act, "P2", "m").coact_right(M.coaction, "m", "c");
  t.mul({"c", "P1"}).put(A.H.phi_inv(), {"x1", "x2", "x3"}).mul({"x3", "c"}).put(A.pq.q_R, {"q1", "q2"});
  t.mul({"q2", "x3"}).S("q2").delta("q1", "q11", "q12");
  t.mul({"q11", "x1", "q2"}).mul({"q12", "x2"}).act(act, "q12", "m");
  YDModule out = make_yd(Flavor::LL, M.module, left_coaction_tensor(t, "i", "q11", "m"));
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("F(M) is not a left Yetter-Drinfeld module");
  return out;
}

Tensor functor_F_inv_closed(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LL);
  const Tensor& act = M.module.action;
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.pq.p_R, {"p1", "p2"}).act(act, "p1", "m").coact_left(M.coaction, "m", "c");
  t.mul({"c", "p2"}).put(A.pq.q_L, {"Q1", "Q2"}).put(A.H.phi(), {"X1", "X2", "X3"}).mul({"Q1", "X1", "c"});
  t.delta("Q2", "Q21", "Q22").mul({"Q22", "X3"}).S("Q22").mul({"Q1", "Q22"}).Sinv("Q1");
  t.mul({"Q21", "X2"}).act(act, "Q21", "m");
  return right_coaction_tensor(t, "i", "Q1", "m");
}

YDModule functor_F_inv(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LL);
  const std::size_t d = M.dim(), n = A.n(), K = d * d * n;
  const Tensor& act = M.module.action;
  // Universal right coaction: U[v, w, h, k] = [k = (v, w, h)].
  Tensor U(A.field(), {{"v", d}, {"w", d}, {"h", n}, {"k", K}});
  for (std::size_t k = 0; k < K; ++k) U.set_at({k / (d * n), (k / n) % d, k % n, k}, 1);
  Term t(A.sw());
  t.ident("i", "m", d).put(A.pq.p_L, {"P1", "P2"}).act(act, "P2", "m");
  t.contract({"m"}, U, {{"m", d}, {"c", n}, {"k", K}});
  t.mul({"c", "P1"}).put(A.H.phi_inv(), {"x1", "x2", "x3"}).mul({"x3", "c"}).put(A.pq.q_R, {"q1", "q2"});
  t.mul({"q2", "x3"}).S("q2").delta("q1", "q11", "q12");
  t.mul({"q11", "x1", "q2"}).mul({"q12", "x2"}).act(act, "q12", "m");
  const LinearMap system = t.map({"i", "q11", "m"}, {"k"});
  const LinearMap target = LinearMap::from_tensor(M.coaction, {"v", "h", "w"}, {});
  auto sol = system.solve(target);
  if (!sol) throw NotInYD("no right coaction maps to the given left coaction under F");

  const Tensor closed = functor_F_inv_closed(A, M);
  const LinearMap closed_col = LinearMap::from_tensor(closed, {"v", "w", "h"}, {});
  if (!(system * closed_col == target)) throw ConsistencyFailure("closed-form F inverse does not solve the F system");
  if (system.rank() == K && !(*sol == closed_col)) {
    throw ConsistencyFailure("closed-form F inverse differs from the linear-solve inverse");
  }
  YDModule out = make_yd(Flavor::LR, M.module, closed);
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("F^-1(M) is not a left-right Yetter-Drinfeld module");
  return out;
}

namespace {
HModule twisted_action(const Ambient& A, const HModule& M, Side side, bool inverse_antipode) {
  Term a(A.sw());
  a.free("h", "a");
  if (inverse_antipode) a.Sinv("a"); else a.S("a");
  a.ident("i", "m", M.dim).act(M.action, "a", "m");
  return {side, M.dim, a.tensor().ordered({"h", "i", "m"}).with_names({"h", "v", "w"})};
}
}  // namespace

YDModule functor_K(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LL);
  const Tensor& act = M.module.action;
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.tw.f_inv, {"g1", "g2"}).act(act, "g1", "m").coact_left(M.coaction, "m", "c");
  t.put(A.tw.f, {"f1", "f2"}).mul({"f1", "c", "g2"}).Sinv("f1").act(act, "f2", "m");
  YDModule out = make_yd(Flavor::RR, twisted_action(A, M.module, Side::right, false),
                         right_coaction_tensor(t, "i", "f1", "m"));
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("K(M) is not a right Yetter-Drinfeld module");
  return out;
}

YDModule functor_K_inv(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::RR);
  const Tensor& act = M.module.action;
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.tw.f, {"f1", "f2"}).Sinv("f1").act(act, "f1", "m");
  t.coact_right(M.coaction, "m", "c").S("c").put(A.tw.f_inv, {"g1", "g2"}).mul({"g1", "c", "f2"});
  t.Sinv("g2").act(act, "g2", "m");
  YDModule out = make_yd(Flavor::LL, twisted_action(A, M.module, Side::left, true),
                         left_coaction_tensor(t, "i", "g1", "m"));
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("K^-1(M) is not a left Yetter-Drinfeld module");
  return out;
}

YDModule functor_G(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::RL);
  const Tensor& act = M.module.action;
  // h·m = m·S⁻¹(h) is the left action used inside the coaction formula as well.
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.tw.f, {"f1", "f2"}).Sinv("f2").act(act, "f2", "m");
  t.coact_left(M.coaction, "m", "c").put(A.tw.f_inv, {"g1", "g2"}).Sinv("g1").act(act, "g1", "m");
  t.S("c").mul({"g2", "c", "f1"});
  YDModule out = make_yd(Flavor::LR, twisted_action(A, M.module, Side::left, true),
                         right_coaction_tensor(t, "i", "g2", "m"));
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("G(M) is not a left-right Yetter-Drinfeld module");
  return out;
}

YDModule functor_G_inv(const Ambient& A, const YDModule& M) {
  require_flavor(M, Flavor::LR);
  const Tensor& act = M.module.action;
  Term t(A.sw());
  t.ident("i", "m", M.dim()).put(A.tw.f_inv, {"g1", "g2"}).act(act, "g2", "m").coact_right(M.coaction, "m", "c");
  t.put(A.tw.f, {"f1", "f2"}).mul({"f2", "c", "g1"}).Sinv("f2").act(act, "f1", "m");
  YDModule out = make_yd(Flavor::RL, twisted_action(A, M.module, Side::right, false),
                         left_coaction_tensor(t, "i", "f2", "m"));
  if (!verify_yd(A.H, out).all_passed()) throw NotInYD("G^-1(M) is not a right-left Yetter-Drinfeld module");
  return out;
}

YDModule qt_embed(const Ambient& A, const HModule& M) {
  if (M.side != Side::left) throw DimensionMismatch("qt_embed takes a left module");
  const QTStructure& qt = A.require_qt();
  Term t(A.sw());
  t.ident("i", "m", M.dim).put(qt.R, {"R1", "R2"}).act(M.action, "R1", "m");
  return make_yd(Flavor::LL, M, left_coaction_tensor(t, "i", "R2", "m"));
}

bool is_yd_morphism(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N, const LinearMap& f) {
  if (M.flavor != N.flavor || !is_module_morphism(H, M.module, N.module, f)) return false;
  const LinearMap I = id_map(H.field(), H.dim());
  const LinearMap lhs = coaction_map(N) * f;
  const LinearMap rhs = left_coaction(M.flavor) ? I.kron(f) * coaction_map(M) : f.kron(I) * coaction_map(M);
  return lhs == rhs;
}

YDModule yd_direct_sum(const YDModule& M, const YDModule& N) {
  if (M.flavor != N.flavor) throw DimensionMismatch("direct sum of YD modules of different flavors");
  HModule sum = direct_sum(M.module, N.module);
  const std::size_t n = M.module.action.dim("h");
  const std::size_t dm = M.dim(), d = sum.dim;
  const bool L = left_coaction(M.flavor);
  Tensor c(M.coaction.field(), L ? std::vector<Leg>{{"v", d}, {"h", n}, {"w", d}}
                                 : std::vector<Leg>{{"v", d}, {"w", d}, {"h", n}});
  auto copy = [&](const Tensor& src, std::size_t off, std::size_t dim) {
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t w = 0; w < dim; ++w)
        for (std::size_t h = 0; h < n; ++h) {
          if (L) c.set_at({off + v, h, off + w}, src.at({v, h, w}));
          else c.set_at({off + v, off + w, h}, src.at({v, w, h}));
        }
  };
  copy(M.coaction, 0, dm);
  copy(N.coaction, dm, N.dim());
  return make_yd(M.flavor, std::move(sum), std::move(c));
}

YDModule yd_conjugate(const YDModule& M, const LinearMap& P, const LinearMap& P_inv) {
  HModule m = conjugate(M.module, P, P_inv);
  const std::size_t d = M.dim();
  Tensor c = M.coaction.contract({"v"}, P_inv.transpose().as_weight(), {{"v", d}});
  c = c.contract({"w"}, P.as_weight(), {{"w", d}});
  c = left_coaction(M.flavor) ? c.ordered({"v", "h", "w"}) : c.ordered({"v", "w", "h"});
  return make_yd(M.flavor, std::move(m), std::move(c));
}

MonoidalOps<YDModule> yd_category(const QuasiHopfAlgebra& H) {
  MonoidalOps<YDModule> C;
  C.dim = [](const YDModule& m) { return m.dim(); };
  C.tensor = [H](const YDModule& a, const YDModule& b) { return yd_tensor(H, a, b); };
  C.assoc = [H](const YDModule& u, const YDModule& v, const YDModule& w) { return yd_associator(H, u, v, w); };
  C.assoc_inv = [H](const YDModule& u, const YDModule& v, const YDModule& w) {
    return yd_associator_inv(H, u, v, w);
  };
  C.braid = [H](const YDModule& m, const YDModule& n) { return yd_braiding(H, m, n); };
  return C;
}

}  // namespace qhopf
