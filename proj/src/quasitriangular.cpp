#include "qhopf/quasitriangular.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/leg_program.hpp"
#include "util.hpp"

namespace qhopf {

using detail::expect;

VerificationReport verify_qt(const QuasiHopfAlgebra& H, const AlgebraElement& R) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  if (R.legs() != 2 || R.dim() != H.dim()) throw DimensionMismatch("R must be an element of H⊗H");
  const auto& phi = H.phi();
  const auto& phinv = H.phi_inv();
  {
    const AlgebraElement rhs = sw.multiply({sw.embed(phi, {3, 1, 2}, 3), sw.embed(R, {1, 3}, 3),
                                            sw.embed(phinv, {1, 3, 2}, 3), sw.embed(R, {2, 3}, 3), phi});
    expect(rep, "(qt1)", sw.coproduct_at(R, 0), rhs);
  }
  {
    const AlgebraElement rhs = sw.multiply({sw.embed(phinv, {2, 3, 1}, 3), sw.embed(R, {1, 3}, 3),
                                            sw.embed(phi, {2, 1, 3}, 3), sw.embed(R, {1, 2}, 3), phinv});
    expect(rep, "(qt2)", sw.coproduct_at(R, 1), rhs);
  }
  {
    Term l(sw), r(sw);
    l.free("h", "a").delta("a", "l2", "l1").put(R, {"r1", "r2"}).mul({"l1", "r1"}).mul({"l2", "r2"});
    r.free("h", "a").delta("a", "l1", "l2").put(R, {"r1", "r2"});
    r.mul({"r1", "l1"}, "l1").mul({"r2", "l2"}, "l2");
    rep.expect_equal("(qt3)", l.tensor(), r.tensor());
  }
  expect(rep, "(qt4)", sw.counit_at(R, 0), H.one(), "(ε⊗id)R");
  expect(rep, "(qt4)", sw.counit_at(R, 1), H.one(), "(id⊗ε)R");
  return rep;
}

RInverseRoutes r_inverse_routes(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R) {
  const Sweedler& sw = H.sw();
  Term a(sw);
  a.put(R, {"R1", "R2"}).put(H.phi_inv(), {"x1", "x2", "x3"}).mul({"R1", "x1"}).mul({"R2", "x2"});
  a.put(H.phi(), {"Y1", "Y2", "Y3"}).mul({"Y2", "R1"}).mul({"Y1", "R2"}).mul({"Y3", "x3"});
  a.put(H.phi(), {"X1", "X2", "X3"}).delta("X3", "X31", "X32").mul({"Y2", "X2"}).S("Y2");
  a.rmul("X1", H.beta()).rmul("Y2", H.alpha()).mul({"X1", "Y2", "Y3", "X32"}).mul({"Y1", "X31"});
  const AlgebraElement c1 = a.element({"X1", "Y1"});

  Term b(sw);
  b.put(R, {"R1", "R2"}).put(pq.p_R, {"p1", "p2"}).mul({"R1", "p1"}).mul({"R2", "p2"});
  b.put(H.phi(), {"X1", "X2", "X3"}).mul({"X2", "R1"}).mul({"X1", "R2"});
  b.put(pq.q_L, {"q1", "q2"}).delta("q2", "a", "b").mul({"q1", "X1"}).Sinv("q1");
  b.mul({"a", "X2"}).mul({"b", "X3", "q1"});
  const AlgebraElement c2 = b.element({"a", "b"});

  return {c1, c2, sw.invert(R)};
}

AlgebraElement r_inverse(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R) {
  RInverseRoutes r = r_inverse_routes(H, pq, R);
  if (!(r.closed1 == r.solved) || !(r.closed2 == r.solved)) {
    throw ConsistencyFailure("closed forms of R^-1 disagree with the linear-solve inverse");
  }
  return r.solved;
}

UElements compute_u(const QuasiHopfAlgebra& H, const PQElements& pq, const AlgebraElement& R) {
  const Sweedler& sw = H.sw();
  Term u(sw);
  u.put(R, {"R1", "R2"}).put(pq.p_R, {"p1", "p2"}).mul({"R1", "p1"}).mul({"R2", "p2"});
  u.S("R2").rmul("R2", H.alpha()).mul({"R2", "R1"});
  Term v(sw);
  v.put(R, {"R1", "R2"}).put(pq.p_R, {"p1", "p2"}).mul({"R1", "p1"}).mul({"R2", "p2"});
  v.put(H.phi(), {"X1", "X2", "X3"}).mul({"X2", "R1"}).S("X2").rmul("X2", H.alpha()).mul({"X2", "X3"});
  v.S("X2").mul({"X1", "R2", "X2"});
  return {u.element({"R2"}), v.element({"X1"})};
}

VerificationReport check_u(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const AlgebraElement& R,
                           const UElements& u) {
  VerificationReport rep;
  const Sweedler& sw = H.sw();
  expect(rep, "u-inverse", sw.multiply(u.u, u.u_inv), H.one(), "u·u^-1");
  expect(rep, "u-inverse", sw.multiply(u.u_inv, u.u), H.one(), "u^-1·u");
  rep.add("(sqina)", H.field().equal(sw.counit_value(u.u), 1), "eps(u) != 1");
  {
    Term t(sw);
    t.put(u.u, {"u"}).S("u").S("u");
    expect(rep, "S2-u", t.element({"u"}), u.u);
  }
  {
    Term l(sw), r(sw);
    l.free("h", "a").S("a").S("a");
    r.free("h", "a").lmul("a", u.u).rmul("a", u.u_inv);
    rep.expect_equal("(sqina)", l.tensor(), r.tensor(), "S^2(h) = u h u^-1");
  }
  {
    Term l(sw);
    l.put(R, {"R1", "R2"}).S("R2").rmul("R2", H.alpha()).mul({"R2", "R1"});
    Term r(sw);
    r.put(H.alpha(), {"a"}).S("a").rmul("a", u.u);
    expect(rep, "(sext)", l.element({"R2"}), r.element({"a"}));
  }
  {
    const AlgebraElement lhs = sw.multiply({d.f.permuted({1, 0}), R, d.f_inv});
    expect(rep, "(ext)", lhs, sw.antipode_each(R));
  }
  return rep;
}

UElements u_element(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const PQElements& pq,
                    const AlgebraElement& R) {
  UElements u = compute_u(H, pq, R);
  const VerificationReport rep = check_u(H, d, R, u);
  if (!rep.all_passed()) throw ConsistencyFailure("u element: " + rep.first_failure());
  return u;
}

bool is_triangular(const QuasiHopfAlgebra&, const AlgebraElement& R, const AlgebraElement& R_inv) {
  return R_inv == R.permuted({1, 0});
}

QTStructure make_qt(const QuasiHopfAlgebra& H, const DrinfeldTwistData& d, const PQElements& pq,
                    const AlgebraElement& R) {
  const VerificationReport rep = verify_qt(H, R);
  if (!rep.all_passed()) throw NotQT("R is not an R-matrix: " + rep.first_failure());
  QTStructure qt;
  qt.R = R;
  qt.R_inv = r_inverse(H, pq, R);
  UElements u = u_element(H, d, pq, R);
  qt.u = std::move(u.u);
  qt.u_inv = std::move(u.u_inv);
  qt.triangular = is_triangular(H, R, qt.R_inv);
  return qt;
}

const QTStructure& Ambient::require_qt() const {
  if (!qt) throw NotQT("algebra " + H.name() + " has no R-matrix");
  return *qt;
}

Ambient make_ambient(QuasiHopfAlgebra H, std::optional<AlgebraElement> R) {
  DrinfeldTwistData tw = drinfeld_twist(H);
  PQElements pq = pq_elements(H, tw);
  std::optional<QTStructure> qt;
  if (R) qt = make_qt(H, tw, pq, *R);
  return Ambient{std::move(H), std::move(tw), std::move(pq), std::move(qt)};
}

Ambient ambient_over(const Ambient& A, const Field& f) {
  if (A.field() == f) return A;
  std::optional<AlgebraElement> R;
  if (A.qt) R = reduce_element(A.qt->R, f);
  return make_ambient(over_field(A.H, f), std::move(R));
}

}  // namespace qhopf
