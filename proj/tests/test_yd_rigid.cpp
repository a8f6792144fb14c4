#include <doctest.h>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/yd_rigid.hpp"

using namespace qhopf;

namespace {

YDModule graded(const QuasiHopfAlgebra& H, const LinearMap& g_action, std::vector<std::size_t> degree) {
  const Field& f = H.field();
  const std::size_t d = degree.size();
  const HModule M = make_module(H, Side::left, {LinearMap::identity(f, d), g_action});
  Tensor c(f, {{"v", d}, {"h", 2}, {"w", d}});
  for (std::size_t v = 0; v < d; ++v) c.set_at({v, degree[v], v}, 1);
  return make_yd(Flavor::LL, M, c);
}

std::vector<YDModule> small_yd(const std::string& name, const Ambient& A) {
  std::vector<YDModule> out;
  for (const YDModule& M : builtin_yd_modules(name, A))
    if (M.dim() <= 2) out.push_back(M);
  return out;
}

}  // namespace

TEST_CASE("kZ2 duals: g acts by the transpose and the grading is kept") {
  const Ambient A = builtin("kZ2");
  const Field& f = A.H.field();
  const LinearMap g = LinearMap::from_rows(f, {{1, 1, 0}, {0, -1, 0}, {0, 0, -1}});
  const YDModule V = graded(A.H, g, {0, 0, 1});
  REQUIRE(verify_yd(A.H, V).all_passed());
  for (DualSide side : {DualSide::left, DualSide::right}) {
    const YDDualData D = yd_dual(A, V, side);
    CHECK(basis_action(A.H, D.dual.module, 1) == g.transpose());
    CHECK(D.dual.coaction == V.coaction);
    CHECK(check_yd_dual(A, V, D).all_passed());
  }
}

TEST_CASE("a module that is not YD has no checked dual") {
  const Ambient A = builtin("kZ2");
  const Field& f = A.H.field();
  const YDModule bad = graded(A.H, LinearMap::from_rows(f, {{0, 1}, {1, 0}}), {0, 1});
  CHECK_THROWS_AS(yd_dual(A, bad, DualSide::left), NotInYD);
}

TEST_CASE("element identities on every builtin") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const Ambient A = builtin(name, f);
      const VerificationReport l = dual_pq_relations(A);
      CHECK(l.has("(fo1)"));
      CHECK(l.has("(fo2)"));
      CHECK_MESSAGE(l.all_passed(), l.first_failure());
      const VerificationReport r = rigid_identities(A);
      CHECK(r.has("(uf)"));
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
    }
}

TEST_CASE("duals, transposes and canonical isomorphisms") {
  const Field f = Field::prime(101);
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const Ambient A = builtin(name, f);
    const auto ys = small_yd(name, A);
    REQUIRE_FALSE(ys.empty());
    for (const YDModule& M : ys) {
      for (DualSide side : {DualSide::left, DualSide::right}) {
        const VerificationReport r = check_yd_dual(A, M, yd_dual(A, M, side));
        CHECK_MESSAGE(r.all_passed(), r.first_failure());
        const YDMorphism id{M, M, LinearMap::identity(f, M.dim())};
        CHECK(yd_transpose(A, id, side).map.is_identity());
      }
      const CanonicalIso th = canonical_theta(A, M);
      CHECK(th.map.map.is_identity());
      CHECK(canonical_theta_prime(A, M).map.map.is_identity());
      const GammaPair g = canonical_gamma(A, M);
      for (const CanonicalIso& iso : {th, canonical_theta_prime(A, M), canonical_Theta(A, M), g.right, g.left}) {
        CAPTURE(iso_kind_name(iso.kind));
        const VerificationReport r = check_iso(A, iso);
        CHECK_MESSAGE(r.all_passed(), r.first_failure());
      }
    }
    const SigmaTriple s = canonical_sigma(A, ys[0], ys.back(), true);
    for (const CanonicalIso& iso : {s.star, s.star_left, s.phi}) {
      CAPTURE(iso_kind_name(iso.kind));
      const VerificationReport r = check_iso(A, iso);
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
    }
  }
}

TEST_CASE("transpose of a non-trivial morphism") {
  const Ambient A = builtin("kZ2");
  const Field& f = A.H.field();
  const YDModule V = graded(A.H, LinearMap::from_rows(f, {{1, 0}, {0, -1}}), {0, 1});
  const YDMorphism nu{V, V, LinearMap::from_rows(f, {{3, 0}, {0, 7}})};
  CHECK(yd_transpose(A, nu, DualSide::left).map == nu.map.transpose());
  CHECK(yd_transpose(A, nu, DualSide::right).map == nu.map.transpose());
}

TEST_CASE("QT embeddings: Γ by u and σ* by R⁻¹") {
  for (const char* name : {"kZ2_Rt", "sweedler4_Rtri", "dZ2"}) {
    CAPTURE(name);
    const Ambient A = builtin(name, Field::prime(101));
    const auto mods = builtin_modules(name, A.H);
    for (std::size_t i = 0; i < mods.size() && i < 3; ++i) {
      const VerificationReport r = qt_canonical_forms(A, mods[i], mods[(i + 1) % mods.size()]);
      CHECK(r.has("co1"));
      CHECK(r.has("co2"));
      CHECK_MESSAGE(r.all_passed(), r.first_failure());
    }
  }
  const Ambient H2 = builtin("H2");
  const auto mods = builtin_modules("H2", H2.H);
  const VerificationReport r = qt_canonical_forms(H2, mods[0], mods[0]);
  REQUIRE_FALSE(r.entries().empty());
  for (const CheckResult& e : r.entries()) CHECK(e.skipped);
}
