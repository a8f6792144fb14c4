#include "qhopf/suites.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qhopf/braided_hopf.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/sampling.hpp"

namespace qhopf {

namespace {

constexpr Flavor kFlavors[] = {Flavor::LL, Flavor::LR, Flavor::RL, Flavor::RR};

void merge_prefixed(VerificationReport& rep, const VerificationReport& sub, const std::string& prefix) {
  for (const CheckResult& c : sub.entries()) {
    if (c.skipped) rep.skip(prefix + c.tag, c.detail);
    else rep.add(prefix + c.tag, c.passed, c.detail);
  }
}

// Constructions that cross-check themselves throw ConsistencyFailure("<tag>: <detail>").
template <class Body>
void guarded(VerificationReport& rep, std::initializer_list<std::string> tags, Body&& body) {
  try {
    body();
    for (const std::string& t : tags) rep.add(t, true);
  } catch (const ConsistencyFailure& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    if (colon == std::string::npos) rep.add(*tags.begin(), false, what);
    else rep.add(what.substr(0, colon), false, what.substr(colon + 2));
  }
}

void expect_same(VerificationReport& rep, const std::string& tag, const YDModule& a, const YDModule& b) {
  if (a.flavor != b.flavor) {
    rep.add(tag, false, "flavors differ: " + flavor_name(a.flavor) + " vs " + flavor_name(b.flavor));
    return;
  }
  rep.expect_equal(tag, a.module.action, b.module.action, "action");
  rep.expect_equal(tag, a.coaction, b.coaction, "coaction");
}

// A nonzero morphism out of M. The target is N when Hom(M, N) has a nonzero element in a few
// draws, otherwise a conjugate of M reached by the conjugating matrix.
YDMorphism some_morphism(Sampler& rng, const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N) {
  const auto basis = yd_hom_basis(H, M, N);
  for (int attempt = 0; attempt < 4 && !basis.empty(); ++attempt) {
    LinearMap f = random_combination(rng, basis, N.dim(), M.dim());
    if (!f.is_zero()) return {M, N, std::move(f)};
  }
  auto [P, P_inv] = rng.invertible(M.dim());
  return {M, yd_conjugate(M, P, P_inv), P};
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite) {
  const auto& names = suite_names();
  const auto k = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), suite) - names.begin());
  return seed ^ ((k + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",   "twist",     "pq",        "qt",     "yd",
                                              "functors", "rigidity", "canonical", "braided"};
  return names;
}

std::vector<std::string> parse_suite_selection(std::string_view text) {
  std::vector<bool> chosen(suite_names().size(), false);
  bool any = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string name(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (name.empty()) continue;
    any = true;
    if (name == "all") {
      std::fill(chosen.begin(), chosen.end(), true);
      continue;
    }
    const auto& names = suite_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    chosen[static_cast<std::size_t>(it - names.begin())] = true;
  }
  if (!any) throw std::invalid_argument("empty suite selection");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]) out.push_back(suite_names()[i]);
  return out;
}

SuiteRunner::SuiteRunner(AlgebraSpec subject, SuiteOptions options)
    : subject_(std::move(subject)), options_(options) {
  try {
    ambient_ = make_ambient(subject_.H, subject_.R);
  } catch (const NotQT& e) {
    qt_error_ = e.what();
  } catch (const std::exception& e) {
    setup_error_ = e.what();
  }
  if (!ambient_ && setup_error_.empty()) {
    try {
      ambient_ = make_ambient(subject_.H);
    } catch (const std::exception& e) {
      setup_error_ = e.what();
    }
  }

  const QuasiHopfAlgebra& H = subject_.H;
  modules_.push_back(trivial_module(H, Side::left));
  for (const HModule& m : subject_.modules)
    if (m.side == Side::left && m.dim <= options_.max_dim) modules_.push_back(m);
  yd_.push_back(trivial_yd(H, Flavor::LL));
  for (const YDModule& y : subject_.yd_modules)
    if (y.flavor == Flavor::LL && y.dim() <= options_.max_dim) yd_.push_back(y);
  if (ambient_ && ambient_->qt && subject_.yd_modules.empty())
    for (std::size_t i = 1; i < modules_.size(); ++i) yd_.push_back(qt_embed(*ambient_, modules_[i]));
}

SuiteResult SuiteRunner::run(const std::string& suite) const {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult out{suite, {}, 0};
  const std::uint64_t seed = suite_seed(options_.seed, suite);
  try {
    if (suite == "axioms") out.report = axioms();
    else if (!ambient_) out.report.add("setup", false, setup_error_);
    else if (suite == "twist") out.report = twist();
    else if (suite == "pq") out.report = pq();
    else if (suite == "qt") out.report = qt();
    else if (suite == "yd") out.report = yd(seed);
    else if (suite == "functors") out.report = functors(seed);
    else if (suite == "rigidity") out.report = rigidity(seed);
    else if (suite == "canonical") out.report = canonical(seed);
    else if (suite == "braided") out.report = braided();
    else throw std::invalid_argument("unknown suite '" + suite + "'");
  } catch (const Error& e) {
    out.report.add("setup", false, e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

VerificationReport SuiteRunner::axioms() const {
  VerificationReport rep = verify_quasi_bialgebra(subject_.H);
  rep.merge(verify_antipode(subject_.H));
  return rep;
}

VerificationReport SuiteRunner::twist() const { return check_drinfeld_twist(ambient_->H, ambient_->tw); }

VerificationReport SuiteRunner::pq() const {
  const Ambient& A = *ambient_;
  VerificationReport rep = check_pq_elements(A.H, A.pq, A.tw);
  rep.merge(dual_pq_relations(A));
  return rep;
}

VerificationReport SuiteRunner::qt() const {
  VerificationReport rep;
  if (!subject_.R) {
    for (const char* t : {"(qt1)", "(qt2)", "(qt3)", "(qt4)", "(invr1)", "(invr2)", "(elmu)", "(sqina)", "S2-u",
                          "(sext)", "(ext)", "u-inverse"})
      rep.skip(t, "no R-matrix");
    return rep;
  }
  const Ambient& A = *ambient_;
  rep = verify_qt(A.H, *subject_.R);
  if (!A.qt) {
    rep.add("qt-setup", false, qt_error_);
    return rep;
  }
  const AlgebraElement& R = A.qt->R;
  const RInverseRoutes routes = r_inverse_routes(A.H, A.pq, R);
  rep.expect_equal("(invr1)", routes.closed1.tensor(), routes.solved.tensor(), "closed form vs solve");
  rep.expect_equal("(invr2)", routes.closed2.tensor(), routes.solved.tensor(), "closed form vs solve");
  const UElements u = compute_u(A.H, A.pq, R);
  rep.expect_equal("(elmu)", u.u.tensor(), A.qt->u.tensor());
  rep.merge(check_u(A.H, A.tw, R, u));
  return rep;
}

VerificationReport SuiteRunner::yd(std::uint64_t seed) const {
  const Ambient& A = *ambient_;
  const QuasiHopfAlgebra& H = A.H;
  const auto C = yd_category(H);
  Sampler rng(seed, A.field());
  VerificationReport rep;
  for (std::size_t s = 0; s < options_.samples; ++s) {
    YDModule ll[4];
    for (auto& m : ll) m = random_yd_module(rng, yd_, options_.max_dim);
    rep.merge(check_y3p(A, ll[0]));
    for (const Flavor fl : kFlavors) {
      const std::string pre = flavor_name(fl) + " ";
      YDModule X = to_flavor(A, ll[0], fl), Y = to_flavor(A, ll[1], fl), Z = to_flavor(A, ll[2], fl);
      YDModule W = to_flavor(A, ll[3], fl);
      rep.merge(verify_yd(H, X));
      const LinearMap c = yd_braiding(H, X, Y);
      rep.add(pre + "braiding-morphism", is_yd_morphism(H, yd_tensor(H, X, Y), yd_tensor(H, Y, X), c));
      if (fl == Flavor::LL || fl == Flavor::LR) {
        const LinearMap ci = yd_braiding_inv_closed(A, X, Y);
        rep.expect_equal(pre + "braiding-inverse", ci * c, id_map(A.field(), X.dim() * Y.dim()));
        rep.expect_equal(pre + "braiding-inverse", c * ci, id_map(A.field(), X.dim() * Y.dim()));
      } else {
        rep.add(pre + "braiding-inverse", c.inverse().has_value(), "braiding is singular");
      }
      rep.add(pre + "hexagon", hexagons_hold(A.field(), C, X, Y, Z));
      const YDMorphism f = some_morphism(rng, H, X, W);
      const YDMorphism g = some_morphism(rng, H, Y, Z);
      rep.add(pre + "braiding-natural", braiding_natural(C, X, Y, f.dst, g.dst, f.map, g.map));
      rep.add(pre + "associator-natural",
              associator_natural(C, X, Y, Z, f.dst, g.dst, Z, f.map, g.map, id_map(A.field(), Z.dim())));
    }
  }
  return rep;
}

VerificationReport SuiteRunner::functors(std::uint64_t seed) const {
  const Ambient& A = *ambient_;
  const QuasiHopfAlgebra& H = A.H;
  Sampler rng(seed, A.field());
  VerificationReport rep;
  for (std::size_t s = 0; s < options_.samples; ++s) {
    const YDModule M = random_yd_module(rng, yd_, options_.max_dim);
    const YDModule N = random_yd_module(rng, yd_, options_.max_dim);
    const YDModule lr = functor_F_inv(A, M);
    const YDModule rr = functor_K(A, M);
    const YDModule rl = functor_G_inv(A, functor_F_inv(A, N));
    expect_same(rep, "F-roundtrip", functor_F(A, lr), M);
    expect_same(rep, "F-roundtrip", functor_F_inv(A, functor_F(A, lr)), lr);
    rep.expect_equal("F-inverse-closed", functor_F_inv_closed(A, M), lr.coaction);
    expect_same(rep, "K-roundtrip", functor_K_inv(A, rr), M);
    expect_same(rep, "K-roundtrip", functor_K(A, functor_K_inv(A, rr)), rr);
    expect_same(rep, "G-roundtrip", functor_G(A, functor_G_inv(A, lr)), lr);
    expect_same(rep, "G-roundtrip", functor_G_inv(A, functor_G(A, rl)), rl);

    // The functors act as the identity on maps.
    const YDMorphism f = some_morphism(rng, H, M, N);
    bool ok = true;
    for (const Flavor fl : kFlavors) {
      ok = ok && is_yd_morphism(H, to_flavor(A, f.src, fl), to_flavor(A, f.dst, fl), f.map);
    }
    rep.add("functor-morphisms", ok);
  }
  return rep;
}

VerificationReport SuiteRunner::rigidity(std::uint64_t seed) const {
  const Ambient& A = *ambient_;
  const QuasiHopfAlgebra& H = A.H;
  Sampler rng(seed, A.field());
  VerificationReport rep;
  for (const HModule& m : modules_) merge_prefixed(rep, check_snakes(H, m), "H-mod ");
  for (std::size_t s = 0; s < options_.samples; ++s) {
    const YDModule M = random_yd_module(rng, yd_, options_.max_dim);
    const YDModule N = random_yd_module(rng, yd_, options_.max_dim);
    merge_prefixed(rep, check_snakes(H, M.module), "H-mod ");
    for (const DualSide side : {DualSide::left, DualSide::right}) {
      const std::string pre = side == DualSide::left ? "left-dual " : "right-dual ";
      merge_prefixed(rep, check_yd_dual(A, M, yd_dual(A, M, side, false)), pre);
    }
    const YDMorphism nu = some_morphism(rng, H, M, N);
    guarded(rep, {"(rt)"}, [&] { yd_transpose(A, nu, DualSide::left); });
    guarded(rep, {"(lt)"}, [&] { yd_transpose(A, nu, DualSide::right); });
  }
  return rep;
}

VerificationReport SuiteRunner::canonical(std::uint64_t seed) const {
  const Ambient& A = *ambient_;
  Sampler rng(seed, A.field());
  VerificationReport rep = rigid_identities(A);

  std::vector<YDModule> test = yd_;
  const std::size_t extra = std::max<std::size_t>(1, options_.samples / 5);
  for (std::size_t s = 0; s < extra; ++s) test.push_back(random_yd_module(rng, yd_, options_.max_dim));

  for (const YDModule& M : test) {
    guarded(rep, {"(theta)", "(thetam)"}, [&] { rep.merge(check_iso(A, canonical_theta(A, M))); });
    guarded(rep, {"theta-prime", "theta-prime-inv"}, [&] { rep.merge(check_iso(A, canonical_theta_prime(A, M))); });
    guarded(rep, {"(rly)", "(irly)"}, [&] { rep.merge(check_iso(A, canonical_Theta(A, M))); });
    guarded(rep, {"(gr)", "(igr)", "(gl)", "(igl)"}, [&] {
      const GammaPair g = canonical_gamma(A, M);
      rep.merge(check_iso(A, g.right));
      rep.merge(check_iso(A, g.left));
    });
  }
  // The φ* composites are cubic in dim M·dim N, so they run on the small pairs only.
  for (std::size_t i = 0; i < test.size(); ++i) {
    const YDModule& M = test[i];
    const YDModule& N = test[(i + 1) % test.size()];
    const bool composites = M.dim() * N.dim() <= 4;
    auto body = [&] {
      const SigmaTriple s = canonical_sigma(A, M, N, composites);
      rep.merge(check_iso(A, s.star));
      rep.merge(check_iso(A, s.star_left));
      rep.merge(check_iso(A, s.phi));
    };
    if (composites) guarded(rep, {"(phir)", "(sat)", "(ydsr)", "(ydsl)"}, body);
    else guarded(rep, {"(ydsr)", "(ydsl)"}, body);
  }
  for (std::size_t i = 0; i < modules_.size(); ++i)
    rep.merge(qt_canonical_forms(A, modules_[i], modules_[(i + 1) % modules_.size()]));
  return rep;
}

VerificationReport SuiteRunner::braided() const {
  const Ambient& A = *ambient_;
  VerificationReport rep;
  merge_prefixed(rep, verify_braided_hopf(A, trivial_braided_hopf(A)), "k ");
  merge_prefixed(rep, check_h0_algebra(A), "H0-algebra ");
  if (!A.qt) {
    for (const char* t : {"H0", "H0-duals", "theta", "H*", "mu"}) rep.skip(t, "no R-matrix");
    return rep;
  }
  const BraidedHopfAlgebra H0 = build_H0(A);
  merge_prefixed(rep, verify_braided_hopf(A, H0), "H0 ");
  const std::pair<BraidedVariant, const char*> variants[] = {
      {BraidedVariant::op, "H0-op "}, {BraidedVariant::cop, "H0-cop "}, {BraidedVariant::op_cop, "H0-op-cop "}};
  for (const auto& [v, name] : variants)
    merge_prefixed(rep, verify_braided_hopf(A, braided_variant(A, H0, v), variant_braiding(v)), name);

  std::optional<H0Duals> D;
  guarded(rep,
          {"dual-mult", "dual-comult", "(dmhz1)", "(dmhz2)", "(dcmhz)", "(dcmhz2)", "(duhz)", "(dchz)", "(dchz2)",
           "(danthz)", "dual-coaction"},
          [&] { D = h0_duals(A, H0); });
  if (!D) return rep;
  merge_prefixed(rep, verify_braided_hopf(A, D->left), "H0* ");
  merge_prefixed(rep, verify_braided_hopf(A, D->right), "*H0 ");
  const ThetaH0 theta = theta_H0(A, H0, *D);
  rep.merge(theta.report);
  rep.merge(check_iso(A, theta.iso));

  const BraidedHopfAlgebra Hs = build_underline_Hstar(A);
  merge_prefixed(rep, verify_braided_hopf(A, Hs), "H* ");
  rep.merge(hstar_identities(A));
  if (A.qt->triangular) rep.merge(mu_iso(A, *D, Hs, theta).report);
  else rep.skip("mu", "not triangular");
  return rep;
}

}  // namespace qhopf
