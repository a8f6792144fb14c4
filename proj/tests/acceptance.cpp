// Acceptance runner: one criterion per invocation, one PASS/FAIL line per criterion.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhopf/braided_hopf.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/spec_format.hpp"
#include "qhopf/suites.hpp"

using namespace qhopf;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kAll = {"kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2", "dZ2"};
const std::vector<std::string> kQT = {"kZ2", "kZ2_Rt", "sweedler4_Rtri", "dZ2"};
const Field kQ = Field::rationals();
const Field kF101 = Field::prime(101);

// Collects sub-check lines; the criterion passes when every sub-check does.
class Criterion {
 public:
  void check(const std::string& label, bool ok, const std::string& detail = {}) {
    std::cout << "  " << label << ": " << (ok ? "ok" : "FAIL");
    if (!ok && !detail.empty()) std::cout << "\n    " << indent(detail);
    std::cout << '\n';
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  static std::string indent(const std::string& s) {
    std::string out;
    for (char c : s) {
      out += c;
      if (c == '\n') out += "    ";
    }
    return out;
  }
  bool ok_ = true;
};

std::string label(const std::string& name, const Field& f) { return name + " " + field_descriptor(f); }

// Runs the suites and requires that every listed tag is present and passing, and that the
// suites report no failure anywhere.
void run_suites(Criterion& c, const std::string& name, const Field& f, const std::vector<std::string>& suites,
                const std::vector<std::string>& required, SuiteOptions opt = {}) {
  const SuiteRunner runner(builtin_spec(name, f), opt);
  VerificationReport all;
  for (const std::string& s : suites) all.merge(runner.run(s).report);
  std::string missing;
  for (const std::string& t : required)
    if (!all.passed(t)) missing += (missing.empty() ? "" : ", ") + t;
  std::string detail = all.first_failure();
  if (!missing.empty()) detail = "missing or failing: " + missing + (detail.empty() ? "" : "\n" + detail);
  c.check(label(name, f) + " [" + std::to_string(all.entries().size()) + " checks]", all.all_passed() && missing.empty(),
          detail);
}

void report_result(Criterion& c, const std::string& what, const VerificationReport& r) {
  c.check(what, r.all_passed(), r.first_failure());
}

std::vector<std::string> with_prefix(const std::string& prefix, const std::vector<std::string>& tags) {
  std::vector<std::string> out;
  for (const std::string& t : tags) out.push_back(prefix + t);
  return out;
}

void criterion1(Criterion& c) {
  const std::vector<std::string> tags = {"(q1)",  "(q2)",  "(q3)",  "(q4)", "(q5)",  "(q6)",  "(q7)",
                                         "(gdf)", "(l3a)", "(ca)",  "(pf)", "(qr1)", "(qr1a)", "(ql1a)",
                                         "(pqr)", "(pql)", "(pqla)", "(tpr2)", "(fo1)", "(fo2)"};
  for (const Field& f : {kQ, kF101})
    for (const std::string& n : kAll) run_suites(c, n, f, {"axioms", "twist", "pq"}, tags);
}

void criterion2(Criterion& c) {
  const std::vector<std::string> tags = {"(qt1)",  "(qt2)", "(qt3)",  "(qt4)", "(invr1)", "(invr2)",
                                         "(elmu)", "(sqina)", "S2-u", "(sext)", "(ext)", "u-inverse"};
  for (const Field& f : {kQ, kF101})
    for (const std::string& n : kQT) run_suites(c, n, f, {"qt"}, tags);
}

void criterion3(Criterion& c) {
  std::vector<std::string> tags = {"(y1)", "(y2)", "(y3)", "(y3p)", "(ry1)", "(lry1)", "(rly1)", "(syd)",
                                   "F-roundtrip", "F-inverse-closed", "K-roundtrip", "G-roundtrip"};
  for (const char* fl : {"LL", "LR", "RL", "RR"})
    for (const char* t : {" braiding-morphism", " braiding-inverse", " hexagon", " braiding-natural",
                          " associator-natural"})
      tags.push_back(std::string(fl) + t);
  for (const std::string& n : kAll) run_suites(c, n, kF101, {"yd", "functors"}, tags, {0, 20, 3});
}

void criterion4(Criterion& c) {
  std::vector<std::string> tags = {"(rt)", "(lt)"};
  for (const char* s : {"snake-left-1", "snake-left-2", "snake-right-1", "snake-right-2"}) tags.push_back(std::string("H-mod ") + s);
  for (const char* side : {"left-dual ", "right-dual "})
    for (const char* t : {"dual-yd", "ev-morphism", "coev-morphism", "snake-1", "snake-2"}) tags.push_back(std::string(side) + t);
  for (const Field& f : {kQ, kF101})
    for (const std::string& n : kAll) run_suites(c, n, f, {"rigidity"}, tags, {0, 20, 3});
}

void criterion5(Criterion& c) {
  std::vector<std::string> tags = {"(rly)", "(irly)", "(gr)",  "(igr)", "(gl)",  "(igl)", "(ydsr)", "(ydsl)",
                                   "(phir)", "(theta)", "(thetam)", "(ufo)", "(ufox)", "(uf)", "(sat)"};
  for (const char* k : {"theta", "theta_prime", "Theta", "gamma_r", "gamma_l", "sigma_star", "star_sigma", "phi_star"})
    for (const char* t : {"-left-inverse", "-right-inverse", "-morphism", "-inverse-morphism"}) tags.push_back(std::string(k) + t);
  for (const std::string& n : kAll) run_suites(c, n, kF101, {"canonical"}, tags, {0, 20, 3});
}

void criterion6(Criterion& c) {
  for (const Field& f : {kQ, kF101})
    for (const std::string& n : kQT) {
      const Ambient A = builtin(n, f);
      const auto mods = builtin_modules(n, A.H);
      VerificationReport r;
      for (const HModule& m : mods)
        for (const HModule& k : mods)
          if (m.dim * k.dim <= 4) r.merge(qt_canonical_forms(A, m, k));
      const bool present = r.has("co1") && r.has("co2");
      c.check(label(n, f) + " co1/co2", present && r.all_passed(), present ? r.first_failure() : "co1/co2 not run");
    }
}

void criterion7(Criterion& c) {
  const std::vector<std::string> axioms = {"carrier", "assoc", "unit", "(mal)", "(qca1)", "(qca2)", "(mc1)", "counit",
                                           "(mc2)", "(qcc1)", "(qcc2)", "(by)", "bialgebra-unit", "antipode",
                                           "antipode-morphism"};
  for (const std::string& n : kQT) {
    std::vector<std::string> tags = with_prefix("H0 ", axioms);
    for (const std::string& t : with_prefix("H0* ", axioms)) tags.push_back(t);
    for (const std::string& t : with_prefix("*H0 ", axioms)) tags.push_back(t);
    for (const char* t : {"dual-mult", "dual-comult", "dual-coaction", "theta-u", "theta-u-inverse"}) tags.push_back(t);
    const bool triangular = n != "dZ2";
    if (triangular) {
      for (const char* t : {"theta-algebra", "theta-coalgebra", "mu-inverse", "mu-morphism", "mu-algebra", "mu-unit",
                            "mu-coalgebra", "mu-counit", "chain"})
        tags.push_back(t);
    } else {
      tags.push_back("theta-twisted-algebra");
      tags.push_back("theta-twisted-coalgebra");
    }
    for (const Field& f : {kQ, kF101}) run_suites(c, n, f, {"braided"}, tags);
  }
  // dZ2 is commutative, so the adjoint action on H₀ is trivial and the twisting by R has no effect.
  const Ambient A = builtin("dZ2", kF101);
  const BraidedHopfAlgebra H0 = build_H0(A);
  const ThetaH0 th = theta_H0(A, H0, h0_duals(A, H0));
  report_result(c, "dZ2 twisted identities", th.report);
  c.check("dZ2 plain algebra morphism property fails", !th.plain_algebra,
          "Θ satisfies Θ∘m = m̄∘(Θ⊗Θ) on dZ2");
  c.check("dZ2 plain coalgebra morphism property fails", !th.plain_coalgebra,
          "Θ satisfies Δ̄∘Θ = (Θ⊗Θ)∘Δ on dZ2");
}

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(QHOPF_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void criterion8(Criterion& c) {
  for (const std::string& n : {std::string("sweedler4_Rtri"), std::string("H2")}) {
    const std::string args = "report builtin:" + n + " --field fp:101 --seed 11 --samples 5";
    const Run a = cli(args), b = cli(args);
    c.check("report " + n + " byte-identical", a.status == 0 && !a.out.empty() && a.out == b.out,
            "exit " + std::to_string(a.status) + "/" + std::to_string(b.status));
    const std::string vargs = "verify builtin:" + n + " --field fp:101 --seed 11 --samples 5";
    const Run v = cli(vargs), w = cli(vargs);
    c.check("verify " + n + " byte-identical", v.status == 0 && v.out == w.out);
  }
  const auto dir = std::filesystem::temp_directory_path();
  for (const Field& f : {kQ, kF101})
    for (const std::string& n : kAll) {
      const AlgebraSpec s = builtin_spec(n, f);
      const auto path = dir / ("qhopf_acceptance_" + n + ".qhs");
      save_spec(s, path.string());
      const AlgebraSpec t = load_spec(path.string());
      std::filesystem::remove(path);
      bool ok = same_structure(s.H, t.H) && s.R.has_value() == t.R.has_value() &&
                (!s.R || *s.R == *t.R) && s.modules.size() == t.modules.size() &&
                s.yd_modules.size() == t.yd_modules.size() && format_spec(s) == format_spec(t);
      for (std::size_t i = 0; ok && i < s.modules.size(); ++i) ok = s.modules[i].action == t.modules[i].action;
      for (std::size_t i = 0; ok && i < s.yd_modules.size(); ++i)
        ok = s.yd_modules[i].coaction == t.yd_modules[i].coaction && s.yd_modules[i].module.action == t.yd_modules[i].module.action;
      c.check(label(n, f) + " save/load round trip", ok);
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int which = 0;
  app.add_option("--criterion", which, "criterion number")->required()->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::array<std::function<void(Criterion&)>, 8> runs = {criterion1, criterion2, criterion3, criterion4,
                                                              criterion5, criterion6, criterion7, criterion8};
  // Seconds; 0 means no limit.
  const std::array<double, 8> limits = {10, 5, 60, 0, 0, 0, 30, 0};

  Criterion c;
  const auto t0 = Clock::now();
  try {
    runs[which - 1](c);
  } catch (const std::exception& e) {
    c.check("exception", false, e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const double limit = limits[which - 1];
  if (limit > 0) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << secs << " s, limit " << limit << " s";
    c.check("runtime", secs < limit, os.str());
  }
  std::cout << "criterion " << which << ": " << (c.ok() ? "PASS" : "FAIL") << " (" << std::fixed
            << std::setprecision(2) << secs << " s)\n";
  return c.ok() ? 0 : 1;
}
