#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qhopf/braided_hopf.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/spec_format.hpp"
#include "qhopf/suites.hpp"

namespace {

using namespace qhopf;

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kInputError = 2;

// Load and prerequisite failures; always exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string algebra;
  std::string field;
  std::string out;
};

struct SuiteArgs {
  std::string suites = "all";
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  bool timing = false;
};

AlgebraSpec load_subject(const CommonArgs& args, bool validate) {
  try {
    std::optional<Field> f;
    if (!args.field.empty()) f = parse_field(args.field);
    const std::string prefix = "builtin:";
    if (args.algebra.rfind(prefix, 0) == 0) {
      const std::string name = args.algebra.substr(prefix.size());
      if (!is_builtin(name)) throw InputError("unknown builtin '" + name + "'");
      return builtin_spec(name, f.value_or(Field::rationals()));
    }
    AlgebraSpec spec = load_spec(args.algebra, validate);
    return f ? spec_over(spec, *f) : spec;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(args.algebra + ": " + e.what());
  }
}

void write_output(const CommonArgs& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(args.out, std::ios::binary);
  if (!os) throw InputError("cannot write " + args.out);
  os << text;
}

std::vector<SuiteResult> run_suites(const AlgebraSpec& spec, const SuiteArgs& s) {
  std::vector<std::string> names;
  try {
    names = parse_suite_selection(s.suites);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  SuiteRunner runner(spec, SuiteOptions{s.seed, s.samples, 3});
  std::vector<SuiteResult> out;
  for (const std::string& n : names) out.push_back(runner.run(n));
  return out;
}

int cmd_verify(const CommonArgs& args, const SuiteArgs& s) {
  const AlgebraSpec spec = load_subject(args, false);
  const std::vector<SuiteResult> results = run_suites(spec, s);
  std::ostringstream os;
  os << "algebra: " << spec.H.name() << " (field " << field_descriptor(spec.H.field()) << ", seed " << s.seed
     << ", samples " << s.samples << ")\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::optional<std::pair<std::string, CheckResult>> first;
  for (const SuiteResult& r : results) {
    os << "== " << r.suite;
    if (s.timing) os << " (" << r.seconds << " s)";
    os << '\n';
    for (const CheckResult& c : r.report.summary()) {
      if (c.skipped) {
        ++skipped;
        os << c.tag << ": SKIPPED (" << c.detail << ")\n";
      } else if (c.passed) {
        ++passed;
        os << c.tag << ": PASS\n";
      } else {
        ++failed;
        os << c.tag << ": FAIL\n";
        if (!first) first = {r.suite, c};
      }
    }
  }
  os << "result: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  if (first) os << "first failure: [" << first->first << "] " << first->second.tag << "\n  " << first->second.detail << '\n';
  write_output(args, os.str());
  return failed == 0 ? kOk : kIdentityFailure;
}

int cmd_report(const CommonArgs& args, const SuiteArgs& s) {
  const AlgebraSpec spec = load_subject(args, false);
  const std::vector<SuiteResult> results = run_suites(spec, s);
  nlohmann::ordered_json j;
  j["algebra"] = spec.H.name();
  j["field"] = field_descriptor(spec.H.field());
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  bool all = true;
  double total = 0;
  nlohmann::ordered_json suites = nlohmann::ordered_json::object();
  for (const SuiteResult& r : results) {
    nlohmann::ordered_json ids = nlohmann::ordered_json::object();
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    bool ok = true;
    for (const CheckResult& c : r.report.summary()) {
      ids[c.tag] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
      if (!c.passed || c.skipped) details[c.tag] = c.detail;
      ok = ok && c.passed;
    }
    all = all && ok;
    total += r.seconds;
    nlohmann::ordered_json sj;
    sj["passed"] = ok;
    if (s.timing) sj["seconds"] = r.seconds;
    sj["identities"] = std::move(ids);
    if (!details.empty()) sj["details"] = std::move(details);
    suites[r.suite] = std::move(sj);
  }
  j["suites"] = std::move(suites);
  j["passed"] = all;
  if (s.timing) j["total_seconds"] = total;
  write_output(args, j.dump(2) + "\n");
  return all ? kOk : kIdentityFailure;
}

// Σ c·e_i⊗e_j... with basis names; coefficient 1 is omitted.
std::string element_text(const QuasiHopfAlgebra& H, const AlgebraElement& x) {
  const auto& names = H.structure().basis;
  const Tensor& t = x.tensor();
  std::string out;
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    Scalar v = t.get(flat);
    if (v == 0) continue;
    const bool neg = H.field().is_rational() && v < 0;
    if (neg) v = -v;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (v != 1) out += to_string(v) + "·";
    const auto idx = t.multi_index(flat);
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "⊗" : "") + names[idx[k]];
  }
  return out.empty() ? "0" : out;
}

void emit_tensor(std::ostringstream& os, const char* kw, const Tensor& t) {
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const Scalar v = t.get(flat);
    if (v == 0) continue;
    os << kw;
    for (const std::size_t i : t.multi_index(flat)) os << ' ' << i;
    os << ' ' << to_string(v) << '\n';
  }
}

// Entries of a map written "kw src... dst... s", splitting flattened indices by the factor dims.
void emit_map(std::ostringstream& os, const char* kw, const LinearMap& m, std::size_t n) {
  auto split = [n](std::size_t flat, std::size_t total) {
    std::vector<std::size_t> idx;
    for (std::size_t d = total; d > 1; d /= n) {
      idx.insert(idx.begin(), flat % n);
      flat /= n;
    }
    return idx;
  };
  for (std::size_t src = 0; src < m.src_dim(); ++src)
    for (std::size_t dst = 0; dst < m.dst_dim(); ++dst) {
      const Scalar v = m.get(dst, src);
      if (v == 0) continue;
      os << kw;
      for (std::size_t i : split(src, m.src_dim())) os << ' ' << i;
      for (std::size_t i : split(dst, m.dst_dim())) os << ' ' << i;
      os << ' ' << to_string(v) << '\n';
    }
}

int cmd_derive(const CommonArgs& args, const std::string& what) {
  const AlgebraSpec spec = load_subject(args, true);
  const bool needs_r = what == "u" || what == "rinv" || what == "h0" || what == "mu";
  if (needs_r && !spec.R) throw InputError("'" + what + "' needs an R-matrix; " + spec.H.name() + " has none");
  std::optional<Ambient> amb;
  try {
    amb = make_ambient(spec.H, spec.R);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const Ambient& A = *amb;
  const QuasiHopfAlgebra& H = A.H;
  std::ostringstream os;
  os << "# " << what << " for " << H.name() << " over " << field_descriptor(H.field()) << '\n';
  if (what == "f") {
    os << "f = " << element_text(H, A.tw.f) << '\n';
    os << "f_inv = " << element_text(H, A.tw.f_inv) << '\n';
  } else if (what == "pq") {
    os << "p_R = " << element_text(H, A.pq.p_R) << '\n';
    os << "q_R = " << element_text(H, A.pq.q_R) << '\n';
    os << "p_L = " << element_text(H, A.pq.p_L) << '\n';
    os << "q_L = " << element_text(H, A.pq.q_L) << '\n';
  } else if (what == "u") {
    os << "u = " << element_text(H, A.qt->u) << '\n';
    os << "u_inv = " << element_text(H, A.qt->u_inv) << '\n';
  } else if (what == "rinv") {
    os << "R_inv = " << element_text(H, A.qt->R_inv) << '\n';
  } else if (what == "h0") {
    const BraidedHopfAlgebra B = build_H0(A);
    const std::size_t n = H.dim();
    emit_tensor(os, "act", B.carrier.module.action);
    emit_tensor(os, "coact", B.carrier.coaction);
    emit_map(os, "mult", B.mult, n);
    emit_map(os, "unit", B.unit, n);
    emit_map(os, "comult", B.comult, n);
    emit_map(os, "counit", B.counit, n);
    emit_map(os, "antipode", B.antipode, n);
  } else if (what == "mu") {
    if (!A.qt->triangular) throw InputError("not triangular: mu needs R⁻¹ = R₂₁");
    const BraidedHopfAlgebra B = build_H0(A);
    const H0Duals D = h0_duals(A, B);
    const ThetaH0 theta = theta_H0(A, B, D);
    const MuIso mu = mu_iso(A, D, build_underline_Hstar(A), theta);
    emit_map(os, "mu", mu.map.map, H.dim());
  } else {
    throw InputError("unknown derived object '" + what + "'");
  }
  write_output(args, os.str());
  return kOk;
}

int cmd_export(const CommonArgs& args) {
  write_output(args, format_spec(load_subject(args, true)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for finite-dimensional quasi-Hopf algebras"};
  app.require_subcommand(1);
  CommonArgs common;
  SuiteArgs suite;
  std::string what;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("algebra,--algebra", common.algebra, "builtin:<name> or a spec file path")->required();
    sub->add_option("--field", common.field, "override the field: q | fp:<p>");
    sub->add_option("--out", common.out, "write output to this file instead of stdout");
  };
  auto add_suite = [&](CLI::App* sub) {
    sub->add_option("--suites", suite.suites, "comma-separated suites or 'all'")->capture_default_str();
    sub->add_option("--seed", suite.seed, "sampling seed")->capture_default_str();
    sub->add_option("--samples", suite.samples, "random modules per sampled check")->capture_default_str();
    sub->add_flag("--timing", suite.timing, "include wall-clock timings (output is then not reproducible)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites and print one line per identity");
  add_common(verify);
  add_suite(verify);
  CLI::App* report = app.add_subcommand("report", "run verification suites and emit a JSON summary");
  add_common(report);
  add_suite(report);
  CLI::App* derive = app.add_subcommand("derive", "compute a derived element or structure");
  add_common(derive);
  derive->add_option("what", what, "f | pq | u | rinv | h0 | mu")
      ->required()
      ->check(CLI::IsMember({"f", "pq", "u", "rinv", "h0", "mu"}));
  CLI::App* exp = app.add_subcommand("export", "write the algebra as a spec file");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify) return cmd_verify(common, suite);
    if (*report) return cmd_report(common, suite);
    if (*derive) return cmd_derive(common, what);
    return cmd_export(common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
