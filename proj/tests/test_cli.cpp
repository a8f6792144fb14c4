#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qhopf/catalog.hpp"
#include "qhopf/sampling.hpp"
#include "qhopf/spec_format.hpp"
#include "qhopf/suites.hpp"

using namespace qhopf;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(QHOPF_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("verify exit codes") {
  Run r = cli("verify builtin:H2 --suites axioms,twist,pq");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "(q6): PASS"));
  CHECK(contains(r.out, "result: "));

  r = cli("verify builtin:kZ2 --suites all");
  CHECK(r.status == 0);
  CHECK(contains(r.out, " 0 failed"));

  // β = g breaks only the antipode axiom that involves β.
  const auto bad = temp_file("qhopf_test_cli_bad.qhs");
  std::string text = format_spec(builtin_spec("kZ2"));
  text.replace(text.find("beta 0 1"), 8, "beta 1 1");
  std::ofstream(bad) << text;
  r = cli("verify " + bad.string() + " --suites axioms");
  std::filesystem::remove(bad);
  CHECK(r.status == 1);
  CHECK(contains(r.out, "(q6): FAIL"));
  CHECK(contains(r.out, "first failure: [axioms] (q6)"));

  r = cli("verify /nonexistent/file.qhs");
  CHECK(r.status == 2);
  r = cli("verify builtin:kZ2 --suites bogus");
  CHECK(r.status == 2);
  r = cli("verify builtin:nope");
  CHECK(r.status == 2);
}

TEST_CASE("derive") {
  Run r = cli("derive builtin:kZ2 f");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "f = 1⊗1"));

  r = cli("derive builtin:kZ2_Rt u");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "u = g"));

  r = cli("derive builtin:sweedler4_Rtri mu --field fp:101");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "mu "));

  r = cli("derive builtin:dZ2 mu");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "not triangular"));

  r = cli("derive builtin:H2 u");
  CHECK(r.status == 2);
}

TEST_CASE("report is JSON and reproducible") {
  const std::string args = "report builtin:sweedler4_Rtri --field fp:101 --suites qt,rigidity --samples 3 --seed 7";
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"algebra\""));
  CHECK(contains(a.out, "\"(qt1)\": \"pass\""));
  CHECK(contains(a.out, "\"rigidity\""));
  CHECK_FALSE(contains(a.out, "seconds"));
  CHECK(contains(cli(args + " --timing").out, "seconds"));
}

TEST_CASE("export then verify") {
  const auto path = temp_file("qhopf_test_cli_export.qhs");
  Run r = cli("export builtin:dZ2 --out " + path.string());
  CHECK(r.status == 0);
  const AlgebraSpec s = load_spec(path.string());
  CHECK(format_spec(s) == format_spec(builtin_spec("dZ2")));
  r = cli("verify " + path.string() + " --suites axioms,qt");
  std::filesystem::remove(path);
  CHECK(r.status == 0);
}

TEST_CASE("suite selection") {
  CHECK(parse_suite_selection("all") == suite_names());
  CHECK(parse_suite_selection("pq,axioms,pq") == std::vector<std::string>{"axioms", "pq"});
  CHECK_THROWS_AS(parse_suite_selection(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_selection("axioms,nope"), std::invalid_argument);
}

TEST_CASE("suite runner on a broken algebra records failures instead of throwing") {
  std::string text = format_spec(builtin_spec("kZ2"));
  text.replace(text.find("beta 0 1"), 8, "beta 1 1");
  const SuiteRunner runner(parse_spec(text, false), {0, 2, 2});
  for (const std::string& s : suite_names()) {
    CAPTURE(s);
    SuiteResult r{};
    CHECK_NOTHROW(r = runner.run(s));
    CHECK(r.suite == s);
  }
  CHECK_FALSE(runner.run("axioms").report.passed("(q6)"));
}

TEST_CASE("sampling is seeded and Hom bases have the expected dimension") {
  const Field f = Field::prime(101);
  Sampler a(42, f), b(42, f);
  CHECK(a.matrix(3, 3) == b.matrix(3, 3));
  const auto [P, Pi] = a.invertible(4);
  CHECK((P * Pi).is_identity());

  // kZ2 characters: Hom(χ, χ) is 1-dim, Hom(χ, ε) is 0; the regular module has End of dim 2.
  const QuasiHopfAlgebra H = builtin_algebra("kZ2", f);
  const auto mods = builtin_modules("kZ2", H);
  REQUIRE(mods.size() >= 2);
  CHECK(module_hom_basis(H, mods[0], mods[0]).size() == 1);
  CHECK(module_hom_basis(H, mods[0], mods[1]).empty());
  const HModule S = direct_sum(mods[0], mods[1]);
  CHECK(module_hom_basis(H, S, S).size() == 2);
  Sampler rng(1, f);
  for (int i = 0; i < 10; ++i) {
    const HModule M = random_module(rng, mods, 3);
    CHECK(M.dim <= 3);
    CHECK(verify_module(H, M).all_passed());
  }
}
