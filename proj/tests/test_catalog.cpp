#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <string>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/spec_format.hpp"

using namespace qhopf;

namespace {

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from + "\n");
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("builtin names") {
  const auto& names = builtin_names();
  for (const char* n : {"kZ2", "kZ2_Rt", "H2", "sweedler4_Rtri", "dZ2"}) {
    CHECK(is_builtin(n));
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }
  CHECK_FALSE(is_builtin("nope"));
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("Sweedler algebra structure constants") {
  const QuasiHopfAlgebra H = builtin_algebra("sweedler4_Rtri");
  const AlgebraStructure& s = H.structure();
  REQUIRE(s.basis == std::vector<std::string>{"1", "g", "x", "gx"});
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(s.mult.at({2, 2, c}) == 0);                  // x² = 0
    CHECK(s.mult.at({1, 1, c}) == (c == 0 ? 1 : 0));   // g² = 1
    CHECK(s.mult.at({1, 2, c}) == (c == 3 ? 1 : 0));   // g·x = gx
    CHECK(s.mult.at({2, 1, c}) == (c == 3 ? -1 : 0));  // x·g = −gx
  }
  // Δx = x⊗1 + g⊗x
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = 0; c < 4; ++c) {
      const int want = (b == 2 && c == 0) || (b == 1 && c == 2) ? 1 : 0;
      CHECK(s.comult.at({2, b, c}) == want);
    }
  CHECK(H.phi() == H.one(3));
}

TEST_CASE("cocycle algebras") {
  for (long q : {0L, 1L, 2L}) {
    const QuasiHopfAlgebra H = cocycle_algebra(3, q, Field::prime(103));
    CHECK(verify_quasi_bialgebra(H).all_passed());
    CHECK(verify_antipode(H).all_passed());
    CHECK((q == 0) == (H.phi() == H.one(3)));
  }
  CHECK_THROWS_AS(cocycle_algebra(3, 1, Field::prime(101)), std::invalid_argument);
  CHECK_THROWS_AS(cocycle_algebra(3, 1, Field::rationals()), std::invalid_argument);
}

TEST_CASE("field descriptors") {
  CHECK(parse_field("q").is_rational());
  CHECK(parse_field("fp:101") == Field::prime(101));
  CHECK(field_descriptor(Field::prime(7)) == "fp:7");
  CHECK(field_descriptor(Field::rationals()) == "q");
  CHECK_THROWS_AS(parse_field("fp:100"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("fp:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("reals"), std::invalid_argument);
}

TEST_CASE("spec text round trip for every builtin") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const AlgebraSpec s = builtin_spec(name, f);
      const std::string text = format_spec(s);
      const AlgebraSpec t = parse_spec(text);
      CHECK(same_structure(s.H, t.H));
      CHECK(s.R.has_value() == t.R.has_value());
      if (s.R) CHECK(*s.R == *t.R);
      CHECK(t.modules.size() == s.modules.size());
      CHECK(t.yd_modules.size() == s.yd_modules.size());
      CHECK(format_spec(t) == text);
    }
}

TEST_CASE("save and load") {
  const auto path = std::filesystem::temp_directory_path() / "qhopf_test_catalog.qhs";
  const AlgebraSpec s = builtin_spec("sweedler4_Rtri");
  save_spec(s, path.string());
  const AlgebraSpec t = load_spec(path.string());
  std::filesystem::remove(path);
  CHECK(format_spec(t) == format_spec(s));
  CHECK_THROWS_AS(load_spec((path.parent_path() / "does_not_exist.qhs").string()), Error);
}

TEST_CASE("spec_over reduces every constant") {
  const AlgebraSpec s = spec_over(builtin_spec("kZ2_Rt"), Field::prime(5));
  CHECK(s.H.field() == Field::prime(5));
  CHECK(s.R->field() == Field::prime(5));
  // ½ ≡ 3 mod 5
  CHECK(s.R->coeff({0, 0}) == 3);
}

TEST_CASE("parse errors carry line and column") {
  const std::string text =
      "qhopf-spec 1\n"
      "name t\n"
      "field q\n"
      "dim 2\n"
      "basis 1 g\n"
      "unit 0 1\n"
      "mult 0 0 zz 1\n";
  try {
    parse_spec(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
    CHECK(e.column == 10);
    CHECK(std::string(e.what()).starts_with("7:10: unknown basis element 'zz'"));
  }
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("qhopf-spec 2\n"), ParseError);
  CHECK_THROWS_AS(parse_spec("qhopf-spec 1\nfield q\ndim 2\nfrobnicate 1\n"), ParseError);
  const std::string good = format_spec(builtin_spec("kZ2"));
  CHECK_THROWS_AS(parse_spec(replace_line(good, "mult 1 1 0 1", "mult 1 1 0")), ParseError);
  CHECK_THROWS_AS(parse_spec(replace_line(good, "mult 1 1 0 1", "mult 1 1 2 1")), ParseError);
  CHECK_THROWS_AS(parse_spec(replace_line(good, "mult 1 1 0 1", "mult 1 1 0 1/x")), ParseError);
  CHECK_THROWS_AS(parse_spec(good.substr(0, good.rfind("end"))), ParseError);
}

TEST_CASE("validation names the failing axiom") {
  const std::string good = format_spec(builtin_spec("kZ2"));
  auto tag_of = [](const std::string& text) -> std::string {
    try {
      parse_spec(text);
    } catch (const ValidationError& e) {
      return e.tag;
    }
    return "";
  };
  CHECK(tag_of(good).empty());
  const std::string bad_beta = replace_line(good, "beta 0 1", "beta 1 1");
  CHECK(tag_of(bad_beta) == "(q6)");
  const std::string bad_phi = replace_line(good, "phi 0 0 0 1", "phi 0 0 0 2");
  CHECK(tag_of(bad_phi) == "(q4)");
  // Structural loading still succeeds without validation.
  CHECK_NOTHROW(parse_spec(bad_beta, false));
}
