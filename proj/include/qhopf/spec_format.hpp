#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/quasitriangular.hpp"
#include "qhopf/yd.hpp"

namespace qhopf {

// Line-oriented text description of a quasi-Hopf algebra; grammar in docs/spec_format.md.
struct AlgebraSpec {
  QuasiHopfAlgebra H;
  std::optional<AlgebraElement> R;
  std::vector<HModule> modules;
  std::vector<YDModule> yd_modules;
};

// Throws ParseError (line/column) on malformed text and ValidationError (failing tag) when the
// data violates an axiom. With validate = false only structural errors are raised, so that a
// broken algebra can still be handed to the verification suites.
AlgebraSpec parse_spec(std::string_view text, bool validate = true);
AlgebraSpec load_spec(const std::string& path, bool validate = true);

std::string format_spec(const AlgebraSpec& spec);
void save_spec(const AlgebraSpec& spec, const std::string& path);

// Validation run on load; exposed so hand-built specs can be checked the same way.
void validate_spec(const AlgebraSpec& spec);

// A builtin with its shipped modules.
AlgebraSpec builtin_spec(const std::string& name, const Field& f = Field::rationals());
// All constants reduced into f.
AlgebraSpec spec_over(const AlgebraSpec& spec, const Field& f);

// Field descriptor: "q" or "fp:<p>".
Field parse_field(std::string_view text);
std::string field_descriptor(const Field& f);

}  // namespace qhopf
