#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/spec_format.hpp"

namespace qhopf {

// axioms, twist, pq, qt, yd, functors, rigidity, canonical, braided.
const std::vector<std::string>& suite_names();
// Comma-separated names, "all" expands to every suite; result in canonical order without
// repeats. Throws std::invalid_argument on unknown or empty selections.
std::vector<std::string> parse_suite_selection(std::string_view text);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::size_t max_dim = 3;
};

struct SuiteResult {
  std::string suite;
  VerificationReport report;
  double seconds = 0;
};

// Runs suites against one algebra. Derived elements are computed once; if that fails (for a
// broken algebra) the dependent suites record a failing "setup" entry instead of throwing.
class SuiteRunner {
 public:
  SuiteRunner(AlgebraSpec subject, SuiteOptions options = {});

  SuiteResult run(const std::string& suite) const;
  const std::optional<Ambient>& ambient() const noexcept { return ambient_; }
  const std::vector<HModule>& module_pool() const noexcept { return modules_; }
  const std::vector<YDModule>& yd_pool() const noexcept { return yd_; }

 private:
  VerificationReport axioms() const;
  VerificationReport twist() const;
  VerificationReport pq() const;
  VerificationReport qt() const;
  VerificationReport yd(std::uint64_t seed) const;
  VerificationReport functors(std::uint64_t seed) const;
  VerificationReport rigidity(std::uint64_t seed) const;
  VerificationReport canonical(std::uint64_t seed) const;
  VerificationReport braided() const;

  AlgebraSpec subject_;
  SuiteOptions options_;
  std::optional<Ambient> ambient_;
  std::string setup_error_;
  std::string qt_error_;
  std::vector<HModule> modules_;
  std::vector<YDModule> yd_;
};

}  // namespace qhopf
