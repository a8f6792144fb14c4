#pragma once

#include <string>
#include <vector>

#include "qhopf/linear_map.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

struct CheckResult {
  std::string tag;
  bool passed = false;
  bool skipped = false;
  std::string detail;  // on failure: first differing index and both sides
};

// Itemized outcome of a verification run. Several checks may share a tag; the
// tag passes when all of them pass.
class VerificationReport {
 public:
  void add(std::string tag, bool passed, std::string detail = {});
  void skip(std::string tag, std::string reason);
  // Records whether lhs == rhs; on failure stores the first differing index and both tensors.
  bool expect_equal(const std::string& tag, const Tensor& lhs, const Tensor& rhs,
                    const std::string& context = {});
  bool expect_equal(const std::string& tag, const LinearMap& lhs, const LinearMap& rhs,
                    const std::string& context = {});
  void merge(const VerificationReport& other);

  bool all_passed() const;
  bool passed(const std::string& tag) const;
  bool has(const std::string& tag) const;
  const std::vector<CheckResult>& entries() const noexcept { return entries_; }
  // One entry per tag, sorted by tag; the first failure detail is kept.
  std::vector<CheckResult> summary() const;
  std::string first_failure() const;

 private:
  std::vector<CheckResult> entries_;
};

}  // namespace qhopf
