#include "qhopf/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qhopf {

void VerificationReport::add(std::string tag, bool passed, std::string detail) {
  entries_.push_back({std::move(tag), passed, false, std::move(detail)});
}

void VerificationReport::skip(std::string tag, std::string reason) {
  entries_.push_back({std::move(tag), true, true, std::move(reason)});
}

bool VerificationReport::expect_equal(const std::string& tag, const Tensor& lhs, const Tensor& rhs,
                                      const std::string& context) {
  std::string detail;
  bool ok = false;
  try {
    const auto diff = lhs.first_difference(rhs);
    ok = !diff.has_value();
    if (!ok) {
      std::ostringstream os;
      const auto idx = lhs.multi_index(*diff);
      if (!context.empty()) os << context << "; ";
      os << "first difference at (";
      for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
      os << ")\n  lhs = " << lhs.describe() << "\n  rhs = " << rhs.ordered(lhs.names()).describe();
      detail = os.str();
    }
  } catch (const std::exception& e) {
    detail = std::string("shape mismatch: ") + e.what();
  }
  add(tag, ok, detail);
  return ok;
}

bool VerificationReport::expect_equal(const std::string& tag, const LinearMap& lhs,
                                      const LinearMap& rhs, const std::string& context) {
  if (lhs.dst_dim() != rhs.dst_dim() || lhs.src_dim() != rhs.src_dim()) {
    add(tag, false, context + " map shapes differ");
    return false;
  }
  return expect_equal(tag, lhs.matrix(), rhs.matrix(), context);
}

void VerificationReport::merge(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckResult& c) { return c.passed; });
}

bool VerificationReport::passed(const std::string& tag) const {
  bool any = false;
  for (const auto& e : entries_) {
    if (e.tag != tag) continue;
    any = true;
    if (!e.passed) return false;
  }
  return any;
}

bool VerificationReport::has(const std::string& tag) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const CheckResult& c) { return c.tag == tag; });
}

std::vector<CheckResult> VerificationReport::summary() const {
  std::map<std::string, CheckResult> by_tag;
  for (const auto& e : entries_) {
    auto it = by_tag.find(e.tag);
    if (it == by_tag.end()) {
      by_tag.emplace(e.tag, e);
      continue;
    }
    auto& s = it->second;
    if (s.skipped && !e.skipped) s = e;
    else if (s.passed && !e.passed) s = e;
  }
  std::vector<CheckResult> out;
  for (auto& [tag, r] : by_tag) out.push_back(r);
  return out;
}

std::string VerificationReport::first_failure() const {
  for (const auto& e : entries_) {
    if (!e.passed) return e.tag + ": " + e.detail;
  }
  return {};
}

}  // namespace qhopf
