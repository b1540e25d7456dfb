#pragma once

// Verification reports: one entry per checked relation instance, with the
// relation's catalog anchor, the instance label and an exact residue
// rendering on failure. Exact equality semantics throughout: a check passes
// iff its residue is identically zero.

#include <cstdint>
#include <string>
#include <vector>

namespace adj3 {

struct ReportEntry {
  std::string relation;  // stable relation id, e.g. "2xm.lifting.compose-left"
  std::string anchor;    // catalog tag, e.g. "(A.5)" or "(3.38c)"
  std::string instance;  // which tuple/overlap/basis element was checked
  bool passed = true;
  std::string residue;   // exact rendering of the nonzero residue, if any
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite, std::uint64_t seed = 0)
      : suite_(std::move(suite)), seed_(seed) {}

  void record(const std::string& relation, const std::string& anchor,
              const std::string& instance, bool passed,
              const std::string& residue = "") {
    entries_.push_back({relation, anchor, instance, passed, residue});
    if (passed)
      ++pass_count_;
    else
      ++fail_count_;
  }

  void merge(const VerificationReport& other) {
    for (const auto& e : other.entries_) {
      entries_.push_back(e);
      if (e.passed)
        ++pass_count_;
      else
        ++fail_count_;
    }
  }

  bool ok() const { return fail_count_ == 0; }
  std::size_t passes() const { return pass_count_; }
  std::size_t failures() const { return fail_count_; }
  const std::string& suite() const { return suite_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  std::vector<ReportEntry> failing() const {
    std::vector<ReportEntry> out;
    for (const auto& e : entries_)
      if (!e.passed) out.push_back(e);
    return out;
  }

  // First failing entry; throws if the report is clean.
  const ReportEntry& first_failure() const {
    for (const auto& e : entries_)
      if (!e.passed) return e;
    throw std::logic_error("report has no failures");
  }

  std::string summary() const {
    std::string s = suite_ + ": " + std::to_string(pass_count_) + " passed, " +
                    std::to_string(fail_count_) + " failed";
    return s;
  }

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  std::vector<ReportEntry> entries_;
  std::size_t pass_count_ = 0;
  std::size_t fail_count_ = 0;
};

}  // namespace adj3
