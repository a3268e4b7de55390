#pragma once

#include <string>
#include <vector>

namespace arbor {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}, double seconds = 0) {
    checks.push_back({std::move(name), passed, std::move(detail), seconds});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

}  // namespace arbor
