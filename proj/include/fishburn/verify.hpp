#pragma once

#include <string>
#include <vector>

namespace fishburn::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  double millis = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  double millis = 0.0;
  bool all_passed() const;
};

const std::vector<std::string>& suite_names();

// Runs one suite of cross-checks. max_n < 0 selects the per-check defaults
// (chosen so the full run stays fast on one core); jobs > 1 partitions the
// exhaustive scans, with results independent of the worker count.
Report run_suite(const std::string& suite, int max_n = -1, int jobs = 1);

}  // namespace fishburn::verify
