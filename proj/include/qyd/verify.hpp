#pragma once

#include <string>
#include <vector>

namespace qyd {

// ---------------------------------------------------------------------------
// Self-verification suites. Each suite re-derives one family of library
// identities from scratch (pinned values, exhaustive sweeps, dimension
// certificates) and reports per-check outcomes. All arithmetic is exact; a
// check either holds on the nose or fails with a witness.
// ---------------------------------------------------------------------------

enum class Depth { standard, deep };

struct CheckResult {
  std::string name;    // short label of the individual check
  bool passed = false;
  std::string detail;  // witness on failure; informational note otherwise
  double seconds = 0;  // wall time attributed to this check
};

struct SuiteReport {
  std::string suite;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;  // wall time of the whole suite

  bool passed() const;
  int failed_count() const;
};

// Registered suite names in run order.
const std::vector<std::string>& verify_suite_names();

// One-line description of a suite; throws std::invalid_argument on an
// unknown name.
std::string verify_suite_title(const std::string& name);

// Run a single suite; throws std::invalid_argument on an unknown name.
SuiteReport run_verify_suite(const std::string& name, Depth depth);

// Run every suite in registration order.
std::vector<SuiteReport> run_all_verify_suites(Depth depth);

}  // namespace qyd
