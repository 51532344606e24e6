#pragma once

#include <string>
#include <vector>

namespace zks::selftest {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;      // deterministic summary, used in reports
  double seconds = 0.0;    // measured wall time, excluded from reports
  double limit_seconds = 0.0;
};

// Runs the full verification suite at default sizes. Deterministic apart
// from the measured times.
std::vector<CriterionResult> run_all();

}  // namespace zks::selftest
