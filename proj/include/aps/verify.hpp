#pragma once

#include <string>
#include <vector>

namespace aps {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool soft = false;  // a soft failure is reported but does not fail the run
  double seconds = 0;
  std::string detail;
};

/// Golden checks 1..11; `ids` selects a subset (empty runs all).
std::vector<CheckResult> run_golden_battery(const std::vector<int>& ids = {});
CheckResult run_golden_check(int id);

/// "[PASS] 3 explicit progressions (0.01 s): detail".
std::string format_check(const CheckResult& r);

/// True when no hard check failed.
bool battery_ok(const std::vector<CheckResult>& results);

}  // namespace aps
