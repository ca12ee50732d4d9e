// One line per acceptance criterion; soft criteria never fail the run.
#include <iostream>

#include "aps/verify.hpp"

int main() {
  const auto results = aps::run_golden_battery();
  int hard = 0, soft = 0;
  for (const aps::CheckResult& r : results) {
    std::cout << aps::format_check(r) << std::endl;
    if (!r.passed) ++(r.soft ? soft : hard);
  }
  std::cout << results.size() - hard - soft << "/" << results.size() << " passed, " << soft << " soft failure(s), "
            << hard << " hard failure(s)" << std::endl;
  return aps::battery_ok(results) ? 0 : 1;
}
