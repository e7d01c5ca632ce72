// Model self-checks: structural sanity plus randomized numerical
// verification of the kinematic and force pipelines.
#pragma once

#include <asmm/platform.hpp>

#include <string>
#include <vector>

namespace asmm {

struct CheckResult {
  std::string stage;
  bool pass = false;
  std::string detail;  // worst residual or the first failure found
};

// Runs every stage regardless of failures so a report is always complete.
std::vector<CheckResult> validate_model(const PlatformModel& pm, unsigned seed = 0);

}  // namespace asmm
