#pragma once

#include <string>
#include <vector>

#include "eomq/kernels.hpp"

namespace eomq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst observed deviation vs allowed
};

// Self-check of the physical invariants. Every tolerance is multiplied by
// tolerance_scale; checks that hold exactly stay exact.
std::vector<CheckResult> run_verification(double tolerance_scale = 1.0, Exec exec = Exec::parallel);

}  // namespace eomq
