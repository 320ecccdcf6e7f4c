#pragma once

#include "mamove/harness/config.hpp"

#include <string>
#include <vector>

namespace mamove::harness {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the library's invariants on one scenario: ZF nulls, equal SINR,
/// power sum, translation invariance, analytic vs numeric gradient and
/// optimizer feasibility at a few durations.
std::vector<CheckResult> validate_scenario(const Scenario& scenario, const RunConfig& config);

}  // namespace mamove::harness
