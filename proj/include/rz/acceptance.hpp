#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rz/census.hpp"

namespace rz {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;  // counts on success, first offender or error on failure
};

struct AcceptanceOptions {
  int max_height = 20;                      // polygon sweeps go up to this height
  uint64_t budget = kDefaultCensusBudget;   // census search-space ceiling
};

// Runs the eight acceptance checks in order.  Exceptions inside a criterion
// are caught and reported as failures; the remaining criteria still run.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace rz
