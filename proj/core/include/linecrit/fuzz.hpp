#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linecrit/critical.hpp"

namespace linecrit {

struct FuzzParams {
  int n = 6;
  int k = 2;
  int trials = 100;
  std::uint64_t seed = 0;
  FaultInjection inject = FaultInjection::none;
};

struct FuzzFailure {
  int trial = 0;
  std::vector<std::string> checks;  // failed binding checks, report order
};

struct FuzzResult {
  FuzzParams params;
  int passed = 0;
  std::vector<FuzzFailure> failures;

  bool all_passed() const { return failures.empty(); }

  // One line per failing trial, in trial order.
  std::vector<std::string> failure_lines() const;

  // Single stable summary line; identical bytes for identical params.
  std::string summary() const;
};

// Runs verify_main_theorem over random admissible instances, one derived
// seed per trial.  Instances inside the enumerator size guard also get the
// arborescence-count cross-check.
FuzzResult run_fuzz(const FuzzParams& params);

}  // namespace linecrit
