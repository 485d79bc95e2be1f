#pragma once

#include <string>
#include <vector>

namespace typeb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

// Runs the full identity suite (lattice counts, Kreweras laws, Moebius
// inversion, convolution identities, S-transform multiplicativity, limit
// theorems, conditional expectation, freeness).  Deterministic: fixed seeds,
// exact arithmetic throughout.
std::vector<CriterionResult> run_acceptance_suite();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace typeb
