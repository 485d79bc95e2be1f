// Runs the full exact identity suite and prints one verdict line per
// criterion.  Exits nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>

#include "typeb/verification.hpp"

int main() {
  const auto results = typeb::run_acceptance_suite();
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
              << "\n";
    for (const auto& d : r.details) std::cout << "       " << d << "\n";
    if (!r.passed) ++failures;
  }
  if (failures == 0) {
    std::cout << "all " << results.size() << " criteria hold\n";
    return EXIT_SUCCESS;
  }
  std::cout << failures << " of " << results.size() << " criteria fail\n";
  return EXIT_FAILURE;
}
