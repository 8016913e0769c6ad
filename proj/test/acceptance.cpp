#include <iostream>

#include "polycut/harness.hpp"

int main() {
  const std::vector<polycut::CriterionResult> results =
      polycut::run_suite(1, &std::cout);
  bool ok = true;
  for (const polycut::CriterionResult& r : results) ok = ok && r.passed;
  std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}
