// Runs the acceptance suite and reports one line per criterion.

#include <iostream>

#include "ybl/acceptance.hpp"

int main() {
  auto results = ybl::run_acceptance(std::cout);
  bool ok = ybl::acceptance_ok(results);
  std::cout << (ok ? "ACCEPTANCE: all criteria passed"
                   : "ACCEPTANCE: some criteria FAILED")
            << "\n";
  return ok ? 0 : 1;
}
