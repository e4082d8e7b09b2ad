// The acceptance suite: the full battery of identities this workbench exists
// to certify, run over the builtin corpus at desk scale. Every comparison is
// bit-exact; a handful of criteria also carry wall-clock limits.

#ifndef YBL_ACCEPTANCE_HPP
#define YBL_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ybl/chain.hpp"

namespace ybl {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 means no limit
  std::string detail;          // failure context, empty on success
};

// Runs all criteria in order, streaming one pass/fail line each to `out`.
std::vector<CriterionResult> run_acceptance(std::ostream& out, long budget = kDefaultBudget);

bool acceptance_ok(const std::vector<CriterionResult>& results);

}  // namespace ybl

#endif
