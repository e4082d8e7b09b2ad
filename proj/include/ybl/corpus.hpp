// Named solution sources: the builtin family constructors, the mini-syntax
// used on the command line ("trivial:3", "lyubashenko:2", "brace:mod:4,2",
// "brace:tpoly:2,3", "union:a+b", or a file path), and the default corpus.

#ifndef YBL_CORPUS_HPP
#define YBL_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ybl/solution.hpp"

namespace ybl {

struct NamedSolution {
  std::string name;
  SetSolution sol;
  // Present when the solution came from a brace, for brace-level commands.
  std::optional<BraceSolution> brace_ctx;
};

// Throws IoError on unknown names or malformed parameters.
NamedSolution parse_solution_spec(const std::string& spec);
FiniteRing parse_ring_spec(const std::string& spec);
FiniteBrace parse_brace_spec(const std::string& spec);

// trivial(2..4), lyubashenko(2..4), and the two nilpotent-ring braces.
std::vector<NamedSolution> default_corpus();

}  // namespace ybl

#endif
