// Defining relations of the quantum algebra attached to a solution: formal
// degree-2 term lists over generators L^(level)_{z,w}, their specialization
// at the flip solution, representation checks through the structure algebra,
// and homomorphism induction along solution maps.

#ifndef YBL_QALGEBRA_HPP
#define YBL_QALGEBRA_HPP

#include <array>
#include <compare>
#include <map>

#include "ybl/report.hpp"
#include "ybl/solution.hpp"

namespace ybl {

struct QAGenerator {
  int z = 0;
  int w = 0;
  int level = 0;
  auto operator<=>(const QAGenerator&) const = default;
};

struct QATerm {
  int coef = 0;  // +1 or -1 in defining relations
  QAGenerator left;
  QAGenerator right;
};

using QAMonomial = std::pair<QAGenerator, QAGenerator>;

struct QARelation {
  // (x, j, y, i, n, m): the block indices and level pair the relation
  // was generated from.
  std::array<int, 6> tag{};
  std::vector<QATerm> terms;

  // Combined form: monomial -> total coefficient, zeros dropped.
  std::map<QAMonomial, Rational> canonical() const;
};

// One relation per (x, j, y, i) in X^4 and (n, m) in [0, max_level]^2; terms
// listed exactly as the two sides of the exchange relation, with exactly
// cancelling +/- pairs removed.
std::vector<QARelation> generate_relations(const SetSolution& sol, int max_level);

// The flip-solution relation family in commutator form, plus a matching
// report against generate_relations(trivial(n)) normalized by overall sign.
struct YangianMatch {
  std::vector<QARelation> relations;
  bool match = false;
  Json mismatch;  // first offending tag on failure
};
YangianMatch yangian_form(int n, int max_level);

// Canonical representative of the degree-2 class of (x, y): the
// lexicographic minimum of {(x,y), r(x,y)}.
std::pair<int, int> structure_nf(const SetSolution& sol, int x, int y);

enum class RepKind { Constant, Tensor, Graded, LinearPoly };

struct RepReport {
  bool pass = false;
  int relations_checked = 0;
  Json failure;  // tag and residue of the first nonzero image
};
// Substitutes generators per the representation kind and reduces degree-2
// words with structure_nf; every relation must map to zero. `use_nf = false`
// is the ablation switch that skips the structure-algebra reduction.
RepReport check_representation(const SetSolution& sol, const std::vector<QARelation>& rels,
                               RepKind kind, bool use_nf = true);

struct InduceReport {
  bool pass = false;
  int relations_checked = 0;
  Json failure;
};
// Maps every defining relation of the domain algebra through generator
// renaming by f and verifies the image is termwise the codomain relation
// with the renamed tag.
InduceReport induce_hom(const SolutionHom& f, int max_level);

// Degree-(1,0) and degree-(1,1) consequences of the exchange relation with
// the level-0 generator specialized to the identity: the automatic identity,
// the extracted commutator table compared against the standard gl table, and
// a pointer to the fundamental realization check.
std::vector<CheckResult> level01_checks(const SetSolution& sol, int max_level);

Json relations_to_json(const std::vector<QARelation>& rels);

}  // namespace ybl

#endif
