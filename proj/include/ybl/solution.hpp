// Set-theoretic solutions of the braid equation on {0..N-1}, stored as the
// two lookup tables of r(x,y) = (sigma_x(y), tau_y(x)). Construction from
// braces, the cyclic one-orbit family, trivial solutions, orbits, retraction
// and homomorphisms all live here.

#ifndef YBL_SOLUTION_HPP
#define YBL_SOLUTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybl/brace.hpp"

namespace ybl {

struct SetSolution {
  int size = 0;
  OpTable sigma;  // sigma[x][y] = sigma_x(y)
  OpTable tau;    // tau[y][x]   = tau_y(x)

  std::pair<int, int> r(int x, int y) const { return {sigma[x][y], tau[y][x]}; }
};

struct PairWitness {
  std::string check;
  std::vector<int> elements;
};

struct SolutionReport {
  bool nondegenerate = false;
  bool involutive = false;
  bool braid = false;
  std::optional<PairWitness> witness;
  bool ok() const { return nondegenerate && involutive && braid; }
};

SolutionReport validate(const SetSolution& sol);

SetSolution trivial_solution(int n);
// r_m(i,j) = (j+1, i-1) mod m; indecomposable with one sigma row.
SetSolution lyubashenko(int m);
// Disjoint union acting as the flip across components.
SetSolution disjoint_union(const SetSolution& a, const SetSolution& b);

// Rump's construction: sigma_x(y) = x o y - x, tau_y(x) = t o x - t with
// t the circle inverse of sigma_x(y). X defaults to all of B; a proper
// subset must be closed under r (a witness pair is thrown otherwise).
struct BraceSolution {
  SetSolution sol;
  FiniteBrace brace;
  std::vector<int> elements;  // solution index -> brace element
  std::vector<int> index_of;  // brace element -> solution index or -1
};
BraceSolution solution_from_brace(const FiniteBrace& brace,
                                  std::optional<std::vector<int>> X = std::nullopt);

// Finest partition closed under all sigma_x and tau_x; one block means
// indecomposable.
std::vector<std::vector<int>> orbits(const SetSolution& sol);

struct SolutionHom {
  SetSolution domain;
  SetSolution codomain;
  std::vector<int> map;
};

// Verifies r'(f(x), f(y)) = (f x f)(r(x,y)) on all pairs plus surjectivity.
std::optional<SolutionHom> check_hom(const std::vector<int>& f, const SetSolution& dom,
                                     const SetSolution& cod,
                                     PairWitness* witness = nullptr);
SolutionHom compose(const SolutionHom& first, const SolutionHom& then);

struct Retraction {
  SetSolution retracted;
  SolutionHom hom;
};
// Quotient by equality of sigma rows. Well-definedness of the induced
// tables is checked, not assumed; failure throws with a witness.
Retraction retract(const SetSolution& sol);

// Number of retractions to reach one element, or nullopt if the size
// stabilizes above 1.
std::optional<int> multipermutation_level(const SetSolution& sol);

// Brute-force isomorphism search, sizes <= 8, pruned on sigma row cycle
// types.
std::optional<SolutionHom> find_iso(const SetSolution& a, const SetSolution& b);

// Coset map X -> X+J for an ideal J, landing in the solution of B/J.
SolutionHom quotient_by_ideal(const FiniteBrace& brace, const std::vector<int>& X,
                              const std::vector<int>& ideal);

// Orbit-collapse homomorphism onto the trivial solution on the orbit set.
SolutionHom orbit_collapse(const SetSolution& sol);

struct LyubashenkoRetract {
  int m = 0;
  std::vector<SolutionHom> chain;  // retraction steps taken before the hit
  SolutionHom iso;                 // stage -> lyubashenko(m)
};
// Best effort: walks the retraction tower looking for a stage isomorphic to
// lyubashenko(m). Preconditions (indecomposable, finite multipermutation
// level, non-constant sigma) are enforced by name; absence of a hit means
// "not found", never "does not exist".
std::optional<LyubashenkoRetract> retract_to_lyubashenko(const SetSolution& sol);

}  // namespace ybl

#endif
