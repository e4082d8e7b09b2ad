// Transfer-matrix symmetries: one-site operators lifted through the
// monodromy, diagonal symmetries from multiplicative characters of the
// structure group, orbit projectors, fixed-element and square-free tensor
// symmetries, and the central-element symmetry of braces from nilpotent
// rings.

#ifndef YBL_SYMMETRY_HPP
#define YBL_SYMMETRY_HPP

#include "ybl/chain.hpp"
#include "ybl/intlinalg.hpp"

namespace ybl {

struct SymmetryReport {
  std::string generator;
  std::vector<CheckResult> checks;
  bool ok() const { return all_pass(checks); }
};

// (B (x) B) R(lambda) = R(lambda) (B (x) B) coefficientwise; when that holds,
// the B (x) B^(x)N exchange with the monodromy, plus observed per-k
// commutation of B^(x)N with every t^(k).
SymmetryReport lift_check(const LegMatrix& b, const ChainSystem& chain);

struct DiagonalSymmetry {
  std::vector<int> f;            // solution automorphism
  std::vector<Rational> alpha;   // nonzero weights
};

// Admissible weights solve alpha_x alpha_y = alpha_{sigma_x(y)} alpha_{tau_y(x)}
// multiplicatively. Over the rationals the solutions split into a free part
// (instantiated on distinct primes), sign characters from even invariant
// factors, and higher torsion that has no rational realization.
struct CocycleBasis {
  int free_rank = 0;
  std::vector<std::vector<Int>> free_exponents;
  std::vector<std::vector<Rational>> free_characters;
  std::vector<std::vector<Rational>> sign_characters;
  std::vector<Int> higher_torsion;  // invariant factors with an odd part > 1
};
CocycleBasis solve_cocycle(const SetSolution& sol, const std::vector<int>& f);

// Checks the weight condition, the two-site identity with r, then
// [M^(x)N, t^(k)] = 0 for every k, with M = sum alpha_x e_{x,f(x)}.
SymmetryReport verify_m_symmetry(const ChainSystem& chain, const DiagonalSymmetry& sym);

// Expands M^(x)N for M = sum_j alpha_j (orbit projector j) into its
// multidegree components and checks each against every t^(k).
std::vector<SymmetryReport> orbit_projector_symmetry(const ChainSystem& chain);

// Elements x with r(x,y) = (y,x) for all y.
std::vector<int> fixed_elements(const SetSolution& sol);
// For each ordered pair of fixed elements: the coproduct sum of e_{xi,xj}
// against every t^(k), the two-site identities with r, and the elementary
// symmetric sums of site insertions.
std::vector<SymmetryReport> fixed_element_gl(const ChainSystem& chain);

// Elements x with r(x,x) = (x,x).
std::vector<int> square_free_elements(const SetSolution& sol);
// [e_{xi,xj}^(x)N, t^(k)] = 0 asserted for k = 1..N; the k = 0 outcome is
// recorded as data, not asserted.
std::vector<SymmetryReport> square_free_symmetry(const ChainSystem& chain);
bool square_free_k0_observed(const SymmetryReport& rep);

// x = b*a + a, y = c*a + a in the ring recovered from the brace; requires a
// central with a+a = 0, a o a = 0 and odd N. Commutation is asserted for
// every k including 0.
SymmetryReport central_symmetry(const FiniteBrace& brace, const std::vector<int>& X, int a,
                                int b, int c, int sites, long budget = kDefaultBudget);

}  // namespace ybl

#endif
