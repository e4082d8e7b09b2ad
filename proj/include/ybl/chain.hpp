// Periodic chains: the monodromy over one auxiliary and N quantum legs, the
// transfer matrix and its coefficient family t^(k), the shift operator, the
// Hamiltonians H^(k) = t^(k) * shift^-1, and the independent rebuilds of the
// closed forms used to cross-check them.

#ifndef YBL_CHAIN_HPP
#define YBL_CHAIN_HPP

#include "ybl/rmatrix.hpp"

namespace ybl {

inline constexpr long kDefaultBudget = 4096;

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChainSystem {
  SetSolution sol;
  int sites = 0;
  RBundle bundle;
  LegMatrix monodromy;             // N+1 legs, polynomial entries
  std::vector<LegMatrix> t_coeff;  // t^(0..N), N legs, constant entries
  LegMatrix shift;                 // Pi = P_12 P_23 ... P_{N-1,N}; equals t^(N)
  LegMatrix shift_inv;             // its transpose (a permutation matrix)
  std::vector<LegMatrix> ham;      // H^(0..N); H^(k) = t^(k) Pi^-1, H^(N) = Pi
};

// Throws BudgetError when dim^(sites+1) exceeds the configured budget.
ChainSystem build_chain(const SetSolution& sol, int sites, long budget = kDefaultBudget,
                        bool validate_input = true);

// [t^(k), t^(l)] == 0 for every pair.
struct CommutingReport {
  int pairs_checked = 0;
  std::vector<CheckResult> checks;
  bool ok() const { return all_pass(checks); }
};
CommutingReport verify_commuting(const ChainSystem& chain);

// Exchange relation for the monodromy over two auxiliary copies, verified on
// the integer grid with per-variable degree bound sites+1.
CheckResult verify_rtt(const SetSolution& sol, int sites, long budget = kDefaultBudget);

struct ClosedFormReport {
  CheckResult t_top;     // t^(N) equals the shift operator
  CheckResult h_top;     // H^(N-1) as the sum of nearest-neighbour terms
  CheckResult h_second;  // H^(N-2) rebuild (needs N >= 3)
  CheckResult h_first;   // H^(1) rebuild
  CheckResult t_zero;    // t^(0) as the constrained sum over index tuples
  std::vector<CheckResult> all() const;
  bool ok() const { return all_pass(all()); }
};
ClosedFormReport verify_closed_forms(const ChainSystem& chain);

// The staircase product S = r_{N-1,N} r_{N-2,N-1} ... r_{12} and its three
// exchange identities with nearest-neighbour terms. Needs sites >= 4.
std::vector<CheckResult> verify_shift_action(const RBundle& bundle, int sites);

// Independent builders, exposed for tests.
LegMatrix shift_operator(int sites, int leg_dim);
LegMatrix hamiltonian_top_closed_form(const RBundle& bundle, int sites);
LegMatrix hamiltonian_second_closed_form(const RBundle& bundle, int sites);
LegMatrix hamiltonian_first_closed_form(const RBundle& bundle, int sites);
LegMatrix t_zero_closed_form(const SetSolution& sol, int sites);
// r_{n-1,n} r_{n-2,n-1} ... r_{m,m+1} on `sites` legs (1-based labels).
LegMatrix staircase(const RBundle& bundle, int sites, int n, int m);

}  // namespace ybl

#endif
