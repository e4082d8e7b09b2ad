// R-matrices built from a set-theoretic solution, plus the checks on them:
// both constant forms, the one-parameter families R(lambda) = lambda*r + P
// and their braid-form partners, the braid/Yang-Baxter equations, the
// braid-group representation with square one, unitarity, crossing-unitarity
// and the partial-transpose identities behind it.

#ifndef YBL_RMATRIX_HPP
#define YBL_RMATRIX_HPP

#include "ybl/grid.hpp"
#include "ybl/legmatrix.hpp"
#include "ybl/report.hpp"
#include "ybl/solution.hpp"

namespace ybl {

struct RBundle {
  SetSolution sol;
  LegMatrix check_const;  // sum e_{x,sigma_x(y)} (x) e_{y,tau_y(x)}
  LegMatrix r_const;      // P * check_const
  LegMatrix perm;         // P
  LegMatrix check_spec;   // lambda*check_const + I
  LegMatrix r_spec;       // lambda*r_const + P
  bool dual_form_match = false;  // the two constant forms of r agree
};

// The alternative form sum e_{tau_y(x),x} (x) e_{sigma_x(y),y}, built
// independently so the two routes can be compared bit-exactly.
LegMatrix r_matrix_alt(const SetSolution& sol);

// validate_input = false skips the solution validity gate, which mutation
// tests need in order to build matrices from deliberately broken tables.
RBundle build_rbundle(const SetSolution& sol, bool validate_input = true);

// g_i = check_const embedded on legs (i-1, i) of `sites` legs: braid
// relation, distant commutation, g^2 = I.
std::vector<CheckResult> verify_hecke(const RBundle& bundle, int sites);

struct SpectralReport {
  CheckResult ybe_braid;
  CheckResult ybe_standard;
  CheckResult unitarity;
  CheckResult crossing;
  CheckResult t1t2;
  std::vector<CheckResult> p3;
  std::vector<CheckResult> all() const;
  bool ok() const { return all_pass(all()); }
};

SpectralReport verify_spectral(const RBundle& bundle);

Json entry_witness_json(const EntryWitness& w);

}  // namespace ybl

#endif
