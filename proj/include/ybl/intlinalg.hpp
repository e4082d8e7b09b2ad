// Small exact integer linear algebra: Smith normal form with both transform
// matrices, used to solve multiplicative character conditions over the
// rationals.

#ifndef YBL_INTLINALG_HPP
#define YBL_INTLINALG_HPP

#include <vector>

#include "ybl/rational.hpp"

namespace ybl {

using IntMat = std::vector<std::vector<Int>>;

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);

// P * A * Q = S with P, Q unimodular and S diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithForm {
  IntMat s;
  IntMat p;  // rows x rows
  IntMat q;  // cols x cols
  int rank = 0;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& a);

}  // namespace ybl

#endif
