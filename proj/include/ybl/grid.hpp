// Grid verification for multi-parameter matrix identities. Both sides are
// evaluated at every integer point of {0..bound}^p; since a polynomial of
// per-variable degree <= bound that vanishes on that grid is identically
// zero, grid equality proves the polynomial identity exactly.

#ifndef YBL_GRID_HPP
#define YBL_GRID_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ybl/legmatrix.hpp"

namespace ybl {

struct GridWitness {
  std::vector<long> point;
  Index row = 0;
  Index col = 0;
  Poly lhs;
  Poly rhs;
};

struct GridResult {
  bool pass = false;
  long points_checked = 0;
  std::optional<GridWitness> witness;
};

using GridSide = std::function<LegMatrix(std::span<const Rational>)>;

GridResult grid_verify_identity(const GridSide& lhs, const GridSide& rhs, int num_params,
                                long per_variable_degree_bound);

}  // namespace ybl

#endif
