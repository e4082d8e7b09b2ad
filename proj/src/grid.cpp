#include "ybl/grid.hpp"

#include <stdexcept>

namespace ybl {

GridResult grid_verify_identity(const GridSide& lhs, const GridSide& rhs, int num_params,
                                long per_variable_degree_bound) {
  if (num_params < 0 || per_variable_degree_bound < 0)
    throw std::invalid_argument("grid_verify_identity: bad arguments");
  const long pts = per_variable_degree_bound + 1;
  std::vector<long> point(num_params, 0);
  GridResult result;
  result.pass = true;
  while (true) {
    std::vector<Rational> args(point.begin(), point.end());
    LegMatrix l = lhs(args);
    LegMatrix r = rhs(args);
    if (l.leg_count() != r.leg_count() || l.leg_dim() != r.leg_dim())
      throw std::invalid_argument("grid_verify_identity: dimension mismatch between sides");
    ++result.points_checked;
    if (auto diff = first_difference(l, r)) {
      result.pass = false;
      result.witness = GridWitness{point, diff->row, diff->col, diff->lhs, diff->rhs};
      return result;
    }
    // Odometer over the grid.
    int k = num_params - 1;
    while (k >= 0 && point[k] == pts - 1) point[k--] = 0;
    if (k < 0) break;
    ++point[k];
  }
  return result;
}

}  // namespace ybl
