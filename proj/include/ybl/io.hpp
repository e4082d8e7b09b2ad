// JSON file formats for rings, braces and solutions, with precise messages
// on shape errors. A solution file may omit the tau table and declare
// "derive_tau_from": "involutivity" instead.

#ifndef YBL_IO_HPP
#define YBL_IO_HPP

#include <stdexcept>
#include <string>

#include "ybl/report.hpp"
#include "ybl/solution.hpp"

namespace ybl {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteRing ring_from_json(const Json& j);
FiniteBrace brace_from_json(const Json& j);
SetSolution solution_from_json(const Json& j);

Json ring_to_json(const FiniteRing& r);
Json brace_to_json(const FiniteBrace& b);
Json solution_to_json(const SetSolution& s, const std::string& name = "");

FiniteRing load_ring(const std::string& path);
FiniteBrace load_brace(const std::string& path);
SetSolution load_solution(const std::string& path);

// tau_y(x) = sigma^{-1}_{sigma_x(y)}(x), the unique table making the map
// involutive; validated afterwards.
OpTable derive_tau(const OpTable& sigma);

}  // namespace ybl

#endif
