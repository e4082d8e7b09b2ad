// Exact scalar arithmetic. Every identity this workbench checks is an exact
// polynomial identity with integer coefficients, so scalars are arbitrary
// precision rationals, never floats.

#ifndef YBL_RATIONAL_HPP
#define YBL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace ybl {

using Int = boost::multiprecision::cpp_int;

// Stored in lowest terms with positive denominator; 0 is 0/1. Those
// invariants are maintained by cpp_rational itself and asserted in tests.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace ybl

#endif
