// Sparse univariate polynomials over Rational in the spectral parameter
// lambda. Only nonzero coefficients are stored; the zero polynomial has no
// terms and its degree is reported as an empty optional (the -inf sentinel).

#ifndef YBL_POLY_HPP
#define YBL_POLY_HPP

#include <map>
#include <optional>
#include <string>

#include "ybl/rational.hpp"

namespace ybl {

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit constant promotion is intended
    if (c != 0) coeffs_[0] = c;
  }
  Poly(long long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable() { return monomial(1, 1); }
  static Poly monomial(int degree, const Rational& c);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  Rational coeff(int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly operator-() const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;

  // p(a*lambda + b); used for arguments like -lambda or -lambda-N.
  Poly compose_affine(const Rational& a, const Rational& b) const;

  std::string str() const;

 private:
  std::map<int, Rational> coeffs_;  // degree -> nonzero coefficient

  void set(int degree, const Rational& c) {
    if (c == 0)
      coeffs_.erase(degree);
    else
      coeffs_[degree] = c;
  }
};

}  // namespace ybl

#endif
