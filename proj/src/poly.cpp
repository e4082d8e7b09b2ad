#include "ybl/poly.hpp"

#include <sstream>

namespace ybl {

Poly Poly::monomial(int degree, const Rational& c) {
  Poly p;
  p.set(degree, c);
  return p;
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

Rational Poly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [d, c] : o.coeffs_) set(d, coeff(d) + c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [d, c] : o.coeffs_) set(d, coeff(d) - c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.set(da + db, out.coeff(da + db) + ca * cb);
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [d, pc] : p.coeffs_) out.coeffs_[d] = c * pc;
  return out;
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

Rational Poly::eval(const Rational& x) const {
  // Horner over the dense degree range; degrees in this workbench stay tiny.
  Rational acc = 0;
  int top = coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
  for (int d = top; d >= 0; --d) acc = acc * x + coeff(d);
  return acc;
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
  Poly arg = Poly::monomial(1, a) + Poly(b);
  Poly acc;
  int top = coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
  for (int d = top; d >= 0; --d) acc = acc * arg + Poly(coeff(d));
  return acc;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1) && d > 0;
    if (!unit) os << mag;
    if (d > 0) {
      if (!unit) os << "*";
      os << "lambda";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace ybl
