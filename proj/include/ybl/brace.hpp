// Finite rings and braces stored as raw operation tables on {0..n-1}.
// Nothing is assumed: every axiom is checked exhaustively, which is cheap at
// the sizes handled here (n <= 16).

#ifndef YBL_BRACE_HPP
#define YBL_BRACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ybl {

using OpTable = std::vector<std::vector<int>>;

struct FiniteRing {
  int size = 0;
  OpTable add;
  OpTable mul;
};

struct FiniteBrace {
  int size = 0;
  OpTable add;
  OpTable circle;
};

struct AxiomWitness {
  std::string axiom;
  std::vector<int> elements;
};

struct RingReport {
  bool abelian_add = false;
  bool associative_mul = false;
  bool distributive = false;
  std::optional<int> nilpotency_index;
  std::optional<AxiomWitness> witness;
  bool ok() const { return abelian_add && associative_mul && distributive; }
};

struct BraceReport {
  bool abelian_add = false;
  bool circle_group = false;
  bool compatible = false;
  std::optional<AxiomWitness> witness;
  bool ok() const { return abelian_add && circle_group && compatible; }
};

struct IdealReport {
  bool ok = false;
  std::string failed_axiom;  // empty when ok
  std::vector<int> witness;
};

// Throws std::invalid_argument on malformed tables (wrong shape or
// out-of-range entries); axiom failures are reported, not thrown.
RingReport validate_ring(const FiniteRing& ring);
BraceReport validate_brace(const FiniteBrace& brace);

// a o b = a*b + a + b. Requires a valid nilpotent ring; the result is
// re-validated and the call throws if anything fails.
FiniteBrace ring_to_brace(const FiniteRing& ring);

int circle_inverse(const FiniteBrace& brace, int a);

// Additive helpers on brace tables.
int add_inverse(const OpTable& add, int a);
inline int brace_sub(const FiniteBrace& b, int x, int y) {
  return b.add[x][add_inverse(b.add, y)];
}
// sigma_a(b) = a o b - a, the left action from Rump's construction.
inline int brace_sigma(const FiniteBrace& b, int a, int x) {
  return brace_sub(b, b.circle[a][x], a);
}
// Ring product recovered from a brace: a*b = a o b - a - b.
inline int brace_ring_mul(const FiniteBrace& b, int x, int y) {
  return brace_sub(b, brace_sub(b, b.circle[x][y], x), y);
}

// Z/m with a*b = c*a*b mod m; nilpotent only for suitable c (caller checks).
FiniteRing scaled_mod_ring(int m, long c);
// t*F_p[t]/(t^k): polynomials with zero constant term, truncated at degree
// < k, coefficients mod p. Size p^(k-1); nilpotent of index k.
FiniteRing truncated_poly_ring(int p, int k);
// Trivial brace on Z/n: circle = add.
FiniteBrace trivial_brace(int n);

// All a that are central in (B,o) with a+a = 0 and a o a = 0.
std::vector<int> central_involutive_elements(const FiniteBrace& brace);

// J is an ideal iff (J,+) <= (B,+), J normal in (B,o), and sigma_a(J) <= J
// for every a. These are exactly the conditions under which both coset
// operations are well defined, which quotient_brace re-checks anyway.
IdealReport validate_ideal(const FiniteBrace& brace, const std::vector<int>& subset);

struct BraceQuotient {
  FiniteBrace quotient;
  std::vector<int> coset_of;  // element -> quotient index
};
// Throws std::invalid_argument naming the failing ideal axiom.
BraceQuotient quotient_brace(const FiniteBrace& brace, const std::vector<int>& ideal);

}  // namespace ybl

#endif
