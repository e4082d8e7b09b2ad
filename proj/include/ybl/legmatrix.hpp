// Sparse square matrices over Poly, annotated with tensor-leg structure:
// a LegMatrix over k legs of dimension d acts on (C^d)^(tensor k). Basis
// ordering is lexicographic with leg 0 most significant, so leg 0 plays the
// role of the auxiliary space in chain constructions.

#ifndef YBL_LEGMATRIX_HPP
#define YBL_LEGMATRIX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ybl/poly.hpp"

namespace ybl {

using Index = std::uint64_t;

struct EntryWitness {
  Index row = 0;
  Index col = 0;
  Poly lhs;
  Poly rhs;
};

class LegMatrix {
 public:
  LegMatrix(int leg_count, int leg_dim);

  static LegMatrix identity(int leg_count, int leg_dim);
  // 2-leg permutation operator P(e_a (x) e_b) = e_b (x) e_a.
  static LegMatrix permutation_op(int leg_dim);
  // 1-leg elementary matrix e_{x,y}.
  static LegMatrix elementary(int leg_dim, int x, int y);

  int leg_count() const { return leg_count_; }
  int leg_dim() const { return leg_dim_; }
  Index dim() const { return dim_; }

  void set(Index row, Index col, Poly v);
  void add_to(Index row, Index col, const Poly& v);
  Poly at(Index row, Index col) const;
  const std::map<Index, std::map<Index, Poly>>& rows() const { return rows_; }
  std::size_t nnz() const;
  bool is_zero() const { return rows_.empty(); }

  LegMatrix& operator+=(const LegMatrix& o);
  LegMatrix& operator-=(const LegMatrix& o);
  friend LegMatrix operator+(LegMatrix a, const LegMatrix& b) { return a += b; }
  friend LegMatrix operator-(LegMatrix a, const LegMatrix& b) { return a -= b; }
  friend LegMatrix operator*(const LegMatrix& a, const LegMatrix& b);
  friend LegMatrix operator*(const Poly& c, const LegMatrix& m);
  bool operator==(const LegMatrix& o) const;
  bool operator!=(const LegMatrix& o) const { return !(*this == o); }

  LegMatrix transpose() const;
  // Transpose a single leg of a 2-leg matrix (0 = first space, 1 = second).
  LegMatrix partial_transpose(int leg) const;
  // Contract one leg, reducing leg_count by 1; requires leg_count >= 2.
  LegMatrix trace_leg(int leg) const;
  Poly trace() const;
  // Basis relabeling: digit i of the result is digit perm[i] of the source.
  LegMatrix permute_legs(const std::vector<int>& perm) const;

  LegMatrix map_entries(const std::function<Poly(const Poly&)>& f) const;
  LegMatrix eval(const Rational& lambda) const;
  // Matrix of lambda^k coefficients (constant entries).
  LegMatrix coefficient(int k) const;

  std::vector<int> unpack(Index i) const;
  Index pack(const std::vector<int>& digits) const;

 private:
  int leg_count_;
  int leg_dim_;
  Index dim_;
  std::map<Index, std::map<Index, Poly>> rows_;
};

// Place a 2-leg op on legs (i, j) of a total_legs system, identity elsewhere.
// Subscript order matters: op's first leg lands on position i, second on j.
LegMatrix embed2(const LegMatrix& op, int i, int j, int total_legs);
// Same for a 1-leg op on position i.
LegMatrix embed1(const LegMatrix& op, int i, int total_legs);
// Tensor product; legs of a are more significant than legs of b.
LegMatrix kron(const LegMatrix& a, const LegMatrix& b);

LegMatrix commutator(const LegMatrix& a, const LegMatrix& b);
std::optional<EntryWitness> first_difference(const LegMatrix& a, const LegMatrix& b);

}  // namespace ybl

#endif
