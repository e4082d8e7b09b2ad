#include "ybl/intlinalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ybl {

IntMat int_identity(int n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  IntMat out(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

SmithForm smith_normal_form(const IntMat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SmithForm f{a, int_identity(rows), int_identity(cols), 0, {}};
  IntMat& s = f.s;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  auto swap_rows = [&](int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(f.p[i], f.p[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : s) std::swap(row[i], row[j]);
    for (auto& row : f.q) std::swap(row[i], row[j]);
  };
  auto row_sub = [&](int i, int j, const Int& q) {  // row_i -= q * row_j
    for (int c = 0; c < cols; ++c) s[i][c] -= q * s[j][c];
    for (int c = 0; c < rows; ++c) f.p[i][c] -= q * f.p[j][c];
  };
  auto col_sub = [&](int i, int j, const Int& q) {  // col_i -= q * col_j
    for (int r = 0; r < rows; ++r) s[r][i] -= q * s[r][j];
    for (int r = 0; r < cols; ++r) f.q[r][i] -= q * f.q[r][j];
  };
  auto negate_row = [&](int i) {
    for (auto& v : s[i]) v = -v;
    for (auto& v : f.p[i]) v = -v;
  };

  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s[i][j] != 0 &&
            (pi < 0 || abs(s[i][j]) < abs(s[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (s[i][t] != 0) {
        row_sub(i, t, s[i][t] / s[t][t]);
        if (s[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (s[t][j] != 0) {
        col_sub(j, t, s[t][j] / s[t][t]);
        if (s[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders exist; pick a new pivot

    // The pivot must divide the whole trailing block for the invariant
    // factor chain; folding an offending row in fixes it.
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (s[i][j] % s[t][t] != 0) {
          row_sub(t, i, Int(-1));  // add row i to row t
          divides = false;
          break;
        }
    if (!divides) continue;

    if (s[t][t] < 0) negate_row(t);
    ++t;
  }
  f.rank = t;
  for (int i = 0; i < t; ++i) f.invariant_factors.push_back(s[i][i]);
  return f;
}

}  // namespace ybl
