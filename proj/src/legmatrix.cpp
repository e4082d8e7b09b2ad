#include "ybl/legmatrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ybl {

namespace {

Index pow_index(int base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<Index>(base);
  return r;
}

}  // namespace

LegMatrix::LegMatrix(int leg_count, int leg_dim)
    : leg_count_(leg_count), leg_dim_(leg_dim), dim_(pow_index(leg_dim, leg_count)) {
  if (leg_count < 0 || leg_dim < 1) throw std::invalid_argument("LegMatrix: bad leg structure");
}

LegMatrix LegMatrix::identity(int leg_count, int leg_dim) {
  LegMatrix m(leg_count, leg_dim);
  for (Index i = 0; i < m.dim_; ++i) m.rows_[i][i] = Poly(1);
  return m;
}

LegMatrix LegMatrix::permutation_op(int leg_dim) {
  LegMatrix m(2, leg_dim);
  for (int a = 0; a < leg_dim; ++a)
    for (int b = 0; b < leg_dim; ++b)
      m.rows_[static_cast<Index>(b) * leg_dim + a][static_cast<Index>(a) * leg_dim + b] = Poly(1);
  return m;
}

LegMatrix LegMatrix::elementary(int leg_dim, int x, int y) {
  LegMatrix m(1, leg_dim);
  if (x < 0 || x >= leg_dim || y < 0 || y >= leg_dim)
    throw std::invalid_argument("elementary: index out of range");
  m.rows_[static_cast<Index>(x)][static_cast<Index>(y)] = Poly(1);
  return m;
}

void LegMatrix::set(Index row, Index col, Poly v) {
  if (row >= dim_ || col >= dim_) throw std::out_of_range("LegMatrix::set: index out of range");
  if (v.is_zero()) {
    auto it = rows_.find(row);
    if (it != rows_.end()) {
      it->second.erase(col);
      if (it->second.empty()) rows_.erase(it);
    }
  } else {
    rows_[row][col] = std::move(v);
  }
}

void LegMatrix::add_to(Index row, Index col, const Poly& v) { set(row, col, at(row, col) + v); }

Poly LegMatrix::at(Index row, Index col) const {
  auto it = rows_.find(row);
  if (it == rows_.end()) return Poly();
  auto jt = it->second.find(col);
  return jt == it->second.end() ? Poly() : jt->second;
}

std::size_t LegMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& [r, cols] : rows_) n += cols.size();
  return n;
}

LegMatrix& LegMatrix::operator+=(const LegMatrix& o) {
  if (leg_count_ != o.leg_count_ || leg_dim_ != o.leg_dim_)
    throw std::invalid_argument("LegMatrix: leg structure mismatch in +");
  for (const auto& [r, cols] : o.rows_)
    for (const auto& [c, v] : cols) add_to(r, c, v);
  return *this;
}

LegMatrix& LegMatrix::operator-=(const LegMatrix& o) {
  if (leg_count_ != o.leg_count_ || leg_dim_ != o.leg_dim_)
    throw std::invalid_argument("LegMatrix: leg structure mismatch in -");
  for (const auto& [r, cols] : o.rows_)
    for (const auto& [c, v] : cols) add_to(r, c, -v);
  return *this;
}

LegMatrix operator*(const LegMatrix& a, const LegMatrix& b) {
  if (a.leg_count_ != b.leg_count_ || a.leg_dim_ != b.leg_dim_)
    throw std::invalid_argument("LegMatrix: leg structure mismatch in *");
  LegMatrix out(a.leg_count_, a.leg_dim_);
  for (const auto& [i, arow] : a.rows_) {
    std::map<Index, Poly> acc;
    for (const auto& [k, av] : arow) {
      auto bit = b.rows_.find(k);
      if (bit == b.rows_.end()) continue;
      for (const auto& [j, bv] : bit->second) {
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, av * bv);
        else
          it->second += av * bv;
      }
    }
    for (auto& [j, v] : acc)
      if (!v.is_zero()) out.rows_[i].emplace(j, std::move(v));
    if (out.rows_.count(i) && out.rows_[i].empty()) out.rows_.erase(i);
  }
  return out;
}

LegMatrix operator*(const Poly& c, const LegMatrix& m) {
  LegMatrix out(m.leg_count_, m.leg_dim_);
  if (c.is_zero()) return out;
  for (const auto& [r, cols] : m.rows_)
    for (const auto& [col, v] : cols) {
      Poly p = c * v;
      if (!p.is_zero()) out.rows_[r][col] = std::move(p);
    }
  return out;
}

bool LegMatrix::operator==(const LegMatrix& o) const {
  return leg_count_ == o.leg_count_ && leg_dim_ == o.leg_dim_ && rows_ == o.rows_;
}

LegMatrix LegMatrix::transpose() const {
  LegMatrix out(leg_count_, leg_dim_);
  for (const auto& [r, cols] : rows_)
    for (const auto& [c, v] : cols) out.rows_[c][r] = v;
  return out;
}

LegMatrix LegMatrix::partial_transpose(int leg) const {
  if (leg_count_ != 2) throw std::invalid_argument("partial_transpose: needs a 2-leg matrix");
  if (leg != 0 && leg != 1) throw std::out_of_range("partial_transpose: leg out of range");
  LegMatrix out(2, leg_dim_);
  for (const auto& [r, cols] : rows_) {
    auto rd = unpack(r);
    for (const auto& [c, v] : cols) {
      auto cd = unpack(c);
      auto nr = rd, nc = cd;
      std::swap(nr[leg], nc[leg]);
      out.rows_[pack(nr)][pack(nc)] = v;
    }
  }
  return out;
}

LegMatrix LegMatrix::trace_leg(int leg) const {
  if (leg_count_ < 2) throw std::invalid_argument("trace_leg: needs at least 2 legs");
  if (leg < 0 || leg >= leg_count_) throw std::out_of_range("trace_leg: leg out of range");
  LegMatrix out(leg_count_ - 1, leg_dim_);
  for (const auto& [r, cols] : rows_) {
    auto rd = unpack(r);
    for (const auto& [c, v] : cols) {
      auto cd = unpack(c);
      if (rd[leg] != cd[leg]) continue;
      auto nr = rd, nc = cd;
      nr.erase(nr.begin() + leg);
      nc.erase(nc.begin() + leg);
      out.add_to(out.pack(nr), out.pack(nc), v);
    }
  }
  return out;
}

Poly LegMatrix::trace() const {
  Poly t;
  for (const auto& [r, cols] : rows_) {
    auto it = cols.find(r);
    if (it != cols.end()) t += it->second;
  }
  return t;
}

LegMatrix LegMatrix::permute_legs(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != leg_count_)
    throw std::invalid_argument("permute_legs: permutation length mismatch");
  std::set<int> seen(perm.begin(), perm.end());
  if (static_cast<int>(seen.size()) != leg_count_ || *seen.begin() != 0 ||
      *seen.rbegin() != leg_count_ - 1)
    throw std::invalid_argument("permute_legs: not a permutation of legs");
  LegMatrix out(leg_count_, leg_dim_);
  for (const auto& [r, cols] : rows_) {
    auto rd = unpack(r);
    std::vector<int> nr(leg_count_);
    for (int i = 0; i < leg_count_; ++i) nr[i] = rd[perm[i]];
    for (const auto& [c, v] : cols) {
      auto cd = unpack(c);
      std::vector<int> nc(leg_count_);
      for (int i = 0; i < leg_count_; ++i) nc[i] = cd[perm[i]];
      out.rows_[pack(nr)][pack(nc)] = v;
    }
  }
  return out;
}

LegMatrix LegMatrix::map_entries(const std::function<Poly(const Poly&)>& f) const {
  LegMatrix out(leg_count_, leg_dim_);
  for (const auto& [r, cols] : rows_)
    for (const auto& [c, v] : cols) {
      Poly p = f(v);
      if (!p.is_zero()) out.rows_[r][c] = std::move(p);
    }
  return out;
}

LegMatrix LegMatrix::eval(const Rational& lambda) const {
  return map_entries([&](const Poly& p) { return Poly(p.eval(lambda)); });
}

LegMatrix LegMatrix::coefficient(int k) const {
  return map_entries([&](const Poly& p) { return Poly(p.coeff(k)); });
}

std::vector<int> LegMatrix::unpack(Index i) const {
  std::vector<int> d(leg_count_);
  for (int leg = leg_count_ - 1; leg >= 0; --leg) {
    d[leg] = static_cast<int>(i % leg_dim_);
    i /= leg_dim_;
  }
  return d;
}

Index LegMatrix::pack(const std::vector<int>& digits) const {
  Index i = 0;
  for (int leg = 0; leg < leg_count_; ++leg) i = i * leg_dim_ + digits[leg];
  return i;
}

LegMatrix embed2(const LegMatrix& op, int i, int j, int total_legs) {
  if (op.leg_count() != 2) throw std::invalid_argument("embed2: op must have 2 legs");
  if (i == j) throw std::invalid_argument("embed2: duplicate positions");
  if (i < 0 || j < 0 || i >= total_legs || j >= total_legs)
    throw std::out_of_range("embed2: position out of range");
  const int d = op.leg_dim();
  LegMatrix out(total_legs, d);
  // Free legs run over all values; the op's digits are spliced in at i and j.
  std::vector<int> free_legs;
  for (int l = 0; l < total_legs; ++l)
    if (l != i && l != j) free_legs.push_back(l);
  Index free_count = 1;
  for (std::size_t f = 0; f < free_legs.size(); ++f) free_count *= d;
  std::vector<int> rd(total_legs), cd(total_legs);
  for (const auto& [r, cols] : op.rows()) {
    auto ord = op.unpack(r);
    for (const auto& [c, v] : cols) {
      auto ocd = op.unpack(c);
      for (Index mask = 0; mask < free_count; ++mask) {
        Index m = mask;
        for (auto it = free_legs.rbegin(); it != free_legs.rend(); ++it) {
          rd[*it] = cd[*it] = static_cast<int>(m % d);
          m /= d;
        }
        rd[i] = ord[0];
        rd[j] = ord[1];
        cd[i] = ocd[0];
        cd[j] = ocd[1];
        out.set(out.pack(rd), out.pack(cd), v);
      }
    }
  }
  return out;
}

LegMatrix embed1(const LegMatrix& op, int i, int total_legs) {
  if (op.leg_count() != 1) throw std::invalid_argument("embed1: op must have 1 leg");
  if (i < 0 || i >= total_legs) throw std::out_of_range("embed1: position out of range");
  const int d = op.leg_dim();
  LegMatrix out(total_legs, d);
  Index free_count = 1;
  for (int l = 0; l < total_legs - 1; ++l) free_count *= d;
  std::vector<int> rd(total_legs), cd(total_legs);
  for (const auto& [r, cols] : op.rows()) {
    for (const auto& [c, v] : cols) {
      for (Index mask = 0; mask < free_count; ++mask) {
        Index m = mask;
        for (int l = total_legs - 1; l >= 0; --l) {
          if (l == i) continue;
          rd[l] = cd[l] = static_cast<int>(m % d);
          m /= d;
        }
        rd[i] = static_cast<int>(r);
        cd[i] = static_cast<int>(c);
        out.set(out.pack(rd), out.pack(cd), v);
      }
    }
  }
  return out;
}

LegMatrix kron(const LegMatrix& a, const LegMatrix& b) {
  if (a.leg_dim() != b.leg_dim()) throw std::invalid_argument("kron: leg dimension mismatch");
  LegMatrix out(a.leg_count() + b.leg_count(), a.leg_dim());
  const Index bd = b.dim();
  for (const auto& [ar, acols] : a.rows())
    for (const auto& [ac, av] : acols)
      for (const auto& [br, bcols] : b.rows())
        for (const auto& [bc, bv] : bcols) out.set(ar * bd + br, ac * bd + bc, av * bv);
  return out;
}

LegMatrix commutator(const LegMatrix& a, const LegMatrix& b) { return a * b - b * a; }

std::optional<EntryWitness> first_difference(const LegMatrix& a, const LegMatrix& b) {
  if (a.leg_count() != b.leg_count() || a.leg_dim() != b.leg_dim())
    throw std::invalid_argument("first_difference: leg structure mismatch");
  for (Index r = 0; r < a.dim(); ++r) {
    // Walk the union of both sparse rows in column order.
    std::map<Index, Poly> merged;
    auto ait = a.rows().find(r);
    auto bit = b.rows().find(r);
    if (ait != a.rows().end())
      for (const auto& [c, v] : ait->second) merged[c] = v;
    if (bit != b.rows().end())
      for (const auto& [c, v] : bit->second)
        if (!merged.count(c)) merged[c] = Poly();
    for (const auto& [c, av] : merged) {
      Poly bv = b.at(r, c);
      Poly avv = a.at(r, c);
      if (avv != bv) return EntryWitness{r, c, avv, bv};
    }
  }
  return std::nullopt;
}

}  // namespace ybl
