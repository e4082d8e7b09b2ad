#include "ybl/brace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ybl {

namespace {

void check_table_shape(const OpTable& t, int n, const std::string& name) {
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument(name + " table has " + std::to_string(t.size()) +
                                " rows, expected " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n)
      throw std::invalid_argument(name + " table row " + std::to_string(i) + " has " +
                                  std::to_string(t[i].size()) + " entries, expected " +
                                  std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (t[i][j] < 0 || t[i][j] >= n)
        throw std::invalid_argument(name + " table entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") = " + std::to_string(t[i][j]) +
                                    " out of range");
  }
}

// Group with identity 0: associativity, identity, inverses; abelian optional.
bool check_group(const OpTable& op, int n, bool require_abelian, AxiomWitness* w,
                 const std::string& tag) {
  for (int a = 0; a < n; ++a) {
    if (op[a][0] != a || op[0][a] != a) {
      if (w) *w = AxiomWitness{tag + ": 0 is not the identity", {a}};
      return false;
    }
  }
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (op[a][b] == 0 && op[b][a] == 0) has_inverse = true;
    if (!has_inverse) {
      if (w) *w = AxiomWitness{tag + ": no inverse", {a}};
      return false;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (require_abelian && op[a][b] != op[b][a]) {
        if (w) *w = AxiomWitness{tag + ": not commutative", {a, b}};
        return false;
      }
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]]) {
          if (w) *w = AxiomWitness{tag + ": not associative", {a, b, c}};
          return false;
        }
    }
  return true;
}

}  // namespace

RingReport validate_ring(const FiniteRing& ring) {
  const int n = ring.size;
  if (n < 1) throw std::invalid_argument("ring size must be >= 1");
  check_table_shape(ring.add, n, "add");
  check_table_shape(ring.mul, n, "mul");

  RingReport rep;
  AxiomWitness w;
  rep.abelian_add = check_group(ring.add, n, true, &w, "add");
  if (!rep.abelian_add) rep.witness = w;

  rep.associative_mul = true;
  for (int a = 0; a < n && rep.associative_mul; ++a)
    for (int b = 0; b < n && rep.associative_mul; ++b)
      for (int c = 0; c < n; ++c)
        if (ring.mul[ring.mul[a][b]][c] != ring.mul[a][ring.mul[b][c]]) {
          rep.associative_mul = false;
          if (!rep.witness) rep.witness = AxiomWitness{"mul: not associative", {a, b, c}};
          break;
        }

  rep.distributive = true;
  for (int a = 0; a < n && rep.distributive; ++a)
    for (int b = 0; b < n && rep.distributive; ++b)
      for (int c = 0; c < n; ++c) {
        if (ring.mul[a][ring.add[b][c]] != ring.add[ring.mul[a][b]][ring.mul[a][c]] ||
            ring.mul[ring.add[a][b]][c] != ring.add[ring.mul[a][c]][ring.mul[b][c]]) {
          rep.distributive = false;
          if (!rep.witness) rep.witness = AxiomWitness{"mul: not distributive", {a, b, c}};
          break;
        }
      }

  if (rep.ok()) {
    // Least k <= n with every k-fold product zero. Iterate the set of
    // left-associated products; associativity covers all bracketings.
    std::set<int> products;
    for (int a = 0; a < n; ++a) products.insert(a);
    for (int k = 1; k <= n; ++k) {
      if (products.size() == 1 && *products.begin() == 0) {
        rep.nilpotency_index = k;
        break;
      }
      std::set<int> next;
      for (int p : products)
        for (int a = 0; a < n; ++a) next.insert(ring.mul[p][a]);
      products = std::move(next);
    }
  }
  return rep;
}

BraceReport validate_brace(const FiniteBrace& brace) {
  const int n = brace.size;
  if (n < 1) throw std::invalid_argument("brace size must be >= 1");
  check_table_shape(brace.add, n, "add");
  check_table_shape(brace.circle, n, "circle");

  BraceReport rep;
  AxiomWitness w;
  rep.abelian_add = check_group(brace.add, n, true, &w, "add");
  if (!rep.abelian_add) rep.witness = w;
  rep.circle_group = check_group(brace.circle, n, false, &w, "circle");
  if (!rep.circle_group && !rep.witness) rep.witness = w;

  // a o (b+c) + a = a o b + a o c
  rep.compatible = true;
  for (int a = 0; a < n && rep.compatible; ++a)
    for (int b = 0; b < n && rep.compatible; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = brace.add[brace.circle[a][brace.add[b][c]]][a];
        int rhs = brace.add[brace.circle[a][b]][brace.circle[a][c]];
        if (lhs != rhs) {
          rep.compatible = false;
          if (!rep.witness) rep.witness = AxiomWitness{"compatibility", {a, b, c}};
          break;
        }
      }
  return rep;
}

FiniteBrace ring_to_brace(const FiniteRing& ring) {
  RingReport rr = validate_ring(ring);
  if (!rr.ok()) throw std::invalid_argument("ring_to_brace: not a valid ring");
  if (!rr.nilpotency_index)
    throw std::invalid_argument("ring_to_brace: ring is not nilpotent");
  FiniteBrace b;
  b.size = ring.size;
  b.add = ring.add;
  b.circle.assign(ring.size, std::vector<int>(ring.size, 0));
  for (int x = 0; x < ring.size; ++x)
    for (int y = 0; y < ring.size; ++y)
      b.circle[x][y] = ring.add[ring.mul[x][y]][ring.add[x][y]];
  BraceReport br = validate_brace(b);
  if (!br.ok()) throw std::invalid_argument("ring_to_brace: result fails brace axioms");
  return b;
}

int circle_inverse(const FiniteBrace& brace, int a) {
  for (int b = 0; b < brace.size; ++b)
    if (brace.circle[a][b] == 0 && brace.circle[b][a] == 0) return b;
  throw std::invalid_argument("circle_inverse: no inverse found (invalid brace?)");
}

int add_inverse(const OpTable& add, int a) {
  const int n = static_cast<int>(add.size());
  for (int b = 0; b < n; ++b)
    if (add[a][b] == 0) return b;
  throw std::invalid_argument("add_inverse: no inverse found");
}

FiniteRing scaled_mod_ring(int m, long c) {
  if (m < 1) throw std::invalid_argument("scaled_mod_ring: m must be >= 1");
  FiniteRing r;
  r.size = m;
  r.add.assign(m, std::vector<int>(m, 0));
  r.mul.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r.add[a][b] = (a + b) % m;
      r.mul[a][b] = static_cast<int>((c % m) * a % m * b % m);
    }
  return r;
}

FiniteRing truncated_poly_ring(int p, int k) {
  if (p < 2 || k < 2) throw std::invalid_argument("truncated_poly_ring: need p >= 2, k >= 2");
  // Element index encodes coefficients of t, t^2, ..., t^(k-1) base p.
  int n = 1;
  for (int i = 1; i < k; ++i) n *= p;
  auto digits = [&](int e) {
    std::vector<int> d(k, 0);  // d[i] = coefficient of t^i, d[0] unused
    for (int i = 1; i < k; ++i) {
      d[i] = e % p;
      e /= p;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int e = 0;
    for (int i = k - 1; i >= 1; --i) e = e * p + d[i];
    return e;
  };
  FiniteRing r;
  r.size = n;
  r.add.assign(n, std::vector<int>(n, 0));
  r.mul.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<int> sum(k, 0), prod(k, 0);
      for (int i = 1; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      for (int i = 1; i < k; ++i)
        for (int j = 1; i + j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      r.add[a][b] = index(sum);
      r.mul[a][b] = index(prod);
    }
  }
  return r;
}

FiniteBrace trivial_brace(int n) {
  if (n < 1) throw std::invalid_argument("trivial_brace: n must be >= 1");
  FiniteBrace b;
  b.size = n;
  b.add.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) b.add[a][c] = (a + c) % n;
  b.circle = b.add;
  return b;
}

std::vector<int> central_involutive_elements(const FiniteBrace& brace) {
  std::vector<int> out;
  for (int a = 0; a < brace.size; ++a) {
    if (brace.add[a][a] != 0 || brace.circle[a][a] != 0) continue;
    bool central = true;
    for (int b = 0; b < brace.size && central; ++b)
      if (brace.circle[a][b] != brace.circle[b][a]) central = false;
    if (central) out.push_back(a);
  }
  return out;
}

IdealReport validate_ideal(const FiniteBrace& brace, const std::vector<int>& subset) {
  const int n = brace.size;
  std::set<int> J(subset.begin(), subset.end());
  for (int j : J)
    if (j < 0 || j >= n) return {false, "element out of range", {j}};
  if (!J.count(0)) return {false, "additive subgroup: missing 0", {0}};
  for (int a : J)
    for (int b : J)
      if (!J.count(brace.add[a][b]))
        return {false, "additive subgroup: not closed under +", {a, b}};
  for (int a : J)
    if (!J.count(add_inverse(brace.add, a)))
      return {false, "additive subgroup: not closed under negation", {a}};
  for (int a : J)
    for (int b : J)
      if (!J.count(brace.circle[a][b]))
        return {false, "circle subgroup: not closed under o", {a, b}};
  for (int a : J)
    if (!J.count(circle_inverse(brace, a)))
      return {false, "circle subgroup: not closed under inverse", {a}};
  for (int b = 0; b < n; ++b) {
    int binv = circle_inverse(brace, b);
    for (int j : J)
      if (!J.count(brace.circle[brace.circle[b][j]][binv]))
        return {false, "circle subgroup: not normal", {b, j}};
  }
  for (int a = 0; a < n; ++a)
    for (int j : J)
      if (!J.count(brace_sigma(brace, a, j)))
        return {false, "not sigma-invariant", {a, j}};
  return {true, "", {}};
}

BraceQuotient quotient_brace(const FiniteBrace& brace, const std::vector<int>& ideal) {
  IdealReport ir = validate_ideal(brace, ideal);
  if (!ir.ok) throw std::invalid_argument("quotient_brace: ideal invalid: " + ir.failed_axiom);

  const int n = brace.size;
  std::set<int> J(ideal.begin(), ideal.end());
  // Additive cosets, represented by their least element.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int j : J) coset_of[brace.add[a][j]] = idx;
  }
  const int q = static_cast<int>(reps.size());

  FiniteBrace out;
  out.size = q;
  out.add.assign(q, std::vector<int>(q, -1));
  out.circle.assign(q, std::vector<int>(q, -1));
  // Fill from every pair of representatives and confirm the operations are
  // constant on cosets.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ca = coset_of[a], cb = coset_of[b];
      int s = coset_of[brace.add[a][b]];
      int m = coset_of[brace.circle[a][b]];
      if (out.add[ca][cb] == -1)
        out.add[ca][cb] = s;
      else if (out.add[ca][cb] != s)
        throw std::invalid_argument("quotient_brace: + not well defined on cosets");
      if (out.circle[ca][cb] == -1)
        out.circle[ca][cb] = m;
      else if (out.circle[ca][cb] != m)
        throw std::invalid_argument("quotient_brace: o not well defined on cosets");
    }
  // The coset of 0 is scanned first, so it is element 0 of the quotient.
  BraceReport br = validate_brace(out);
  if (!br.ok()) throw std::invalid_argument("quotient_brace: quotient fails brace axioms");
  return {out, coset_of};
}

}  // namespace ybl
