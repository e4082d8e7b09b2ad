#include "ybl/solution.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybl {

namespace {

void check_solution_shape(const SetSolution& s) {
  if (s.size < 1) throw std::invalid_argument("solution size must be >= 1");
  auto check = [&](const OpTable& t, const char* name) {
    if (static_cast<int>(t.size()) != s.size)
      throw std::invalid_argument(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != s.size)
        throw std::invalid_argument(std::string(name) + " table has a wrong-length row");
      for (int v : row)
        if (v < 0 || v >= s.size)
          throw std::invalid_argument(std::string(name) + " table entry out of range");
    }
  };
  check(s.sigma, "sigma");
  check(s.tau, "tau");
}

bool is_permutation(const std::vector<int>& row) {
  std::vector<char> seen(row.size(), 0);
  for (int v : row) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Multiset of cycle lengths, used to prune the isomorphism search.
std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace

SolutionReport validate(const SetSolution& sol) {
  check_solution_shape(sol);
  const int n = sol.size;
  SolutionReport rep;

  rep.nondegenerate = true;
  for (int x = 0; x < n; ++x) {
    if (!is_permutation(sol.sigma[x])) {
      rep.nondegenerate = false;
      rep.witness = PairWitness{"nondegenerate: sigma row is not a bijection", {x}};
      break;
    }
    if (!is_permutation(sol.tau[x])) {
      rep.nondegenerate = false;
      rep.witness = PairWitness{"nondegenerate: tau row is not a bijection", {x}};
      break;
    }
  }

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = sol.r(x, y);
      if (sol.r(u, v) != std::make_pair(x, y)) {
        rep.involutive = false;
        if (!rep.witness) rep.witness = PairWitness{"involutive", {x, y}};
        break;
      }
    }

  // (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on every triple.
  rep.braid = true;
  for (int x = 0; x < n && rep.braid; ++x)
    for (int y = 0; y < n && rep.braid; ++y)
      for (int z = 0; z < n; ++z) {
        auto lhs = [&] {
          auto [a, b] = sol.r(x, y);
          auto [c, d] = sol.r(b, z);
          auto [e, f] = sol.r(a, c);
          return std::array<int, 3>{e, f, d};
        }();
        auto rhs = [&] {
          auto [b, c] = sol.r(y, z);
          auto [a, b2] = sol.r(x, b);
          auto [c2, d] = sol.r(b2, c);
          return std::array<int, 3>{a, c2, d};
        }();
        if (lhs != rhs) {
          rep.braid = false;
          if (!rep.witness) rep.witness = PairWitness{"braid", {x, y, z}};
          break;
        }
      }
  return rep;
}

SetSolution trivial_solution(int n) {
  if (n < 1) throw std::invalid_argument("trivial_solution: n must be >= 1");
  SetSolution s;
  s.size = n;
  s.sigma.assign(n, std::vector<int>(n, 0));
  s.tau.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      s.sigma[x][y] = y;
      s.tau[x][y] = y;
    }
  return s;
}

SetSolution lyubashenko(int m) {
  if (m < 1) throw std::invalid_argument("lyubashenko: m must be >= 1");
  SetSolution s;
  s.size = m;
  s.sigma.assign(m, std::vector<int>(m, 0));
  s.tau.assign(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      s.sigma[x][y] = (y + 1) % m;
      s.tau[x][y] = (y + m - 1) % m;
    }
  return s;
}

SetSolution disjoint_union(const SetSolution& a, const SetSolution& b) {
  SetSolution s;
  s.size = a.size + b.size;
  s.sigma.assign(s.size, std::vector<int>(s.size, 0));
  s.tau.assign(s.size, std::vector<int>(s.size, 0));
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y) {
      bool xa = x < a.size, ya = y < a.size;
      if (xa && ya) {
        s.sigma[x][y] = a.sigma[x][y];
        s.tau[x][y] = a.tau[x][y];
      } else if (!xa && !ya) {
        s.sigma[x][y] = b.sigma[x - a.size][y - a.size] + a.size;
        s.tau[x][y] = b.tau[x - a.size][y - a.size] + a.size;
      } else {
        s.sigma[x][y] = y;  // flip across components
        s.tau[x][y] = y;
      }
    }
  return s;
}

BraceSolution solution_from_brace(const FiniteBrace& brace,
                                  std::optional<std::vector<int>> X) {
  BraceReport br = validate_brace(brace);
  if (!br.ok()) throw std::invalid_argument("solution_from_brace: brace invalid");

  std::vector<int> elems;
  if (X) {
    elems = *X;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int e : elems)
      if (e < 0 || e >= brace.size)
        throw std::invalid_argument("solution_from_brace: X element out of range");
    if (elems.empty()) throw std::invalid_argument("solution_from_brace: X is empty");
  } else {
    elems.resize(brace.size);
    std::iota(elems.begin(), elems.end(), 0);
  }

  std::vector<int> index_of(brace.size, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);

  const int n = static_cast<int>(elems.size());
  SetSolution s;
  s.size = n;
  s.sigma.assign(n, std::vector<int>(n, 0));
  s.tau.assign(n, std::vector<int>(n, 0));
  for (int xi = 0; xi < n; ++xi)
    for (int yi = 0; yi < n; ++yi) {
      int x = elems[xi], y = elems[yi];
      int sg = brace_sigma(brace, x, y);          // x o y - x
      int t = circle_inverse(brace, sg);
      int tv = brace_sub(brace, brace.circle[t][x], t);  // t o x - t
      if (index_of[sg] < 0 || index_of[tv] < 0)
        throw std::invalid_argument("solution_from_brace: X not closed under r at pair (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
      s.sigma[xi][yi] = index_of[sg];
      s.tau[yi][xi] = index_of[tv];
    }
  SolutionReport rep = validate(s);
  if (!rep.ok())
    throw std::invalid_argument("solution_from_brace: constructed tables fail validation");
  return {s, brace, elems, index_of};
}

std::vector<std::vector<int>> orbits(const SetSolution& sol) {
  const int n = sol.size;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      unite(y, sol.sigma[x][y]);
      unite(y, sol.tau[x][y]);
    }
  std::map<int, std::vector<int>> blocks;
  for (int y = 0; y < n; ++y) blocks[find(y)].push_back(y);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

std::optional<SolutionHom> check_hom(const std::vector<int>& f, const SetSolution& dom,
                                     const SetSolution& cod, PairWitness* witness) {
  if (static_cast<int>(f.size()) != dom.size) {
    if (witness) *witness = PairWitness{"map has wrong length", {}};
    return std::nullopt;
  }
  std::vector<char> hit(cod.size, 0);
  for (int v : f) {
    if (v < 0 || v >= cod.size) {
      if (witness) *witness = PairWitness{"map value out of range", {v}};
      return std::nullopt;
    }
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    if (witness) *witness = PairWitness{"not surjective", {}};
    return std::nullopt;
  }
  for (int x = 0; x < dom.size; ++x)
    for (int y = 0; y < dom.size; ++y) {
      auto [u, v] = dom.r(x, y);
      auto [pu, pv] = cod.r(f[x], f[y]);
      if (pu != f[u] || pv != f[v]) {
        if (witness) *witness = PairWitness{"intertwining fails", {x, y}};
        return std::nullopt;
      }
    }
  return SolutionHom{dom, cod, f};
}

SolutionHom compose(const SolutionHom& first, const SolutionHom& then) {
  if (first.codomain.size != then.domain.size)
    throw std::invalid_argument("compose: domain/codomain sizes do not match");
  std::vector<int> f(first.map.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = then.map[first.map[i]];
  auto hom = check_hom(f, first.domain, then.codomain);
  if (!hom) throw std::logic_error("compose: composite is not a homomorphism");
  return *hom;
}

Retraction retract(const SetSolution& sol) {
  const int n = sol.size;
  // Classes are equality classes of sigma rows.
  std::map<std::vector<int>, int> class_of_row;
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) {
    auto it = class_of_row.find(sol.sigma[x]);
    if (it == class_of_row.end())
      it = class_of_row.emplace(sol.sigma[x], static_cast<int>(class_of_row.size())).first;
    cls[x] = it->second;
  }
  const int q = static_cast<int>(class_of_row.size());
  SetSolution ret;
  ret.size = q;
  ret.sigma.assign(q, std::vector<int>(q, -1));
  ret.tau.assign(q, std::vector<int>(q, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cs = cls[sol.sigma[x][y]];
      int ct = cls[sol.tau[x][y]];
      int& s = ret.sigma[cls[x]][cls[y]];
      if (s == -1)
        s = cs;
      else if (s != cs)
        throw std::invalid_argument("retract: induced sigma not well defined at (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
      int& t = ret.tau[cls[x]][cls[y]];
      if (t == -1)
        t = ct;
      else if (t != ct)
        throw std::invalid_argument("retract: induced tau not well defined at (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
    }
  SolutionReport rep = validate(ret);
  if (!rep.ok()) throw std::invalid_argument("retract: induced solution fails validation");
  auto hom = check_hom(cls, sol, ret);
  if (!hom) throw std::logic_error("retract: class map is not a homomorphism");
  return {ret, *hom};
}

std::optional<int> multipermutation_level(const SetSolution& sol) {
  SetSolution cur = sol;
  int level = 0;
  while (cur.size > 1) {
    Retraction r = retract(cur);
    if (r.retracted.size == cur.size) return std::nullopt;
    cur = r.retracted;
    ++level;
  }
  return level;
}

std::optional<SolutionHom> find_iso(const SetSolution& a, const SetSolution& b) {
  if (a.size != b.size) return std::nullopt;
  if (a.size > 8) throw std::invalid_argument("find_iso: sizes above 8 are out of scope");
  const int n = a.size;
  std::vector<std::vector<int>> ta(n), tb(n);
  for (int x = 0; x < n; ++x) {
    ta[x] = cycle_type(a.sigma[x]);
    tb[x] = cycle_type(b.sigma[x]);
  }
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool pruned = false;
    for (int x = 0; x < n; ++x)
      if (ta[x] != tb[f[x]]) {
        pruned = true;
        break;
      }
    if (pruned) continue;
    if (auto hom = check_hom(f, a, b)) return hom;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

SolutionHom quotient_by_ideal(const FiniteBrace& brace, const std::vector<int>& X,
                              const std::vector<int>& ideal) {
  BraceQuotient bq = quotient_brace(brace, ideal);
  BraceSolution dom = solution_from_brace(brace, X);
  std::vector<int> XJ;
  for (int e : X) XJ.push_back(bq.coset_of[e]);
  std::sort(XJ.begin(), XJ.end());
  XJ.erase(std::unique(XJ.begin(), XJ.end()), XJ.end());
  BraceSolution codom = solution_from_brace(bq.quotient, XJ);
  std::vector<int> f(dom.sol.size);
  for (int i = 0; i < dom.sol.size; ++i)
    f[i] = codom.index_of[bq.coset_of[dom.elements[i]]];
  auto hom = check_hom(f, dom.sol, codom.sol);
  if (!hom) throw std::logic_error("quotient_by_ideal: coset map is not a homomorphism");
  return *hom;
}

SolutionHom orbit_collapse(const SetSolution& sol) {
  auto blocks = orbits(sol);
  std::vector<int> f(sol.size, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int e : blocks[i]) f[e] = static_cast<int>(i);
  auto hom = check_hom(f, sol, trivial_solution(static_cast<int>(blocks.size())));
  if (!hom) throw std::logic_error("orbit_collapse: orbit map is not a homomorphism");
  return *hom;
}

std::optional<LyubashenkoRetract> retract_to_lyubashenko(const SetSolution& sol) {
  SolutionReport rep = validate(sol);
  if (!rep.ok()) throw std::invalid_argument("retract_to_lyubashenko: solution invalid");
  if (orbits(sol).size() != 1)
    throw std::invalid_argument("retract_to_lyubashenko: solution is decomposable");
  bool sigma_varies = false;
  for (int x = 1; x < sol.size && !sigma_varies; ++x)
    if (sol.sigma[x] != sol.sigma[0]) sigma_varies = true;
  if (!sigma_varies)
    throw std::invalid_argument("retract_to_lyubashenko: all sigma maps coincide");
  if (!multipermutation_level(sol))
    throw std::invalid_argument("retract_to_lyubashenko: no finite multipermutation level");

  SetSolution cur = sol;
  std::vector<SolutionHom> chain;
  while (true) {
    if (cur.size > 1 && cur.size <= 8) {
      if (auto iso = find_iso(cur, lyubashenko(cur.size)))
        return LyubashenkoRetract{cur.size, chain, *iso};
    }
    if (cur.size == 1) return std::nullopt;
    Retraction r = retract(cur);
    chain.push_back(r.hom);
    cur = r.retracted;
  }
}

}  // namespace ybl
