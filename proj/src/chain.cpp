#include "ybl/chain.hpp"

#include <string>

namespace ybl {

namespace {

long pow_long(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1L << 40)) return r;  // plenty past any sensible budget
  }
  return r;
}

CheckResult equality_check(const std::string& name, const std::string& anchor,
                           const LegMatrix& lhs, const LegMatrix& rhs) {
  if (auto w = first_difference(lhs, rhs))
    return CheckResult::failed(name, anchor, entry_witness_json(*w));
  return CheckResult::passed(name, anchor);
}

}  // namespace

LegMatrix shift_operator(int sites, int leg_dim) {
  LegMatrix pi = LegMatrix::identity(sites, leg_dim);
  LegMatrix p = LegMatrix::permutation_op(leg_dim);
  for (int n = 0; n + 1 < sites; ++n) pi = pi * embed2(p, n, n + 1, sites);
  return pi;
}

ChainSystem build_chain(const SetSolution& sol, int sites, long budget, bool validate_input) {
  if (sites < 1) throw std::invalid_argument("build_chain: sites must be >= 1");
  long dim = pow_long(sol.size, sites + 1);
  if (dim > budget)
    throw BudgetError("build_chain: " + std::to_string(sol.size) + "^" +
                      std::to_string(sites + 1) + " = " + std::to_string(dim) +
                      " basis states exceed budget " + std::to_string(budget));

  ChainSystem c{sol,
                sites,
                build_rbundle(sol, validate_input),
                LegMatrix(0, 1),
                {},
                LegMatrix(0, 1),
                LegMatrix(0, 1),
                {}};

  // T_0 = R_{0N} ... R_{02} R_{01} on legs 0..N, leg 0 auxiliary.
  const int legs = sites + 1;
  LegMatrix t = embed2(c.bundle.r_spec, 0, sites, legs);
  for (int n = sites - 1; n >= 1; --n) t = t * embed2(c.bundle.r_spec, 0, n, legs);
  c.monodromy = t;

  LegMatrix transfer = t.trace_leg(0);
  for (int k = 0; k <= sites; ++k) c.t_coeff.push_back(transfer.coefficient(sites - k));

  c.shift = shift_operator(sites, sol.size);
  c.shift_inv = c.shift.transpose();
  for (int k = 0; k < sites; ++k) c.ham.push_back(c.t_coeff[k] * c.shift_inv);
  c.ham.push_back(c.shift);
  return c;
}

CommutingReport verify_commuting(const ChainSystem& chain) {
  CommutingReport rep;
  for (int k = 0; k <= chain.sites; ++k)
    for (int l = k; l <= chain.sites; ++l) {
      ++rep.pairs_checked;
      if (k == l) continue;
      LegMatrix lhs = chain.t_coeff[k] * chain.t_coeff[l];
      LegMatrix rhs = chain.t_coeff[l] * chain.t_coeff[k];
      if (auto w = first_difference(lhs, rhs)) {
        Json witness = entry_witness_json(*w);
        witness["k"] = k;
        witness["l"] = l;
        rep.checks.push_back(CheckResult::failed(
            "commute t" + std::to_string(k) + ",t" + std::to_string(l),
            "[t^(k), t^(l)] == 0", witness));
      }
    }
  if (rep.checks.empty())
    rep.checks.push_back(CheckResult::passed(
        "transfer-commutativity", "[t^(k), t^(l)] == 0 for all k, l in 0..N"));
  return rep;
}

CheckResult verify_rtt(const SetSolution& sol, int sites, long budget) {
  const std::string anchor =
      "B12(l1-l2) T1(l1) T2(l2) == T1(l2) T2(l1) B12(l1-l2), T = monodromy";
  long dim = pow_long(sol.size, sites + 2);
  if (dim > budget)
    throw BudgetError("verify_rtt: " + std::to_string(dim) + " basis states exceed budget " +
                      std::to_string(budget));
  RBundle b = build_rbundle(sol);
  const int legs = sites + 2;  // two auxiliary copies then the quantum legs

  auto monodromy_at = [&](int aux, const Rational& lambda) {
    LegMatrix r = b.r_spec.eval(lambda);
    LegMatrix t = embed2(r, aux, legs - 1, legs);
    for (int n = legs - 2; n >= 2; --n) t = t * embed2(r, aux, n, legs);
    return t;
  };
  auto side = [&](bool lhs) {
    return GridSide([&, lhs](std::span<const Rational> p) {
      Rational l1 = p[0], l2 = p[1];
      LegMatrix braid = embed2(b.check_spec.eval(l1 - l2), 0, 1, legs);
      if (lhs) return braid * monodromy_at(0, l1) * monodromy_at(1, l2);
      return monodromy_at(0, l2) * monodromy_at(1, l1) * braid;
    });
  };
  GridResult gr = grid_verify_identity(side(true), side(false), 2, sites + 1);
  if (gr.pass) return CheckResult::passed("rtt", anchor);
  return CheckResult::failed("rtt", anchor,
                             Json{{"point", gr.witness->point},
                                  {"row", gr.witness->row},
                                  {"col", gr.witness->col},
                                  {"lhs", gr.witness->lhs.str()},
                                  {"rhs", gr.witness->rhs.str()}});
}

LegMatrix staircase(const RBundle& bundle, int sites, int n, int m) {
  LegMatrix out = LegMatrix::identity(sites, bundle.sol.size);
  for (int j = n - 1; j >= m; --j) out = out * embed2(bundle.check_const, j - 1, j, sites);
  return out;
}

LegMatrix hamiltonian_top_closed_form(const RBundle& bundle, int sites) {
  LegMatrix sum(sites, bundle.sol.size);
  for (int n = 1; n <= sites - 1; ++n) sum += embed2(bundle.check_const, n - 1, n, sites);
  sum += embed2(bundle.check_const, sites - 1, 0, sites);  // wrap term r_{N,1}
  return sum;
}

LegMatrix hamiltonian_second_closed_form(const RBundle& bundle, int sites) {
  if (sites < 3)
    throw std::invalid_argument("hamiltonian_second_closed_form: needs sites >= 3");
  const int n0 = bundle.sol.size;
  auto rk = [&](int a, int b) { return embed2(bundle.check_const, a - 1, b - 1, sites); };
  LegMatrix sum(sites, n0);
  for (int m = 1; m < sites; ++m)
    for (int n = m + 1; n < sites; ++n) sum += rk(n, n + 1) * rk(m, m + 1);
  for (int n = 1; n <= sites - 2; ++n) sum += rk(n, n + 1) * rk(sites, 1);
  sum += rk(sites, 1) * rk(sites - 1, sites);
  return sum;
}

LegMatrix hamiltonian_first_closed_form(const RBundle& bundle, int sites) {
  auto rk = [&](int a, int b) { return embed2(bundle.check_const, a - 1, b - 1, sites); };
  LegMatrix sum(sites, bundle.sol.size);
  for (int n = 1; n <= sites - 1; ++n)
    sum += staircase(bundle, sites, n, 1) * rk(sites, 1) * staircase(bundle, sites, sites, n + 1);
  sum += staircase(bundle, sites, sites, 1);
  return sum;
}

LegMatrix t_zero_closed_form(const SetSolution& sol, int sites) {
  const int n0 = sol.size;
  // Inverses of the sigma rows, needed to walk the cyclic constraints.
  std::vector<std::vector<int>> sigma_inv(n0, std::vector<int>(n0, 0));
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y) sigma_inv[x][sol.sigma[x][y]] = y;

  LegMatrix out(sites, n0);
  std::vector<int> xs(sites), ys(sites), cols(sites);
  long tuples = 1;
  for (int i = 0; i < sites; ++i) tuples *= n0;
  for (long tup = 0; tup < tuples; ++tup) {
    long t = tup;
    for (int i = sites - 1; i >= 0; --i) {
      xs[i] = static_cast<int>(t % n0);
      t /= n0;
    }
    for (int y1 = 0; y1 < n0; ++y1) {
      ys[0] = y1;
      for (int i = 1; i < sites; ++i) ys[i] = sigma_inv[xs[i]][ys[i - 1]];
      // Cyclic closure: y_N must equal sigma_{x_1}(y_1).
      if (ys[sites - 1] != sol.sigma[xs[0]][y1]) continue;
      for (int i = 0; i < sites; ++i) cols[i] = sol.tau[ys[i]][xs[i]];
      out.add_to(out.pack(xs), out.pack(cols), Poly(1));
    }
  }
  return out;
}

ClosedFormReport verify_closed_forms(const ChainSystem& chain) {
  if (chain.sites < 2)
    throw std::invalid_argument("verify_closed_forms: needs sites >= 2");
  const int N = chain.sites;
  ClosedFormReport rep;
  rep.t_top = equality_check("t-top", "t^(N) == P_12 P_23 ... P_{N-1,N}",
                             chain.t_coeff[N], chain.shift);
  rep.h_top = equality_check("h-top", "H^(N-1) == sum_n r_{n,n+1} with wrap r_{N,1}",
                             chain.ham[N - 1],
                             hamiltonian_top_closed_form(chain.bundle, N));
  if (N >= 3)
    rep.h_second = equality_check(
        "h-second",
        "H^(N-2) == sum_{m<n<N} r_{n,n+1} r_{m,m+1} + sum_{n<=N-2} r_{n,n+1} r_{N,1} "
        "+ r_{N,1} r_{N-1,N}",
        chain.ham[N - 2], hamiltonian_second_closed_form(chain.bundle, N));
  else
    rep.h_second = CheckResult::passed("h-second", "skipped: distinct only for N >= 3");
  rep.h_first = equality_check(
      "h-first", "H^(1) == sum_n S_{n;1} r_{N,1} S_{N;n+1} + S_{N;1} (S = staircase)",
      chain.ham[1], hamiltonian_first_closed_form(chain.bundle, N));
  rep.t_zero = equality_check(
      "t-zero", "t^(0) == constrained sum over tuples with y_n = sigma_{x_{n+1}}(y_{n+1})",
      chain.t_coeff[0], t_zero_closed_form(chain.sol, N));
  return rep;
}

std::vector<CheckResult> ClosedFormReport::all() const {
  return {t_top, h_top, h_second, h_first, t_zero};
}

std::vector<CheckResult> verify_shift_action(const RBundle& bundle, int sites) {
  if (sites < 4) throw std::invalid_argument("verify_shift_action: needs sites >= 4");
  auto rk = [&](int a, int b) { return embed2(bundle.check_const, a - 1, b - 1, sites); };
  LegMatrix s = staircase(bundle, sites, sites, 1);
  std::vector<CheckResult> out;
  for (int n = 2; n <= sites - 2; ++n)
    out.push_back(equality_check("shift-bulk n=" + std::to_string(n),
                                 "S_{N;1} r_{n,n+1} == r_{n-1,n} S_{N;1}",
                                 s * rk(n, n + 1), rk(n - 1, n) * s));
  out.push_back(equality_check("shift-left", "S_{N;1} r_{12} == S_{N;2}", s * rk(1, 2),
                               staircase(bundle, sites, sites, 2)));
  out.push_back(equality_check("shift-right", "r_{N-1,N} S_{N;1} == S_{N-1;1}",
                               rk(sites - 1, sites) * s,
                               staircase(bundle, sites, sites - 1, 1)));
  return out;
}

}  // namespace ybl
