#include "ybl/rmatrix.hpp"

#include <stdexcept>

namespace ybl {

namespace {

// Matrix equality check packaged as a CheckResult with an entry witness.
CheckResult equality_check(const std::string& name, const std::string& anchor,
                           const LegMatrix& lhs, const LegMatrix& rhs) {
  if (auto w = first_difference(lhs, rhs))
    return CheckResult::failed(name, anchor, entry_witness_json(*w));
  return CheckResult::passed(name, anchor);
}

}  // namespace

Json entry_witness_json(const EntryWitness& w) {
  Json j;
  j["row"] = w.row;
  j["col"] = w.col;
  j["lhs"] = w.lhs.str();
  j["rhs"] = w.rhs.str();
  return j;
}

LegMatrix r_matrix_alt(const SetSolution& sol) {
  LegMatrix r(2, sol.size);
  for (int x = 0; x < sol.size; ++x)
    for (int y = 0; y < sol.size; ++y) {
      auto [u, v] = sol.r(x, y);
      r.add_to(r.pack({v, u}), r.pack({x, y}), Poly(1));
    }
  return r;
}

RBundle build_rbundle(const SetSolution& sol, bool validate_input) {
  if (validate_input) {
    SolutionReport rep = validate(sol);
    if (!rep.ok()) throw std::invalid_argument("build_rbundle: solution invalid");
  }
  const int n = sol.size;

  LegMatrix check(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = sol.r(x, y);
      // e_{x, sigma_x(y)} (x) e_{y, tau_y(x)}
      check.add_to(check.pack({x, y}), check.pack({u, v}), Poly(1));
    }

  LegMatrix perm = LegMatrix::permutation_op(n);
  LegMatrix r = perm * check;
  LegMatrix ident = LegMatrix::identity(2, n);
  Poly lambda = Poly::variable();

  RBundle b{sol, check, r, perm, lambda * check + ident, lambda * r + perm, false};
  b.dual_form_match = (r == r_matrix_alt(sol));
  return b;
}

std::vector<CheckResult> verify_hecke(const RBundle& bundle, int sites) {
  if (sites < 3) throw std::invalid_argument("verify_hecke: need at least 3 sites");
  const int n = bundle.sol.size;
  std::vector<LegMatrix> g;
  for (int i = 1; i <= sites - 1; ++i)
    g.push_back(embed2(bundle.check_const, i - 1, i, sites));
  LegMatrix ident = LegMatrix::identity(sites, n);

  std::vector<CheckResult> out;
  for (int i = 0; i + 1 < static_cast<int>(g.size()); ++i)
    out.push_back(equality_check("braid g" + std::to_string(i + 1),
                                 "g_l g_{l+1} g_l == g_{l+1} g_l g_{l+1}",
                                 g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1]));
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    for (int j = i + 2; j < static_cast<int>(g.size()); ++j)
      out.push_back(equality_check(
          "commute g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1),
          "[g_l, g_m] == 0 for |l-m| > 1", g[i] * g[j], g[j] * g[i]));
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    out.push_back(equality_check("square g" + std::to_string(i + 1),
                                 "g_l^2 == I (quadratic relation at q = 1)", g[i] * g[i],
                                 ident));
  return out;
}

SpectralReport verify_spectral(const RBundle& bundle) {
  const int n = bundle.sol.size;
  SpectralReport rep;

  // Two-parameter equations go through the integer grid; triple products of
  // degree-1 factors have per-variable degree <= 3.
  auto braid_at = [&](const Rational& u) { return bundle.check_spec.eval(u); };
  auto ybe_braid_side = [&](bool lhs) {
    return GridSide([&, lhs](std::span<const Rational> p) {
      Rational l1 = p[0], l2 = p[1], delta = l1 - l2;
      if (lhs)
        return embed2(braid_at(delta), 0, 1, 3) * embed2(braid_at(l1), 1, 2, 3) *
               embed2(braid_at(l2), 0, 1, 3);
      return embed2(braid_at(l2), 1, 2, 3) * embed2(braid_at(l1), 0, 1, 3) *
             embed2(braid_at(delta), 1, 2, 3);
    });
  };
  GridResult gr = grid_verify_identity(ybe_braid_side(true), ybe_braid_side(false), 2, 3);
  rep.ybe_braid = gr.pass ? CheckResult::passed("ybe-braid",
                                                "B12(l1-l2) B23(l1) B12(l2) == "
                                                "B23(l2) B12(l1) B23(l1-l2)")
                          : CheckResult::failed("ybe-braid",
                                                "B12(l1-l2) B23(l1) B12(l2) == "
                                                "B23(l2) B12(l1) B23(l1-l2)",
                                                Json{{"point", gr.witness->point},
                                                     {"row", gr.witness->row},
                                                     {"col", gr.witness->col},
                                                     {"lhs", gr.witness->lhs.str()},
                                                     {"rhs", gr.witness->rhs.str()}});

  auto r_at = [&](const Rational& u) { return bundle.r_spec.eval(u); };
  auto ybe_std_side = [&](bool lhs) {
    return GridSide([&, lhs](std::span<const Rational> p) {
      Rational l1 = p[0], l2 = p[1], delta = l1 - l2;
      if (lhs)
        return embed2(r_at(delta), 0, 1, 3) * embed2(r_at(l1), 0, 2, 3) *
               embed2(r_at(l2), 1, 2, 3);
      return embed2(r_at(l2), 1, 2, 3) * embed2(r_at(l1), 0, 2, 3) *
             embed2(r_at(delta), 0, 1, 3);
    });
  };
  gr = grid_verify_identity(ybe_std_side(true), ybe_std_side(false), 2, 3);
  rep.ybe_standard =
      gr.pass
          ? CheckResult::passed("ybe-standard",
                                "R12(l1-l2) R13(l1) R23(l2) == R23(l2) R13(l1) R12(l1-l2)")
          : CheckResult::failed("ybe-standard",
                                "R12(l1-l2) R13(l1) R23(l2) == R23(l2) R13(l1) R12(l1-l2)",
                                Json{{"point", gr.witness->point},
                                     {"row", gr.witness->row},
                                     {"col", gr.witness->col},
                                     {"lhs", gr.witness->lhs.str()},
                                     {"rhs", gr.witness->rhs.str()}});

  // Single-parameter identities in exact polynomial matrix arithmetic.
  LegMatrix ident = LegMatrix::identity(2, n);
  LegMatrix r21 = bundle.r_spec.permute_legs({1, 0});
  LegMatrix r21_neg = r21.map_entries([](const Poly& p) { return p.compose_affine(-1, 0); });
  Poly unit_factor = Poly(1) - Poly::monomial(2, 1);  // 1 - lambda^2
  rep.unitarity = equality_check("unitarity", "R12(l) R21(-l) == (1-l^2) I",
                                 bundle.r_spec * r21_neg, unit_factor * ident);

  LegMatrix rt1 = bundle.r_spec.partial_transpose(0);
  LegMatrix rt2 = bundle.r_spec.partial_transpose(1);
  LegMatrix rt2_shift =
      rt2.map_entries([&](const Poly& p) { return p.compose_affine(-1, -n); });
  // lambda * (-lambda - n)
  Poly cross_factor = Poly::monomial(1, 1) * (Poly::monomial(1, -1) - Poly(n));
  rep.crossing = equality_check("crossing-unitarity",
                                "R12^T1(l) R12^T2(-l-N) == l(-l-N) I, N = |X|",
                                rt1 * rt2_shift, cross_factor * ident);

  rep.t1t2 = equality_check("t1t2", "R12^T1T2(l) == R21(l)",
                            bundle.r_spec.partial_transpose(0).partial_transpose(1), r21);

  LegMatrix pt1 = bundle.perm.partial_transpose(0);
  LegMatrix ct1 = bundle.r_const.partial_transpose(0);
  LegMatrix ct2 = bundle.r_const.partial_transpose(1);
  rep.p3.push_back(equality_check("p3-perm", "(P^T1)^2 == N P^T1", pt1 * pt1,
                                  Poly(n) * pt1));
  rep.p3.push_back(equality_check("p3-left", "r^T1 P^T1 == P^T1", ct1 * pt1, pt1));
  rep.p3.push_back(equality_check("p3-right", "P^T1 r^T2 == P^T1", pt1 * ct2, pt1));
  rep.p3.push_back(equality_check("p3-product", "r^T1 r^T2 == I", ct1 * ct2, ident));
  return rep;
}

std::vector<CheckResult> SpectralReport::all() const {
  std::vector<CheckResult> out{ybe_braid, ybe_standard, unitarity, crossing, t1t2};
  out.insert(out.end(), p3.begin(), p3.end());
  return out;
}

}  // namespace ybl
