// Command-line driver. Every command prints a machine-readable report (JSON)
// to stdout or --out; exit status is 0 when all checks pass, 1 on failed
// checks, 2 on malformed input or precondition violations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "ybl/acceptance.hpp"
#include "ybl/corpus.hpp"
#include "ybl/io.hpp"
#include "ybl/qalgebra.hpp"
#include "ybl/symmetry.hpp"

namespace {

using namespace ybl;

struct Options {
  std::string solution_spec;
  std::string other_solution;
  std::string ring_spec;
  std::string brace_spec;
  std::string corpus = "default";
  std::string out_path;
  std::string elements;  // comma list (ideal, subset, map...)
  std::string alpha;
  std::string f_perm;
  std::string kind = "graded";
  std::string mode = "orbits";
  std::string b_file;
  int sites = 2;
  int max_sites = 4;
  int max_level = 2;
  int m = 2;
  int n = 2;
  int a_elem = 0;
  int b_elem = 0;
  int c_elem = 0;
  long budget = kDefaultBudget;
  bool do_validate = false;
  bool verify_commute = false;
  bool closed_forms = false;
  bool ablate = false;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(Rational(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int emit(RunReport rep, const Options& opt, double seconds) {
  rep.wall_seconds = seconds;
  Json j = rep.to_json();
  if (opt.out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw IoError("cannot write " + opt.out_path);
    f << j.dump(2) << "\n";
  }
  return rep.exit_code();
}

CheckResult bool_check(const std::string& name, const std::string& anchor, bool pass,
                       Json witness = Json()) {
  return pass ? CheckResult::passed(name, anchor)
              : CheckResult::failed(name, anchor, std::move(witness));
}

void add_symmetry_report(RunReport& rep, const SymmetryReport& sym) {
  for (const auto& c : sym.checks) {
    CheckResult named = c;
    named.name = sym.generator + ": " + c.name;
    rep.checks.push_back(std::move(named));
  }
}

std::vector<int> identity_map(int n) {
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

LegMatrix one_site_matrix_from_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json j = Json::parse(in);
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw IoError("B matrix: expected " + std::to_string(dim) + " rows");
  LegMatrix b(1, dim);
  for (int r = 0; r < dim; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
      throw IoError("B matrix row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < dim; ++c) {
      Rational v = j[r][c].is_string() ? Rational(j[r][c].get<std::string>())
                                       : Rational(j[r][c].get<long>());
      b.set(r, c, Poly(v));
    }
  }
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybl: exact verification workbench for set-theoretic Yang-Baxter structures"};
  app.require_subcommand(1);
  Options opt;
  RunReport rep;
  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_path, "write the report JSON here instead of stdout");
    cmd->add_option("--budget", opt.budget, "basis-state budget for chain constructions");
  };

  // ---- ring ----
  auto* ring = app.add_subcommand("ring", "finite ring commands");
  {
    auto* v = ring->add_subcommand("validate", "check ring axioms and nilpotency");
    v->add_option("--ring", opt.ring_spec, "mod:m,c | tpoly:p,k | file")->required();
    add_common(v);
    v->callback([&] {
      rep.command = "ring validate";
      FiniteRing r = parse_ring_spec(opt.ring_spec);
      rep.inputs = Json{{"ring", opt.ring_spec}, {"size", r.size}};
      RingReport rr = validate_ring(r);
      Json w = rr.witness ? Json{{"axiom", rr.witness->axiom}, {"at", rr.witness->elements}}
                          : Json();
      rep.checks.push_back(bool_check("abelian-add", "(R,+) abelian group", rr.abelian_add, w));
      rep.checks.push_back(bool_check("associative-mul", "* associative", rr.associative_mul, w));
      rep.checks.push_back(bool_check("distributive", "* distributes over +", rr.distributive, w));
      rep.checks.push_back(CheckResult{
          "nilpotency", "least k with all k-fold products zero", true,
          rr.nilpotency_index ? Json{{"index", *rr.nilpotency_index}} : Json{{"index", nullptr}}});
    });
    auto* tb = ring->add_subcommand("to-brace", "a o b = a*b + a + b");
    tb->add_option("--ring", opt.ring_spec)->required();
    add_common(tb);
    tb->callback([&] {
      rep.command = "ring to-brace";
      FiniteRing r = parse_ring_spec(opt.ring_spec);
      rep.inputs = Json{{"ring", opt.ring_spec}};
      FiniteBrace b = ring_to_brace(r);
      rep.checks.push_back(bool_check("brace-axioms", "result passes the brace checks",
                                      validate_brace(b).ok()));
      rep.result = brace_to_json(b);
    });
  }

  // ---- brace ----
  auto* brace = app.add_subcommand("brace", "finite brace commands");
  {
    auto* v = brace->add_subcommand("validate", "check brace axioms");
    v->add_option("--brace", opt.brace_spec, "ring:<ringspec> | trivial:n | file")->required();
    add_common(v);
    v->callback([&] {
      rep.command = "brace validate";
      FiniteBrace b = parse_brace_spec(opt.brace_spec);
      rep.inputs = Json{{"brace", opt.brace_spec}, {"size", b.size}};
      BraceReport br = validate_brace(b);
      Json w = br.witness ? Json{{"axiom", br.witness->axiom}, {"at", br.witness->elements}}
                          : Json();
      rep.checks.push_back(bool_check("abelian-add", "(B,+) abelian group", br.abelian_add, w));
      rep.checks.push_back(bool_check("circle-group", "(B,o) group", br.circle_group, w));
      rep.checks.push_back(
          bool_check("compatibility", "a o (b+c) + a == a o b + a o c", br.compatible, w));
    });
    auto* q = brace->add_subcommand("quotient", "quotient by an ideal");
    q->add_option("--brace", opt.brace_spec)->required();
    q->add_option("--ideal", opt.elements, "comma-separated elements")->required();
    add_common(q);
    q->callback([&] {
      rep.command = "brace quotient";
      FiniteBrace b = parse_brace_spec(opt.brace_spec);
      std::vector<int> ideal = parse_int_list(opt.elements);
      rep.inputs = Json{{"brace", opt.brace_spec}, {"ideal", ideal}};
      BraceQuotient bq = quotient_brace(b, ideal);
      rep.checks.push_back(bool_check("quotient-brace", "quotient passes the brace checks",
                                      validate_brace(bq.quotient).ok()));
      rep.result = Json{{"quotient", brace_to_json(bq.quotient)}, {"coset_of", bq.coset_of}};
    });
    auto* c = brace->add_subcommand("central", "central elements with a+a = 0, a o a = 0");
    c->add_option("--brace", opt.brace_spec)->required();
    add_common(c);
    c->callback([&] {
      rep.command = "brace central";
      FiniteBrace b = parse_brace_spec(opt.brace_spec);
      rep.inputs = Json{{"brace", opt.brace_spec}};
      rep.result = Json{{"central_involutive", central_involutive_elements(b)}};
    });
  }

  // ---- solution ----
  auto* sol_cmd = app.add_subcommand("solution", "set-theoretic solution commands");
  {
    auto* v = sol_cmd->add_subcommand("validate", "non-degeneracy, involutivity, braid");
    v->add_option("--solution", opt.solution_spec)->required();
    add_common(v);
    v->callback([&] {
      rep.command = "solution validate";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"size", s.sol.size}};
      SolutionReport sr = validate(s.sol);
      Json w = sr.witness ? Json{{"check", sr.witness->check}, {"at", sr.witness->elements}}
                          : Json();
      rep.checks.push_back(bool_check("nondegenerate", "all sigma and tau rows bijective",
                                      sr.nondegenerate, w));
      rep.checks.push_back(bool_check("involutive", "r(r(x,y)) == (x,y)", sr.involutive, w));
      rep.checks.push_back(bool_check("braid", "braid equation on all triples", sr.braid, w));
    });
    auto* fb = sol_cmd->add_subcommand("from-brace", "Rump construction");
    fb->add_option("--brace", opt.brace_spec)->required();
    fb->add_option("--x", opt.elements, "subset of brace elements (default: all)");
    add_common(fb);
    fb->callback([&] {
      rep.command = "solution from-brace";
      FiniteBrace b = parse_brace_spec(opt.brace_spec);
      std::optional<std::vector<int>> X;
      if (!opt.elements.empty()) X = parse_int_list(opt.elements);
      BraceSolution bs = solution_from_brace(b, X);
      rep.inputs = Json{{"brace", opt.brace_spec}};
      rep.checks.push_back(
          bool_check("validates", "constructed solution passes validation", true));
      rep.result = solution_to_json(bs.sol, "brace:" + opt.brace_spec);
    });
    auto* ly = sol_cmd->add_subcommand("lyubashenko", "cyclic one-orbit solution");
    ly->add_option("--m", opt.m)->required();
    ly->add_flag("--validate", opt.do_validate);
    add_common(ly);
    ly->callback([&] {
      rep.command = "solution lyubashenko";
      SetSolution s = lyubashenko(opt.m);
      rep.inputs = Json{{"m", opt.m}};
      if (opt.do_validate) {
        SolutionReport sr = validate(s);
        rep.checks.push_back(bool_check("nondegenerate", "rows bijective", sr.nondegenerate));
        rep.checks.push_back(bool_check("involutive", "r(r(x,y)) == (x,y)", sr.involutive));
        rep.checks.push_back(bool_check("braid", "braid equation", sr.braid));
      }
      rep.result = solution_to_json(s, "lyubashenko:" + std::to_string(opt.m));
    });
    auto* tr = sol_cmd->add_subcommand("trivial", "flip solution");
    tr->add_option("--n", opt.n)->required();
    tr->add_flag("--validate", opt.do_validate);
    add_common(tr);
    tr->callback([&] {
      rep.command = "solution trivial";
      SetSolution s = trivial_solution(opt.n);
      rep.inputs = Json{{"n", opt.n}};
      if (opt.do_validate) {
        SolutionReport sr = validate(s);
        rep.checks.push_back(bool_check("validates", "all three properties", sr.ok()));
      }
      rep.result = solution_to_json(s, "trivial:" + std::to_string(opt.n));
    });
    auto* orb = sol_cmd->add_subcommand("orbits", "finest closed partition");
    orb->add_option("--solution", opt.solution_spec)->required();
    add_common(orb);
    orb->callback([&] {
      rep.command = "solution orbits";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}};
      auto blocks = orbits(s.sol);
      rep.result = Json{{"orbits", blocks}, {"indecomposable", blocks.size() == 1}};
    });
    auto* ret = sol_cmd->add_subcommand("retract", "quotient by equal sigma rows");
    ret->add_option("--solution", opt.solution_spec)->required();
    add_common(ret);
    ret->callback([&] {
      rep.command = "solution retract";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}};
      Retraction r = retract(s.sol);
      rep.checks.push_back(bool_check("hom", "class map is a solution homomorphism", true));
      rep.result = Json{{"retracted", solution_to_json(r.retracted)}, {"classes", r.hom.map}};
    });
    auto* mp = sol_cmd->add_subcommand("mp-level", "multipermutation level");
    mp->add_option("--solution", opt.solution_spec)->required();
    add_common(mp);
    mp->callback([&] {
      rep.command = "solution mp-level";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}};
      auto level = multipermutation_level(s.sol);
      rep.result = level ? Json{{"level", *level}} : Json{{"level", nullptr}};
    });
    auto* hom = sol_cmd->add_subcommand("hom", "check a map between solutions");
    hom->add_option("--solution", opt.solution_spec, "domain")->required();
    hom->add_option("--to", opt.other_solution, "codomain")->required();
    hom->add_option("--map", opt.elements, "comma-separated images")->required();
    add_common(hom);
    hom->callback([&] {
      rep.command = "solution hom";
      NamedSolution a = parse_solution_spec(opt.solution_spec);
      NamedSolution b = parse_solution_spec(opt.other_solution);
      std::vector<int> f = parse_int_list(opt.elements);
      rep.inputs = Json{{"domain", a.name}, {"codomain", b.name}, {"map", f}};
      PairWitness w;
      bool ok = check_hom(f, a.sol, b.sol, &w).has_value();
      rep.checks.push_back(bool_check("hom", "intertwining and surjectivity", ok,
                                      ok ? Json() : Json{{"failed", w.check}, {"at", w.elements}}));
    });
    auto* iso = sol_cmd->add_subcommand("iso", "search for an isomorphism");
    iso->add_option("--solution", opt.solution_spec)->required();
    iso->add_option("--to", opt.other_solution)->required();
    add_common(iso);
    iso->callback([&] {
      rep.command = "solution iso";
      NamedSolution a = parse_solution_spec(opt.solution_spec);
      NamedSolution b = parse_solution_spec(opt.other_solution);
      rep.inputs = Json{{"a", a.name}, {"b", b.name}};
      auto f = find_iso(a.sol, b.sol);
      rep.result = f ? Json{{"found", true}, {"map", f->map}} : Json{{"found", false}};
    });
  }

  // ---- rmatrix ----
  auto* rm = app.add_subcommand("rmatrix", "R-matrix commands");
  {
    auto* b = rm->add_subcommand("build", "build the matrix bundle");
    b->add_option("--solution", opt.solution_spec)->required();
    add_common(b);
    b->callback([&] {
      rep.command = "rmatrix build";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}};
      RBundle bun = build_rbundle(s.sol);
      rep.checks.push_back(bool_check("dual-form", "both constant forms of r agree",
                                      bun.dual_form_match));
      rep.checks.push_back(bool_check(
          "involution", "braid matrix squares to the identity",
          bun.check_const * bun.check_const == LegMatrix::identity(2, s.sol.size)));
      rep.result = Json{{"nnz", bun.check_const.nnz()}, {"dim", bun.check_const.dim()}};
    });
    auto* c = rm->add_subcommand("check", "spectral identities and braid-group relations");
    c->add_option("--solution", opt.solution_spec)->required();
    c->add_option("--sites", opt.sites, "sites for the braid-group relations (default 3)");
    add_common(c);
    c->callback([&] {
      rep.command = "rmatrix check";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", std::max(opt.sites, 3)}};
      RBundle bun = build_rbundle(s.sol);
      SpectralReport sr = verify_spectral(bun);
      for (const auto& chk : sr.all()) rep.checks.push_back(chk);
      for (const auto& chk : verify_hecke(bun, std::max(opt.sites, 3)))
        rep.checks.push_back(chk);
    });
  }

  // ---- chain ----
  auto* ch = app.add_subcommand("chain", "periodic chain commands");
  {
    auto* b = ch->add_subcommand("build", "build monodromy and transfer coefficients");
    b->add_option("--solution", opt.solution_spec)->required();
    b->add_option("--sites", opt.sites)->required();
    b->add_flag("--verify-commute", opt.verify_commute);
    b->add_flag("--closed-forms", opt.closed_forms);
    add_common(b);
    b->callback([&] {
      rep.command = "chain build";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      Json summary;
      summary["sites"] = c.sites;
      summary["dim"] = c.t_coeff[0].dim();
      rep.checks.push_back(bool_check("t-top", "t^(N) equals the shift operator",
                                      c.t_coeff[c.sites] == c.shift));
      if (opt.verify_commute) {
        CommutingReport cr = verify_commuting(c);
        summary["commuting_pairs_checked"] = cr.pairs_checked;
        for (const auto& chk : cr.checks) rep.checks.push_back(chk);
      }
      if (opt.closed_forms) {
        ClosedFormReport cf = verify_closed_forms(c);
        Json forms;
        for (const auto& chk : cf.all()) {
          forms[chk.name] = chk.pass;
          rep.checks.push_back(chk);
        }
        summary["closed_forms"] = forms;
      }
      rep.result = summary;
    });
    auto* r = ch->add_subcommand("verify-rtt", "exchange relation for the monodromy");
    r->add_option("--solution", opt.solution_spec)->required();
    r->add_option("--sites", opt.sites)->required();
    add_common(r);
    r->callback([&] {
      rep.command = "chain verify-rtt";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      rep.checks.push_back(verify_rtt(s.sol, opt.sites, opt.budget));
    });
    auto* cf = ch->add_subcommand("closed-forms", "independent rebuilds of the closed forms");
    cf->add_option("--solution", opt.solution_spec)->required();
    cf->add_option("--sites", opt.sites)->required();
    add_common(cf);
    cf->callback([&] {
      rep.command = "chain closed-forms";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      for (const auto& chk : verify_closed_forms(c).all()) rep.checks.push_back(chk);
    });
    auto* sa = ch->add_subcommand("shift-action", "staircase exchange identities");
    sa->add_option("--solution", opt.solution_spec)->required();
    sa->add_option("--sites", opt.sites)->required();
    add_common(sa);
    sa->callback([&] {
      rep.command = "chain shift-action";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      for (const auto& chk : verify_shift_action(build_rbundle(s.sol), opt.sites))
        rep.checks.push_back(chk);
    });
  }

  // ---- symmetry ----
  auto* sy = app.add_subcommand("symmetry", "transfer-matrix symmetry commands");
  {
    auto* l = sy->add_subcommand("lift", "one-site matrix lifted through the monodromy");
    l->add_option("--solution", opt.solution_spec)->required();
    l->add_option("--sites", opt.sites)->required();
    l->add_option("--b-file", opt.b_file, "JSON matrix; defaults to the identity");
    add_common(l);
    l->callback([&] {
      rep.command = "symmetry lift";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      LegMatrix b = opt.b_file.empty() ? LegMatrix::identity(1, s.sol.size)
                                       : one_site_matrix_from_file(opt.b_file, s.sol.size);
      add_symmetry_report(rep, lift_check(b, c));
    });
    auto* co = sy->add_subcommand("cocycle", "admissible diagonal weights");
    co->add_option("--solution", opt.solution_spec)->required();
    co->add_option("--f", opt.f_perm, "automorphism as comma list (default identity)");
    add_common(co);
    co->callback([&] {
      rep.command = "symmetry cocycle";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      std::vector<int> f =
          opt.f_perm.empty() ? identity_map(s.sol.size) : parse_int_list(opt.f_perm);
      rep.inputs = Json{{"solution", s.name}, {"f", f}};
      CocycleBasis basis = solve_cocycle(s.sol, f);
      Json free_chars = Json::array(), signs = Json::array(), torsion = Json::array();
      for (const auto& alpha : basis.free_characters) {
        Json row = Json::array();
        for (const auto& v : alpha) row.push_back(to_string(v));
        free_chars.push_back(row);
      }
      for (const auto& alpha : basis.sign_characters) {
        Json row = Json::array();
        for (const auto& v : alpha) row.push_back(to_string(v));
        signs.push_back(row);
      }
      for (const auto& t : basis.higher_torsion) torsion.push_back(t.str());
      rep.result = Json{{"free_rank", basis.free_rank},
                        {"free_characters", free_chars},
                        {"sign_characters", signs},
                        {"higher_torsion", torsion}};
    });
    auto* ms = sy->add_subcommand("m-sym", "diagonal symmetry against every coefficient");
    ms->add_option("--solution", opt.solution_spec)->required();
    ms->add_option("--sites", opt.sites)->required();
    ms->add_option("--alpha", opt.alpha, "comma-separated rational weights")->required();
    ms->add_option("--f", opt.f_perm, "automorphism (default identity)");
    add_common(ms);
    ms->callback([&] {
      rep.command = "symmetry m-sym";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      std::vector<int> f =
          opt.f_perm.empty() ? identity_map(s.sol.size) : parse_int_list(opt.f_perm);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}, {"alpha", opt.alpha}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      add_symmetry_report(rep, verify_m_symmetry(c, {f, parse_rational_list(opt.alpha)}));
    });
    auto* op = sy->add_subcommand("orbit-proj", "orbit projector components");
    op->add_option("--solution", opt.solution_spec)->required();
    op->add_option("--sites", opt.sites)->required();
    add_common(op);
    op->callback([&] {
      rep.command = "symmetry orbit-proj";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"sites", opt.sites}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      for (const auto& sym : orbit_projector_symmetry(c)) add_symmetry_report(rep, sym);
    });
    auto* fg = sy->add_subcommand("fixed-gl", "matrix units on fixed elements");
    fg->add_option("--solution", opt.solution_spec)->required();
    fg->add_option("--sites", opt.sites)->required();
    add_common(fg);
    fg->callback([&] {
      rep.command = "symmetry fixed-gl";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name},
                        {"sites", opt.sites},
                        {"fixed_elements", fixed_elements(s.sol)}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      for (const auto& sym : fixed_element_gl(c)) add_symmetry_report(rep, sym);
    });
    auto* sf = sy->add_subcommand("square-free", "matrix units on square-free elements");
    sf->add_option("--solution", opt.solution_spec)->required();
    sf->add_option("--sites", opt.sites)->required();
    add_common(sf);
    sf->callback([&] {
      rep.command = "symmetry square-free";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name},
                        {"sites", opt.sites},
                        {"square_free", square_free_elements(s.sol)}};
      ChainSystem c = build_chain(s.sol, opt.sites, opt.budget);
      for (const auto& sym : square_free_symmetry(c)) add_symmetry_report(rep, sym);
    });
    auto* ce = sy->add_subcommand("central", "central-element symmetry at odd N");
    ce->add_option("--brace", opt.brace_spec)->required();
    ce->add_option("--a", opt.a_elem)->required();
    ce->add_option("--b", opt.b_elem)->required();
    ce->add_option("--c", opt.c_elem)->required();
    ce->add_option("--sites", opt.sites)->required();
    add_common(ce);
    ce->callback([&] {
      rep.command = "symmetry central";
      FiniteBrace b = parse_brace_spec(opt.brace_spec);
      rep.inputs = Json{{"brace", opt.brace_spec},
                        {"a", opt.a_elem},
                        {"b", opt.b_elem},
                        {"c", opt.c_elem},
                        {"sites", opt.sites}};
      std::vector<int> all(b.size);
      std::iota(all.begin(), all.end(), 0);
      add_symmetry_report(
          rep, central_symmetry(b, all, opt.a_elem, opt.b_elem, opt.c_elem, opt.sites,
                                opt.budget));
    });
  }

  // ---- qalgebra ----
  auto* qa = app.add_subcommand("qalgebra", "quantum algebra commands");
  {
    auto* rl = qa->add_subcommand("relations", "generate the defining relations");
    rl->add_option("--solution", opt.solution_spec)->required();
    rl->add_option("--max-level", opt.max_level);
    add_common(rl);
    rl->callback([&] {
      rep.command = "qalgebra relations";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"max_level", opt.max_level}};
      auto rels = generate_relations(s.sol, opt.max_level);
      rep.result = Json{{"count", rels.size()}, {"relations", relations_to_json(rels)}};
    });
    auto* ya = qa->add_subcommand("yangian", "commutator-form family and match report");
    ya->add_option("--n", opt.n)->required();
    ya->add_option("--max-level", opt.max_level);
    add_common(ya);
    ya->callback([&] {
      rep.command = "qalgebra yangian";
      rep.inputs = Json{{"n", opt.n}, {"max_level", opt.max_level}};
      YangianMatch ym = yangian_form(opt.n, opt.max_level);
      rep.checks.push_back(bool_check(
          "match", "flip-solution relations match the commutator form after normalization",
          ym.match, ym.mismatch));
    });
    auto* cr = qa->add_subcommand("check-rep", "representation checks");
    cr->add_option("--solution", opt.solution_spec)->required();
    cr->add_option("--max-level", opt.max_level);
    cr->add_option("--kind", opt.kind, "constant | tensor | graded | linear");
    cr->add_flag("--ablate", opt.ablate, "skip the structure-algebra reduction");
    add_common(cr);
    cr->callback([&] {
      rep.command = "qalgebra check-rep";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name},
                        {"max_level", opt.max_level},
                        {"kind", opt.kind},
                        {"ablate", opt.ablate}};
      RepKind kind = opt.kind == "constant"   ? RepKind::Constant
                     : opt.kind == "tensor"   ? RepKind::Tensor
                     : opt.kind == "linear"   ? RepKind::LinearPoly
                     : opt.kind == "graded"   ? RepKind::Graded
                                              : throw IoError("unknown kind " + opt.kind);
      auto rels = generate_relations(s.sol, opt.max_level);
      RepReport rr = check_representation(s.sol, rels, kind, !opt.ablate);
      rep.checks.push_back(bool_check("representation",
                                      "every relation image reduces to zero", rr.pass,
                                      rr.failure));
    });
    auto* in = qa->add_subcommand("induce", "induced algebra maps along solution homs");
    in->add_option("--solution", opt.solution_spec, "a brace solution spec")->required();
    in->add_option("--mode", opt.mode, "orbits | ideal");
    in->add_option("--ideal", opt.elements, "comma list, for --mode ideal");
    in->add_option("--max-level", opt.max_level);
    add_common(in);
    in->callback([&] {
      rep.command = "qalgebra induce";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs =
          Json{{"solution", s.name}, {"mode", opt.mode}, {"max_level", opt.max_level}};
      SolutionHom hom = [&] {
        if (opt.mode == "orbits") return orbit_collapse(s.sol);
        if (opt.mode == "ideal") {
          if (!s.brace_ctx) throw IoError("--mode ideal needs a brace-backed solution");
          return quotient_by_ideal(s.brace_ctx->brace, s.brace_ctx->elements,
                                   parse_int_list(opt.elements));
        }
        throw IoError("unknown mode " + opt.mode);
      }();
      InduceReport ir = induce_hom(hom, opt.max_level);
      rep.checks.push_back(bool_check(
          "induced", "images of defining relations are defining relations", ir.pass,
          ir.failure));
    });
    auto* l01 = qa->add_subcommand("level01", "level-0/1 consequences and gl extraction");
    l01->add_option("--solution", opt.solution_spec)->required();
    l01->add_option("--max-level", opt.max_level);
    add_common(l01);
    l01->callback([&] {
      rep.command = "qalgebra level01";
      NamedSolution s = parse_solution_spec(opt.solution_spec);
      rep.inputs = Json{{"solution", s.name}, {"max_level", opt.max_level}};
      for (const auto& chk : level01_checks(s.sol, opt.max_level)) rep.checks.push_back(chk);
    });
  }

  // ---- verify-all ----
  {
    auto* va = app.add_subcommand("verify-all", "run the full verification battery");
    va->add_option("--corpus", opt.corpus, "\"default\" or comma-separated solution specs");
    va->add_option("--max-sites", opt.max_sites);
    add_common(va);
    va->callback([&] {
      rep.command = "verify-all";
      rep.inputs = Json{{"corpus", opt.corpus}, {"max_sites", opt.max_sites}};
      if (opt.corpus == "default") {
        auto results = run_acceptance(std::cerr, opt.budget);
        for (const auto& r : results)
          rep.checks.push_back(bool_check(
              "criterion " + std::to_string(r.number), r.title, r.pass,
              r.detail.empty() ? Json() : Json{{"detail", r.detail}}));
        return;
      }
      // Custom corpus: per-solution battery at the requested scale.
      std::vector<std::string> specs;
      std::size_t pos = 0;
      while (pos <= opt.corpus.size()) {
        std::size_t comma = opt.corpus.find(',', pos);
        specs.push_back(
            opt.corpus.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      std::sort(specs.begin(), specs.end());
      for (const auto& spec : specs) {
        NamedSolution s = parse_solution_spec(spec);
        SolutionReport sr = validate(s.sol);
        rep.checks.push_back(bool_check(spec + ": validates", "all three properties", sr.ok()));
        RBundle bun = build_rbundle(s.sol);
        rep.checks.push_back(bool_check(spec + ": spectral", "all spectral identities",
                                        verify_spectral(bun).ok()));
        rep.checks.push_back(bool_check(spec + ": braid-group", "relations at N=3",
                                        all_pass(verify_hecke(bun, 3))));
        for (int sites = 2; sites <= opt.max_sites; ++sites) {
          long need = 1;
          for (int i = 0; i <= sites; ++i) need *= s.sol.size;
          if (need > opt.budget) break;
          ChainSystem c = build_chain(s.sol, sites, opt.budget);
          rep.checks.push_back(bool_check(
              spec + ": commuting N=" + std::to_string(sites),
              "[t^(k), t^(l)] == 0", verify_commuting(c).ok()));
          rep.checks.push_back(bool_check(
              spec + ": closed forms N=" + std::to_string(sites),
              "independent rebuilds match", verify_closed_forms(c).ok()));
        }
      }
    });
  }

  auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    exit_code = emit(std::move(rep), opt, seconds);
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
