#include "ybl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "ybl/corpus.hpp"
#include "ybl/qalgebra.hpp"
#include "ybl/symmetry.hpp"

namespace ybl {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::ostream& out;
  long budget;
  std::vector<CriterionResult> results;

  // Body returns pass and may append to the detail stream.
  void run(int number, const std::string& title, double limit,
           const std::function<bool(std::ostringstream&)>& body) {
    CriterionResult r;
    r.number = number;
    r.title = title;
    r.limit_seconds = limit;
    std::ostringstream detail;
    auto start = Clock::now();
    try {
      r.pass = body(detail);
    } catch (const std::exception& e) {
      r.pass = false;
      detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.pass && limit > 0 && r.seconds >= limit) {
      r.pass = false;
      detail << "runtime " << r.seconds << "s exceeds limit " << limit << "s";
    }
    r.detail = detail.str();
    out << (r.pass ? "[PASS] " : "[FAIL] ") << number << ". " << title;
    out << " (" << r.seconds << "s)";
    if (!r.pass && !r.detail.empty()) out << "\n       " << r.detail;
    out << "\n" << std::flush;
    results.push_back(std::move(r));
  }
};

// All automorphisms of a solution, brute force over permutations.
std::vector<std::vector<int>> all_automorphisms(const SetSolution& sol) {
  std::vector<int> f(sol.size);
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (check_hom(f, sol, sol)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

}  // namespace

bool acceptance_ok(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, long budget) {
  Runner runner{out, budget, {}};
  auto corpus = default_corpus();

  runner.run(1, "solution validity across the corpus", 1.0, [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& e : corpus) {
      SolutionReport rep = validate(e.sol);
      if (!rep.ok()) {
        ok = false;
        d << e.name << " failed " << (rep.witness ? rep.witness->check : "?") << "; ";
      }
    }
    return ok;
  });

  runner.run(2, "the two constant forms of r agree", 0, [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& e : corpus) {
      if (!build_rbundle(e.sol).dual_form_match) {
        ok = false;
        d << e.name << "; ";
      }
    }
    return ok;
  });

  runner.run(3, "spectral equations on the 4x4 grid (braid and standard form)", 5.0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (const auto& e : corpus) {
                 SpectralReport rep = verify_spectral(build_rbundle(e.sol));
                 if (!rep.ybe_braid.pass || !rep.ybe_standard.pass) {
                   ok = false;
                   d << e.name << "; ";
                 }
               }
               return ok;
             });

  runner.run(4, "unitarity, crossing-unitarity, double transpose, projector identities", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (const auto& e : corpus) {
                 SpectralReport rep = verify_spectral(build_rbundle(e.sol));
                 bool here = rep.unitarity.pass && rep.crossing.pass && rep.t1t2.pass &&
                             all_pass(rep.p3);
                 if (!here) {
                   ok = false;
                   d << e.name << "; ";
                 }
               }
               return ok;
             });

  runner.run(5, "braid-group relations with square one at N = 3, 4", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (const auto& e : corpus) {
                 RBundle b = build_rbundle(e.sol);
                 for (int sites : {3, 4})
                   if (!all_pass(verify_hecke(b, sites))) {
                     ok = false;
                     d << e.name << " N=" << sites << "; ";
                   }
               }
               return ok;
             });

  runner.run(6, "transfer coefficients commute pairwise", 60.0, [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& e : corpus) {
      if (e.sol.size > 3) continue;
      for (int sites = 1; sites <= 4; ++sites) {
        ChainSystem c = build_chain(e.sol, sites, budget);
        if (!verify_commuting(c).ok()) {
          ok = false;
          d << e.name << " N=" << sites << "; ";
        }
      }
      if (e.sol.size == 2) {
        ChainSystem c = build_chain(e.sol, 5, budget);
        if (!verify_commuting(c).ok()) {
          ok = false;
          d << e.name << " N=5; ";
        }
      }
    }
    return ok;
  });

  runner.run(7, "closed forms of the transfer coefficients and Hamiltonians", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (const auto& e : corpus)
                 for (int sites = 2; sites <= 4; ++sites) {
                   ChainSystem c = build_chain(e.sol, sites, budget);
                   ClosedFormReport rep = verify_closed_forms(c);
                   if (!rep.ok()) {
                     ok = false;
                     d << e.name << " N=" << sites << "; ";
                   }
                 }
               return ok;
             });

  runner.run(8, "staircase exchange identities at N = 4", 0, [&](std::ostringstream& d) {
    bool ok = true;
    for (const auto& e : corpus)
      if (!all_pass(verify_shift_action(build_rbundle(e.sol), 4))) {
        ok = false;
        d << e.name << "; ";
      }
    return ok;
  });

  runner.run(9, "monodromy exchange relation on the grid; N = 1 matches the spectral check",
             0, [&](std::ostringstream& d) {
               bool ok = true;
               for (const auto& e : corpus) {
                 bool ybe = verify_spectral(build_rbundle(e.sol)).ybe_braid.pass;
                 bool rtt1 = verify_rtt(e.sol, 1, budget).pass;
                 if (!rtt1 || rtt1 != ybe) {
                   ok = false;
                   d << e.name << " N=1; ";
                 }
                 if (e.sol.size <= 3 && !verify_rtt(e.sol, 2, budget).pass) {
                   ok = false;
                   d << e.name << " N=2; ";
                 }
               }
               return ok;
             });

  runner.run(10, "full matrix-unit symmetry of the flip-solution chains", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (int n = 2; n <= 3; ++n)
                 for (int sites = 1; sites <= 4; ++sites) {
                   ChainSystem c = build_chain(trivial_solution(n), sites, budget);
                   auto reports = fixed_element_gl(c);
                   if (static_cast<int>(reports.size()) != n * n) {
                     ok = false;
                     d << "trivial:" << n << " N=" << sites << " wrong generator count; ";
                   }
                   for (const auto& rep : reports)
                     if (!rep.ok()) {
                       ok = false;
                       d << "trivial:" << n << " N=" << sites << " " << rep.generator << "; ";
                     }
                 }
               return ok;
             });

  runner.run(11, "diagonal symmetries from every automorphism and admissible weight", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               bool mixed_sign_seen = false;
               bool free_seen = false;
               for (const auto& e : corpus) {
                 int sites = e.sol.size <= 3 ? 3 : 2;
                 ChainSystem c = build_chain(e.sol, sites, budget);
                 for (const auto& f : all_automorphisms(e.sol)) {
                   CocycleBasis basis = solve_cocycle(e.sol, f);
                   std::vector<std::vector<Rational>> alphas = basis.free_characters;
                   alphas.insert(alphas.end(), basis.sign_characters.begin(),
                                 basis.sign_characters.end());
                   for (const auto& alpha : alphas) {
                     SymmetryReport rep = verify_m_symmetry(c, {f, alpha});
                     if (!rep.ok()) {
                       ok = false;
                       d << e.name << " " << rep.generator << "; ";
                     }
                   }
                 }
                 std::vector<int> id(e.sol.size);
                 std::iota(id.begin(), id.end(), 0);
                 CocycleBasis id_basis = solve_cocycle(e.sol, id);
                 if (e.name == "lyubashenko:2")
                   for (const auto& s : id_basis.sign_characters)
                     if (s[0] == -s[1]) mixed_sign_seen = true;
                 if (e.name.rfind("trivial:", 0) == 0 && !id_basis.free_characters.empty())
                   free_seen = true;
               }
               if (!mixed_sign_seen) d << "no mixed sign character exercised; ";
               if (!free_seen) d << "no free character exercised; ";
               return ok && mixed_sign_seen && free_seen;
             });

  runner.run(12, "orbit projector components commute with every coefficient", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               NamedSolution e = parse_solution_spec("brace:ring:mod:4,2");
               for (int sites = 1; sites <= 3; ++sites) {
                 ChainSystem c = build_chain(e.sol, sites, budget);
                 for (const auto& rep : orbit_projector_symmetry(c))
                   if (!rep.ok()) {
                     ok = false;
                     d << "N=" << sites << " " << rep.generator << "; ";
                   }
               }
               return ok;
             });

  runner.run(13, "square-free pair symmetries for k >= 1, k = 0 recorded", 0,
             [&](std::ostringstream& d) {
               bool ok = true;
               int pairs = 0;
               for (const auto& e : corpus)
                 for (int sites : {2, 3}) {
                   ChainSystem c = build_chain(e.sol, sites, budget);
                   for (const auto& rep : square_free_symmetry(c)) {
                     ++pairs;
                     if (!rep.ok()) {
                       ok = false;
                       d << e.name << " N=" << sites << " " << rep.generator << "; ";
                     }
                   }
                 }
               d << "(pairs checked: " << pairs << ")";
               return ok && pairs > 0;
             });

  runner.run(14, "central-element symmetry at odd N; even N rejected", 0,
             [&](std::ostringstream& d) {
               FiniteBrace brace = ring_to_brace(truncated_poly_ring(2, 3));
               std::vector<int> all(brace.size);
               std::iota(all.begin(), all.end(), 0);
               SymmetryReport rep = central_symmetry(brace, all, 2, 1, 3, 3, budget);
               bool ok = rep.ok();
               if (!ok) d << "odd-N commutation failed; ";
               bool rejected = false;
               try {
                 central_symmetry(brace, all, 2, 1, 3, 4, budget);
               } catch (const std::invalid_argument&) {
                 rejected = true;
               }
               if (!rejected) d << "even N was not rejected; ";
               return ok && rejected;
             });

  runner.run(15, "quantum algebra relations, representations, ablation, induced maps", 30.0,
             [&](std::ostringstream& d) {
               bool ok = true;
               for (int n = 1; n <= 3; ++n)
                 if (!yangian_form(n, 2).match) {
                   ok = false;
                   d << "commutator-form mismatch at n=" << n << "; ";
                 }
               for (const auto& e : corpus) {
                 auto rels = generate_relations(e.sol, 2);
                 for (RepKind kind : {RepKind::Constant, RepKind::Tensor, RepKind::Graded,
                                      RepKind::LinearPoly})
                   if (!check_representation(e.sol, rels, kind).pass) {
                     ok = false;
                     d << e.name << " representation failed; ";
                   }
                 if (e.sol.size >= 2 &&
                     check_representation(e.sol, rels, RepKind::Graded, false).pass) {
                   ok = false;
                   d << e.name << " ablation unexpectedly clean; ";
                 }
               }
               {
                 NamedSolution e = parse_solution_spec("brace:ring:mod:4,2");
                 if (!induce_hom(orbit_collapse(e.sol), 2).pass) {
                   ok = false;
                   d << "orbit-collapse induction failed; ";
                 }
                 std::vector<int> all(e.brace_ctx->brace.size);
                 std::iota(all.begin(), all.end(), 0);
                 SolutionHom q = quotient_by_ideal(e.brace_ctx->brace, all, {0, 2});
                 if (!induce_hom(q, 2).pass) {
                   ok = false;
                   d << "ideal-quotient induction failed; ";
                 }
               }
               return ok;
             });

  runner.run(16, "single-entry mutations break at least one checked identity", 0,
             [&](std::ostringstream& d) {
               std::mt19937 rng(20240917u);
               bool ok = true;
               for (int trial = 0; trial < 20; ++trial) {
                 const auto& e = corpus[rng() % corpus.size()];
                 SetSolution mut = e.sol;
                 int n = mut.size;
                 if (n < 2) continue;
                 int x = static_cast<int>(rng() % n);
                 int y = static_cast<int>(rng() % n);
                 int nv = static_cast<int>(rng() % n);
                 if (nv == mut.sigma[x][y]) nv = (nv + 1) % n;
                 mut.sigma[x][y] = nv;

                 SolutionReport rep = validate(mut);
                 bool broken = !rep.braid || !rep.involutive;
                 if (!broken) {
                   RBundle b = build_rbundle(mut, false);
                   LegMatrix r21 = b.r_spec.permute_legs({1, 0});
                   LegMatrix r21n =
                       r21.map_entries([](const Poly& p) { return p.compose_affine(-1, 0); });
                   Poly factor = Poly(1) - Poly::monomial(2, 1);
                   broken = !(b.r_spec * r21n ==
                              factor * LegMatrix::identity(2, mut.size));
                 }
                 if (!broken) {
                   ChainSystem c = build_chain(mut, 2, budget, false);
                   broken = !verify_commuting(c).ok();
                 }
                 if (!broken) {
                   ok = false;
                   d << "mutation " << trial << " on " << e.name << " at sigma[" << x << "]["
                     << y << "] undetected; ";
                 }
               }
               return ok;
             });

  return runner.results;
}

}  // namespace ybl
