#include <doctest.h>

#include <numeric>
#include <set>

#include "ybl/corpus.hpp"
#include "ybl/solution.hpp"

using namespace ybl;

TEST_CASE("builtin families validate") {
  for (int n = 2; n <= 4; ++n) CHECK(validate(trivial_solution(n)).ok());
  for (int m = 1; m <= 4; ++m) CHECK(validate(lyubashenko(m)).ok());

  SetSolution l2 = lyubashenko(2);
  CHECK(l2.r(0, 0) == std::make_pair(1, 1));
  CHECK(l2.r(0, 1) == std::make_pair(0, 1));
  CHECK(l2.r(1, 0) == std::make_pair(1, 0));
  CHECK(l2.r(1, 1) == std::make_pair(0, 0));

  CHECK(lyubashenko(1).sigma == trivial_solution(1).sigma);
  CHECK(lyubashenko(1).tau == trivial_solution(1).tau);

  SetSolution t3 = trivial_solution(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(t3.r(x, y) == std::make_pair(y, x));
}

TEST_CASE("validation failures carry witnesses") {
  SetSolution s = lyubashenko(3);
  s.sigma[1] = {0, 0, 2};  // no longer a bijection
  SolutionReport rep = validate(s);
  CHECK(!rep.nondegenerate);
  REQUIRE(rep.witness.has_value());

  SetSolution t = trivial_solution(3);
  t.sigma[2][1] = 0;
  SolutionReport rep2 = validate(t);
  CHECK(!rep2.ok());
}

TEST_CASE("solutions from braces") {
  // Trivial brace: x o y - x = y, so the solution is the flip.
  BraceSolution triv = solution_from_brace(trivial_brace(4));
  CHECK(triv.sol.sigma == trivial_solution(4).sigma);
  CHECK(triv.sol.tau == trivial_solution(4).tau);

  BraceSolution bs = solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2)));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(bs.sol.sigma[a][b] == ((2 * a + 1) * b) % 4);
  CHECK(validate(bs.sol).ok());
  CHECK(bs.sol.sigma[0] == bs.sol.sigma[2]);
  CHECK(bs.sol.sigma[1] == bs.sol.sigma[3]);

  CHECK(validate(solution_from_brace(ring_to_brace(truncated_poly_ring(2, 3))).sol).ok());
  CHECK(validate(solution_from_brace(ring_to_brace(scaled_mod_ring(9, 3))).sol).ok());

  // {0,1} is not closed under the action of this brace.
  CHECK_THROWS_AS(solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2)),
                                      std::vector<int>{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("orbits") {
  for (int m = 2; m <= 4; ++m) CHECK(orbits(lyubashenko(m)).size() == 1);
  CHECK(orbits(trivial_solution(4)).size() == 4);

  // Oracle: exhaustive closure from each seed element.
  SetSolution s = solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2))).sol;
  auto closure = [&](int seed) {
    std::set<int> block{seed};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<int> next = block;
      for (int y : block)
        for (int x = 0; x < s.size; ++x) {
          next.insert(s.sigma[x][y]);
          next.insert(s.tau[x][y]);
        }
      if (next != block) {
        block = next;
        grew = true;
      }
    }
    return block;
  };
  CHECK(closure(0) == std::set<int>{0});
  CHECK(closure(2) == std::set<int>{2});
  CHECK(closure(1) == std::set<int>{1, 3});
  auto blocks = orbits(s);
  CHECK(blocks.size() == 3);
}

TEST_CASE("retraction and multipermutation level") {
  // All sigma rows of the cyclic solution coincide, so one retraction
  // collapses everything.
  for (int m = 2; m <= 4; ++m) {
    Retraction r = retract(lyubashenko(m));
    CHECK(r.retracted.size == 1);
    CHECK(multipermutation_level(lyubashenko(m)) == 1);
  }
  CHECK(multipermutation_level(trivial_solution(1)) == 0);
  CHECK(multipermutation_level(trivial_solution(4)) == 1);

  SetSolution s = solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2))).sol;
  Retraction r = retract(s);
  CHECK(r.retracted.size == 2);
  CHECK(r.retracted.sigma == trivial_solution(2).sigma);
  CHECK(r.hom.map[0] == r.hom.map[2]);
  CHECK(r.hom.map[1] == r.hom.map[3]);
  CHECK(multipermutation_level(s) == 2);
}

TEST_CASE("homomorphisms") {
  SetSolution l3 = lyubashenko(3);
  std::vector<int> id(3);
  std::iota(id.begin(), id.end(), 0);
  CHECK(check_hom(id, l3, l3).has_value());

  SetSolution s = solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2))).sol;
  SolutionHom collapse = orbit_collapse(s);
  CHECK(collapse.codomain.size == 3);

  CHECK(!find_iso(lyubashenko(2), trivial_solution(2)).has_value());
  CHECK(find_iso(lyubashenko(3), lyubashenko(3)).has_value());

  // Composition of homomorphisms is a homomorphism.
  Retraction r1 = retract(s);
  Retraction r2 = retract(r1.retracted);
  SolutionHom both = compose(r1.hom, r2.hom);
  CHECK(both.codomain.size == 1);
}

TEST_CASE("quotient by ideal") {
  FiniteBrace b = ring_to_brace(scaled_mod_ring(4, 2));
  std::vector<int> all(4);
  std::iota(all.begin(), all.end(), 0);

  SolutionHom trivial_q = quotient_by_ideal(b, all, {0});
  CHECK(trivial_q.codomain.size == 4);

  SolutionHom half = quotient_by_ideal(b, all, {0, 2});
  CHECK(half.codomain.size == 2);
  CHECK(half.map[0] == half.map[2]);

  SolutionHom full = quotient_by_ideal(b, all, all);
  CHECK(full.codomain.size == 1);
}

TEST_CASE("retract towards the cyclic family") {
  auto hit = retract_to_lyubashenko(lyubashenko(3));
  REQUIRE(hit.has_value());
  CHECK(hit->m == 3);
  CHECK(hit->chain.empty());

  SetSolution s = solution_from_brace(ring_to_brace(scaled_mod_ring(4, 2))).sol;
  CHECK_THROWS_AS(retract_to_lyubashenko(s), std::invalid_argument);  // decomposable
  CHECK_THROWS_AS(retract_to_lyubashenko(trivial_solution(3)),
                  std::invalid_argument);  // constant sigma
}

TEST_CASE("disjoint unions") {
  SetSolution u = disjoint_union(trivial_solution(1), lyubashenko(2));
  CHECK(u.size == 3);
  CHECK(validate(u).ok());
  CHECK(orbits(u).size() == 2);
  SetSolution v = disjoint_union(lyubashenko(2), lyubashenko(3));
  CHECK(validate(v).ok());
}
