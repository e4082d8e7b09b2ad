#include <doctest.h>

#include <numeric>
#include <set>

#include "ybl/brace.hpp"

using namespace ybl;

TEST_CASE("scaled mod ring validation") {
  // Oracle: the mod-4 tables with product 2ab, checked against direct
  // modular arithmetic, are nilpotent with index 3 since (2a)(2b)c = 4(..).
  FiniteRing r = scaled_mod_ring(4, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(r.add[a][b] == (a + b) % 4);
      CHECK(r.mul[a][b] == (2 * a * b) % 4);
    }
  RingReport rep = validate_ring(r);
  CHECK(rep.ok());
  CHECK(rep.nilpotency_index == 3);

  // Ordinary multiplication has 1*1 = 1, so no power of the ring vanishes.
  RingReport plain = validate_ring(scaled_mod_ring(4, 1));
  CHECK(plain.ok());
  CHECK(!plain.nilpotency_index.has_value());

  FiniteRing broken = scaled_mod_ring(4, 2);
  broken.mul[1][2] = 3;
  RingReport bad = validate_ring(broken);
  CHECK(!bad.ok());
  REQUIRE(bad.witness.has_value());

  FiniteRing malformed = scaled_mod_ring(3, 0);
  malformed.add[0][0] = 5;
  CHECK_THROWS_AS(validate_ring(malformed), std::invalid_argument);
}

TEST_CASE("truncated polynomial ring") {
  FiniteRing r = truncated_poly_ring(2, 3);
  CHECK(r.size == 4);
  // Indices: 0 = 0, 1 = t, 2 = t^2, 3 = t + t^2.
  CHECK(r.mul[1][1] == 2);  // t * t = t^2
  CHECK(r.mul[1][2] == 0);  // t * t^2 truncates away
  CHECK(r.mul[3][3] == 2);  // (t + t^2)^2 = t^2 mod t^3, char 2
  CHECK(r.add[1][2] == 3);
  RingReport rep = validate_ring(r);
  CHECK(rep.ok());
  CHECK(rep.nilpotency_index == 3);

  CHECK(validate_ring(truncated_poly_ring(3, 3)).ok());
}

TEST_CASE("ring to brace") {
  // Zero ring: circle collapses to addition.
  FiniteRing zero = scaled_mod_ring(5, 0);
  FiniteBrace bz = ring_to_brace(zero);
  CHECK(bz.circle == bz.add);

  FiniteBrace b = ring_to_brace(scaled_mod_ring(4, 2));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(b.circle[x][y] == (2 * x * y + x + y) % 4);
  CHECK(validate_brace(b).ok());

  CHECK(validate_brace(ring_to_brace(scaled_mod_ring(9, 3))).ok());
  CHECK_THROWS_AS(ring_to_brace(scaled_mod_ring(4, 1)), std::invalid_argument);
}

TEST_CASE("brace validation") {
  CHECK(validate_brace(trivial_brace(6)).ok());

  FiniteBrace b = ring_to_brace(scaled_mod_ring(4, 2));
  b.circle[2][3] = (b.circle[2][3] + 1) % 4;
  BraceReport rep = validate_brace(b);
  CHECK(!rep.ok());
  REQUIRE(rep.witness.has_value());
}

TEST_CASE("circle inverses") {
  FiniteBrace b = ring_to_brace(scaled_mod_ring(4, 2));
  CHECK(circle_inverse(b, 0) == 0);
  // Oracle: exhaustive search for the partner of 1 under 2ab + a + b mod 4.
  int expected = -1;
  for (int v = 0; v < 4; ++v)
    if ((2 * v + 1 + v) % 4 == 0) expected = v;
  CHECK(expected == 1);
  CHECK(circle_inverse(b, 1) == expected);
  for (int a = 0; a < b.size; ++a) CHECK(circle_inverse(b, circle_inverse(b, a)) == a);
}

TEST_CASE("central involutive elements") {
  FiniteBrace b = ring_to_brace(truncated_poly_ring(2, 3));
  CHECK(central_involutive_elements(b) == std::vector<int>{0, 2});
  CHECK(central_involutive_elements(trivial_brace(3)) == std::vector<int>{0});
  CHECK(central_involutive_elements(ring_to_brace(scaled_mod_ring(4, 2))) ==
        std::vector<int>{0, 2});
}

TEST_CASE("sigma maps are bijections") {
  for (FiniteBrace b : {ring_to_brace(scaled_mod_ring(4, 2)),
                        ring_to_brace(truncated_poly_ring(2, 3)), trivial_brace(5)})
    for (int a = 0; a < b.size; ++a) {
      std::set<int> image;
      for (int x = 0; x < b.size; ++x) image.insert(brace_sigma(b, a, x));
      CHECK(static_cast<int>(image.size()) == b.size);
    }
}

TEST_CASE("ring brace round trip") {
  for (FiniteRing r : {scaled_mod_ring(4, 2), scaled_mod_ring(9, 3),
                       truncated_poly_ring(2, 3), scaled_mod_ring(6, 0)}) {
    FiniteBrace b = ring_to_brace(r);
    for (int x = 0; x < r.size; ++x)
      for (int y = 0; y < r.size; ++y) CHECK(brace_ring_mul(b, x, y) == r.mul[x][y]);
  }
}

TEST_CASE("brace quotients") {
  FiniteBrace b = ring_to_brace(scaled_mod_ring(4, 2));

  std::vector<int> all(4);
  std::iota(all.begin(), all.end(), 0);
  BraceQuotient whole = quotient_brace(b, all);
  CHECK(whole.quotient.size == 1);

  BraceQuotient self = quotient_brace(b, {0});
  CHECK(self.quotient.size == 4);
  CHECK(validate_brace(self.quotient).ok());

  CHECK(validate_ideal(b, {0, 2}).ok);
  BraceQuotient half = quotient_brace(b, {0, 2});
  CHECK(half.quotient.size == 2);
  CHECK(validate_brace(half.quotient).ok());
  CHECK(half.coset_of[0] == half.coset_of[2]);
  CHECK(half.coset_of[1] == half.coset_of[3]);

  IdealReport bad = validate_ideal(b, {0, 1});
  CHECK(!bad.ok);
  CHECK(!bad.failed_axiom.empty());
  CHECK_THROWS_AS(quotient_brace(b, {0, 1}), std::invalid_argument);
}
