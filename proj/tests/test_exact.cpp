#include <doctest.h>

#include <random>

#include "ybl/grid.hpp"
#include "ybl/legmatrix.hpp"
#include "ybl/poly.hpp"
#include "ybl/rmatrix.hpp"

using namespace ybl;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

LegMatrix random_two_leg(std::mt19937& rng, int dim, int entries) {
  LegMatrix m(2, dim);
  std::uniform_int_distribution<Index> idx(0, m.dim() - 1);
  for (int i = 0; i < entries; ++i)
    m.set(idx(rng), idx(rng), Poly(random_rational(rng)));
  return m;
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    Rational s = a + b;
    CHECK(rat_den(s) > 0);
    CHECK(boost::multiprecision::gcd(rat_num(s) < 0 ? Int(-rat_num(s)) : rat_num(s),
                                     rat_den(s)) == 1);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK(rat_num(Rational(0)) == 0);
  CHECK(rat_den(Rational(0)) == 1);
  CHECK(Rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("polynomial basics") {
  Poly zero;
  CHECK(zero.is_zero());
  CHECK(!zero.degree().has_value());  // the -inf sentinel
  Poly p = Poly::monomial(3, 2) + Poly::monomial(1, -1) + Poly(5);
  CHECK(p.degree() == 3);
  CHECK(p.coeff(3) == 2);
  CHECK(p.coeff(2) == 0);
  CHECK(p.eval(2) == Rational(16 - 2 + 5));
  CHECK((p - p).is_zero());
  CHECK(!(p - p).degree().has_value());

  Poly q = Poly::variable() + Poly(1);
  CHECK(q * q == Poly::monomial(2, 1) + Poly::monomial(1, 2) + Poly(1));

  // p(-x - 3) at x = 1 equals p(-4)
  Poly r = p.compose_affine(-1, -3);
  CHECK(r.eval(1) == p.eval(-4));
  CHECK(r.eval(0) == p.eval(-3));
  CHECK(p.compose_affine(1, 0) == p);
  CHECK(p.str() == "2*lambda^3 - lambda + 5");
}

TEST_CASE("permutation operator") {
  CHECK(LegMatrix::permutation_op(1) == LegMatrix::identity(2, 1));
  LegMatrix p2 = LegMatrix::permutation_op(2);
  CHECK(p2.at(1, 2) == Poly(1));  // (0,1) <-> (1,0)
  CHECK(p2.at(2, 1) == Poly(1));
  CHECK(p2.at(0, 0) == Poly(1));
  CHECK(p2.at(3, 3) == Poly(1));
  CHECK(p2.nnz() == 4);
  for (int n : {2, 3, 4}) {
    LegMatrix p = LegMatrix::permutation_op(n);
    CHECK(p * p == LegMatrix::identity(2, n));
  }
}

TEST_CASE("embedding on two legs") {
  LegMatrix p = LegMatrix::permutation_op(2);
  CHECK(embed2(p, 0, 1, 2) == p);
  CHECK(embed2(p, 1, 0, 2) == p);  // the flip is symmetric under leg swap
  CHECK_THROWS_AS(embed2(p, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(embed2(p, 0, 3, 3), std::out_of_range);

  // Oracle: the full 8x8 matrix by explicit index arithmetic, for the cyclic
  // 2-element solution acting on legs (2, 0) of 3.
  SetSolution s = lyubashenko(2);
  RBundle b = build_rbundle(s);
  LegMatrix embedded = embed2(b.check_const, 2, 0, 3);
  LegMatrix oracle(3, 2);
  for (int b0 = 0; b0 < 2; ++b0)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) {
        auto [u, v] = s.r(b2, b0);
        Index col = static_cast<Index>(b0) * 4 + b1 * 2 + b2;
        Index row = static_cast<Index>(v) * 4 + b1 * 2 + u;
        oracle.set(row, col, Poly(1));
      }
  CHECK(embedded == oracle);
  // The example point: (0,1,0) maps through r(leg2, leg0) = r(0,0) = (1,1).
  Index in = 0 * 4 + 1 * 2 + 0;
  Index out = 1 * 4 + 1 * 2 + 1;
  CHECK(embedded.at(out, in) == Poly(1));
}

TEST_CASE("disjoint embeddings commute") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    LegMatrix a = random_two_leg(rng, 2, 6);
    LegMatrix b = random_two_leg(rng, 2, 6);
    LegMatrix ea = embed2(a, 0, 2, 4);
    LegMatrix eb = embed2(b, 3, 1, 4);
    CHECK(ea * eb == eb * ea);
  }
}

TEST_CASE("partial transposition") {
  for (int n : {2, 3}) {
    LegMatrix pt1 = LegMatrix::permutation_op(n).partial_transpose(0);
    CHECK(pt1 * pt1 == Poly(n) * pt1);
  }
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    LegMatrix a = random_two_leg(rng, 3, 12);
    CHECK(a.partial_transpose(0).partial_transpose(0) == a);
    CHECK(a.partial_transpose(1).partial_transpose(1) == a);
    CHECK(a.partial_transpose(0).partial_transpose(1) == a.transpose());
  }
}

TEST_CASE("leg traces") {
  LegMatrix id2 = LegMatrix::identity(2, 3);
  CHECK(id2.trace_leg(0) == Poly(3) * LegMatrix::identity(1, 3));

  // tr over leg 0 of products is invariant under relabeling the traced basis.
  std::mt19937 rng(17);
  LegMatrix a = random_two_leg(rng, 2, 6);
  LegMatrix b = random_two_leg(rng, 2, 6);
  LegMatrix prod = embed2(a, 0, 2, 3) * embed2(b, 0, 1, 3);
  LegMatrix traced = prod.trace_leg(0);
  // Conjugate leg 0 by the basis swap q: |x> -> |1-x>.
  LegMatrix q(1, 2);
  q.set(0, 1, Poly(1));
  q.set(1, 0, Poly(1));
  LegMatrix q0 = embed1(q, 0, 3);
  CHECK((q0 * prod * q0).trace_leg(0) == traced);
}

TEST_CASE("coefficient extraction") {
  SetSolution s = trivial_solution(2);
  RBundle b = build_rbundle(s);
  CHECK(b.check_spec.coefficient(1) == b.check_const);
  CHECK(b.check_spec.coefficient(0) == LegMatrix::identity(2, 2));
  CHECK(b.r_spec.coefficient(0) == b.perm);
  CHECK(b.check_spec.coefficient(5).is_zero());
}

TEST_CASE("grid verification") {
  auto braid_sides = [](const SetSolution& s) {
    RBundle b = build_rbundle(s, false);
    auto mk = [b](bool lhs) {
      return GridSide([b, lhs](std::span<const Rational> p) {
        auto at = [&](const Rational& u) { return b.check_spec.eval(u); };
        Rational l1 = p[0], l2 = p[1], d = l1 - l2;
        if (lhs)
          return embed2(at(d), 0, 1, 3) * embed2(at(l1), 1, 2, 3) * embed2(at(l2), 0, 1, 3);
        return embed2(at(l2), 1, 2, 3) * embed2(at(l1), 0, 1, 3) * embed2(at(d), 1, 2, 3);
      });
    };
    return std::make_pair(mk(true), mk(false));
  };

  auto [lt, rt] = braid_sides(trivial_solution(2));
  GridResult g = grid_verify_identity(lt, rt, 2, 3);
  CHECK(g.pass);
  CHECK(g.points_checked == 16);

  auto [ll, rl] = braid_sides(lyubashenko(3));
  CHECK(grid_verify_identity(ll, rl, 2, 3).pass);

  // One moved entry must surface a witness.
  SetSolution bad = lyubashenko(3);
  bad.sigma[1][1] = (bad.sigma[1][1] + 1) % 3;
  auto [lb, rb] = braid_sides(bad);
  GridResult gb = grid_verify_identity(lb, rb, 2, 3);
  CHECK(!gb.pass);
  REQUIRE(gb.witness.has_value());
  CHECK(gb.witness->lhs != gb.witness->rhs);

  // Cross-check: the unitarity identity through the grid agrees with the
  // symbolic route.
  RBundle b = build_rbundle(trivial_solution(3));
  GridSide lhs1([&](std::span<const Rational> p) {
    LegMatrix r21 = b.r_spec.permute_legs({1, 0});
    return b.r_spec.eval(p[0]) * r21.eval(-p[0]);
  });
  GridSide rhs1([&](std::span<const Rational> p) {
    return Poly(Rational(1) - p[0] * p[0]) * LegMatrix::identity(2, 3);
  });
  CHECK(grid_verify_identity(lhs1, rhs1, 1, 2).pass);
  CHECK(verify_spectral(b).unitarity.pass);
}
