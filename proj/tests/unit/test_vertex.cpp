#include "nesthilb/errors.hpp"
#include "nesthilb/vertex.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace nesthilb;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

LaurentPoly m(int a, int b, long c = 1) { return LaurentPoly::monomial({a, b}, Rational(c)); }

std::vector<NestedPair> pairs_up_to(int total) {
  std::vector<NestedPair> out;
  for (int n1 = 0; n1 <= total; ++n1)
    for (int n2 = 0; n2 <= n1 && n1 + n2 <= total; ++n2)
      for (auto& p : enumerate_nested_pairs(n1, n2)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("Taylor oracle sanity") {
  CHECK(oracle::taylor_numerator(P({})) == LaurentPoly(Rational(1)));
  // (2,1): generators t2^2, t1 t2, t1^2
  CHECK(oracle::minimal_generators(P({2, 1})) ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}});
  const LaurentPoly one(Rational(1));
  const LaurentPoly delta = (one - LaurentPoly::t1()) * (one - LaurentPoly::t2());
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(delta * z_character(mu) + oracle::taylor_numerator(mu) == one);
  CHECK_THROWS(oracle::divide_by_delta(one));
}

TEST_CASE("virtual tangent closed forms") {
  CHECK(virtual_tangent_character(NestedPair(P({1}), P({1}))).poly() == m(-1, 0) + m(0, -1));
  CHECK(virtual_tangent_character(NestedPair(P({1}), P({}))).poly() ==
        m(-1, 0) + m(0, -1) - m(-1, -1));
  CHECK(virtual_tangent_character(NestedPair(P({}), P({}))).poly().is_zero());
}

TEST_CASE("block character closed forms") {
  CHECK(block_character(P({}), P({})).poly().is_zero());
  // normal form confirmed by the Ext oracle
  const LaurentPoly expected = m(-1, 0) + m(0, -1);
  CHECK(block_character(P({1}), P({1})).poly() == expected);
  CHECK(oracle::ext_block(P({1}), P({1})) == expected);
  CHECK(block_character(P({2}), P({1})).rank() == 3);
}

TEST_CASE("tangent and block characters match the Ext oracle") {
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (const auto& p : enumerate_nested_pairs(n1, n2)) {
        CHECK(virtual_tangent_character(p).poly() == oracle::tangent(p.outer, p.inner));
      }
  // spot checks at n1 = 4
  for (int n2 : {0, 2, 4})
    for (const auto& p : enumerate_nested_pairs(4, n2))
      CHECK(virtual_tangent_character(p).poly() == oracle::tangent(p.outer, p.inner));
  // all blocks, nested or not, and their twists
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& mu_a : enumerate_partitions(a))
        for (const auto& mu_b : enumerate_partitions(b)) {
          const Character v = block_character(mu_a, mu_b);
          CHECK(v.poly() == oracle::ext_block(mu_a, mu_b));
          CHECK(twist_character(v, {2, -1}).poly() == oracle::ext_block(mu_a, mu_b) * m(2, -1));
        }
}

TEST_CASE("rank and absence of trivial weights") {
  for (const auto& p : pairs_up_to(8)) {
    const Character t = virtual_tangent_character(p);
    CHECK(t.rank() == p.outer.size() + p.inner.size());
    CHECK(!t.has_trivial_weight());
  }
}

TEST_CASE("block decomposition of the tangent character") {
  for (const auto& p : pairs_up_to(8)) {
    const Character sum = block_character(p.outer, p.outer) + block_character(p.inner, p.inner) -
                          block_character(p.outer, p.inner);
    CHECK(sum == virtual_tangent_character(p));
  }
}

TEST_CASE("non-nested blocks can carry a second trivial weight") {
  // Ext^1(I_a, I_b) itself has a trivial weight here
  CHECK(block_character(P({1}), P({2, 1})).multiplicity({}) == 2);
  CHECK(oracle::ext_block(P({1}), P({2, 1})).coefficient({0, 0}) == 2);
}

TEST_CASE("trivial weight in blocks detects nesting") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (const auto& mu_a : enumerate_partitions(a))
        for (const auto& mu_b : enumerate_partitions(b)) {
          const Character v = block_character(mu_a, mu_b);
          CHECK(v.rank() == a + b);
          // honest representation: H^0(O) + Ext^1 when not nested, Ext^1 when nested
          for (const auto& [w, c] : v.poly().terms()) CHECK(c.sign() > 0);
          if (mu_b.is_contained_in(mu_a))
            CHECK(v.multiplicity({}) == 0);
          else
            CHECK(v.multiplicity({}) >= 1);
        }
}

TEST_CASE("twist and substitution") {
  const Character c(LaurentPoly(Rational(1)) + LaurentPoly::t1());
  CHECK(twist_character(c, {0, 0}) == c);
  CHECK(twist_character(Character(m(-1, 0)), {1, 1}).poly() == m(0, 1));
  CHECK(twist_character(block_character(P({2, 1}), P({1})), {3, 4}).rank() == 4);
  CHECK(substitute_weights(c, {1, 0}, {0, 1}) == c);
  CHECK(substitute_weights(Character(m(1, 0)), {-1, 0}, {-1, 1}).poly() == m(-1, 0));
  CHECK_THROWS_WITH(substitute_weights(c, {2, 0}, {0, 1}), "singular chart");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p;
    for (int k = 0; k < 6; ++k) p.add_term({e(rng), e(rng)}, Rational(e(rng)));
    const Character x(p);
    CHECK(substitute_weights(x, {2, 1}, {1, 1}).rank() == x.rank());
    CHECK(substitute_weights(x, {2, 1}, {1, 1}).poly().size() == x.poly().size());
  }
  CHECK_THROWS(Character(LaurentPoly(Rational::parse("1/2"))));
}

TEST_CASE("euler_class") {
  const Specialization s{1, 2};
  CHECK(euler_class(Character(m(-1, 0) + m(0, -1)), s) == 2);
  CHECK(euler_class(Character(m(-1, 0) + m(0, -1) - m(-1, -1)), s) == Rational::parse("-2/3"));
  CHECK_THROWS_AS(euler_class(Character(m(0, 0) + m(1, 0)), s), TrivialWeightError);
  CHECK_THROWS_WITH(euler_class(Character(m(0, 0)), s), "trivial weight in Euler class");
  CHECK_THROWS_AS(euler_class(Character(m(2, -1)), s), DegenerateSpecialization);
  CHECK_THROWS_AS(euler_class(Character(-m(2, -1)), s), DegenerateSpecialization);
}

TEST_CASE("chern_poly") {
  const Specialization s{1, 1};
  CHECK(chern_poly(Character(), s, 3) == GradedPoly::one(3));
  CHECK(chern_poly(Character(m(0, 0)), s, 2) == GradedPoly::one(2));
  GradedPoly expected = GradedPoly::one(2);
  expected[1] = 2;
  expected[2] = 1;
  CHECK(chern_poly(Character(m(1, 0) + m(0, 1)), s, 2) == expected);
  // a nested block is an honest representation, so its top class is the Euler class
  const Specialization g{7, -3};
  const Character b = block_character(P({2, 1}), P({1}));
  CHECK(chern_poly(b, g, 4)[4] == euler_class(b, g));
}
