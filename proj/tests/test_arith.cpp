#include <doctest.h>

#include "semihom/arith.hpp"
#include "semihom/error.hpp"

using namespace semihom;

TEST_CASE("gcd") {
  CHECK(gcd(4, 2) == 2);
  CHECK(gcd(1, 0) == 1);
  CHECK(gcd(6, 9) == 3);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(Integer(12), Integer(18)) == 6);
  CHECK_THROWS_AS(gcd(0, 0), InvalidArgument);
  CHECK_THROWS_AS(gcd(-2, 4), InvalidArgument);
}

TEST_CASE("coprime pairs") {
  CHECK_THROWS_AS(CoprimePair(2, 4), InvalidArgument);
  CHECK_THROWS_AS(CoprimePair(0, 0), InvalidArgument);
  CHECK_THROWS_AS(CoprimePair(-1, 1), InvalidArgument);
  CHECK(CoprimePair::reduced(4, 2) == CoprimePair(2, 1));
  CHECK(CoprimePair::reduced(0, 2) == CoprimePair(0, 1));
  CoprimePair a(1, 1), b(2, 1);
  CHECK(a.mediant(b) == CoprimePair(3, 2));
  CHECK(a.left_of(b));
  CHECK_FALSE(b.left_of(a));
  CHECK(CoprimePair(0, 1).left_of(CoprimePair(1, 0)));
  CHECK(std::abs(a.determinant(b)) == 1);
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(5, 3) == std::vector<std::int64_t>{1, 1, 2});
  CHECK(continued_fraction(1, 1) == std::vector<std::int64_t>{1});
  CHECK(continued_fraction(7, 2) == std::vector<std::int64_t>{3, 2});
  CHECK(evaluate_continued_fraction({1, 1, 2}) == std::pair<std::int64_t, std::int64_t>{5, 3});
  CHECK_THROWS_AS(continued_fraction(0, 3), InvalidArgument);
  CHECK_THROWS_AS(continued_fraction(2, 4), InvalidArgument);

  for (std::int64_t k = 1; k <= 40; ++k) {
    for (std::int64_t r = 1; r <= 40; ++r) {
      if (gcd(k, r) != 1) continue;
      auto q = continued_fraction(k, r);
      CHECK(evaluate_continued_fraction(q) == std::pair<std::int64_t, std::int64_t>{k, r});
      if (q.size() > 1) CHECK(q.back() >= 2);
    }
  }
}

TEST_CASE("parents from continued fraction") {
  auto p = parents_from_cf(1, 1);
  CHECK(p.left == CoprimePair(0, 1));
  CHECK(p.right == CoprimePair(1, 0));
  p = parents_from_cf(2, 1);
  CHECK(p.left == CoprimePair(1, 1));
  CHECK(p.right == CoprimePair(1, 0));
  p = parents_from_cf(5, 3);
  CHECK(p.left == CoprimePair(3, 2));
  CHECK(p.right == CoprimePair(2, 1));
  CHECK_THROWS_AS(parents_from_cf(1, 0), InvalidArgument);
  CHECK_THROWS_AS(parents_from_cf(0, 1), InvalidArgument);

  for (std::int64_t k = 1; k <= 30; ++k) {
    for (std::int64_t r = 1; r <= 30; ++r) {
      if (gcd(k, r) != 1) continue;
      auto par = parents_from_cf(k, r);
      CHECK(par.left.mediant(par.right) == CoprimePair(k, r));
      CHECK(par.left.left_of(par.right));
      CHECK(std::abs(par.left.determinant(par.right)) == 1);
    }
  }
}

TEST_CASE("finitely generated abelian groups") {
  FgAbGroup g(2, {4, 6});
  CHECK(g.torsion() == std::vector<Integer>{2, 12});
  CHECK(FgAbGroup(0, {1, 1}).is_zero());
  CHECK(FgAbGroup::cyclic(4).to_string() == "Z/4");
  CHECK(FgAbGroup::free_of_rank(1).to_string() == "Z");
  CHECK(FgAbGroup().to_string() == "0");
  CHECK((FgAbGroup(6) + FgAbGroup::cyclic(4)).to_string() == "Z^6 + Z/4");
  CHECK(FgAbGroup(0, {2, 3}) == FgAbGroup::cyclic(6));
  CHECK_THROWS_AS(FgAbGroup(-1), InvalidArgument);
  CHECK_THROWS_AS(FgAbGroup(0, {0}), InvalidArgument);
  CHECK(invariant_factors({4, 6, 10}) == std::vector<Integer>{2, 2, 60});
}

TEST_CASE("graded groups") {
  GradedGroup z0;
  z0.add(0, FgAbGroup(1));
  GradedGroup sum = direct_sum(z0, z0);
  CHECK(sum.at(0) == FgAbGroup(2));

  GradedGroup a, b;
  a.add(1, FgAbGroup::cyclic(4));
  b.add(1, FgAbGroup(2));
  CHECK(direct_sum(a, b).at(1) == FgAbGroup(2, {4}));
  CHECK(direct_sum(a, GradedGroup()) == a);

  CHECK(shift(z0, 3).at(3) == FgAbGroup(1));
  CHECK(shift(a, 0) == a);
  GradedGroup c;
  c.add(2, FgAbGroup(6));
  c.add(5, FgAbGroup(1));
  GradedGroup cs = shift(c, -2);
  CHECK(cs.at(0) == FgAbGroup(6));
  CHECK(cs.at(3) == FgAbGroup(1));

  CHECK(euler_char(z0) == 1);
  GradedGroup odd;
  odd.add(1, FgAbGroup(6));
  CHECK(euler_char(odd) == -6);
  GradedGroup tors;
  tors.add(1, FgAbGroup(6, {4}));
  CHECK(euler_char(tors) == -6);
  GradedGroup even;
  even.add(2, FgAbGroup(6, {4}));
  CHECK(euler_char(even) == 6);

  GradedGroup zero;
  zero.add(4, FgAbGroup());
  CHECK(zero.is_zero());
  CHECK(reflect(c, 6).at(4) == FgAbGroup(6));
  CHECK(reflect(c, 6).at(1) == FgAbGroup(1));
}
