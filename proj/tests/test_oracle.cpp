#include <doctest.h>

#include "semihom/error.hpp"
#include "semihom/oracle.hpp"

using namespace semihom;

namespace {

Integer power(std::uint64_t p, std::int64_t e) {
  Integer out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= p;
  return out;
}

JetCountOptions single_thread() {
  JetCountOptions o;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  auto f = parse_polynomial("x0^2+x1^2+x2^2");
  CHECK(f.n() == 3);
  CHECK(f == fermat(3, 2));
  CHECK(f.is_homogeneous());
  CHECK(f.min_degree() == 2);

  auto g = parse_polynomial("3*x0^2-x1+x0^2", 4);
  CHECK(g.n() == 4);
  CHECK(g.terms().size() == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.initial_form() == SparseIntPoly(4, {{{0, 1, 0, 0}, -1}}));
  CHECK(g.initial_form().to_string() == "-x1");
  CHECK_THROWS_AS(parse_polynomial("-x1"), InvalidArgument);

  CHECK(parse_polynomial("x0^2-x0^2", 1).is_zero());
  CHECK(parse_polynomial("x1^3+x0^3").to_string() == "x0^3+x1^3");
  CHECK(parse_polynomial("x0^3+x2^2+x1^2+x0^2").to_string() == "x0^2+x1^2+x2^2+x0^3");
  CHECK(parse_polynomial(parse_polynomial("4*x1^5+x0-x2^2-7*x0^3").to_string()) == parse_polynomial("4*x1^5+x0-x2^2-7*x0^3"));
  for (const char* bad : {"", "x0 + x1", "x", "2x0", "x0^", "+x0", "x0*x1", "y0", "x0^2+", "3*"}) {
    CHECK_THROWS_AS(parse_polynomial(bad), InvalidArgument);
  }
  CHECK_THROWS_AS(parse_polynomial("x3", 2), InvalidArgument);
}

TEST_CASE("polynomial operations") {
  auto f = parse_polynomial("x0^2+x1^2+x2^2+x0^3");
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.initial_form() == fermat(3, 2));
  CHECK(f.partial(0) == parse_polynomial("2*x0+3*x0^2", 3));
  CHECK(f.eval_mod({1, 1, 1}, 5) == 4);
  CHECK(fermat(3, 2).eval_mod({1, 2, 0}, 5) == 0);
}

TEST_CASE("base counts") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    auto c = count_base(parse_polynomial("x0", 3), p);
    CHECK(c.cone == power(p, 2) - 1);
    CHECK(c.milnor == power(p, 2));
  }
  // Nondegenerate ternary quadric over F_q: q^2 points on the affine cone and
  // q^2 + q chi(-disc) on the unit level set.
  auto q5 = count_base(fermat(3, 2), 5);
  CHECK(q5.cone == 24);
  CHECK(q5.milnor == 30);
  auto q3 = count_base(fermat(3, 2), 3);
  CHECK(q3.cone == 8);
  CHECK(q3.milnor == 6);
  CHECK_THROWS_AS(count_base(parse_polynomial("x0^2+x1"), 5), InvalidArgument);
  CHECK_THROWS_AS(count_base(fermat(3, 2), 4), InvalidArgument);
}

TEST_CASE("smoothness check") {
  CHECK_NOTHROW(check_smooth_reduction(fermat(3, 2), 3));
  CHECK_THROWS_AS(check_smooth_reduction(fermat(3, 3), 3), NonSmoothReduction);
  CHECK_THROWS_AS(check_smooth_reduction(parse_polynomial("x0^2+x1^2", 3), 5), NonSmoothReduction);
}

TEST_CASE("jet counts for the quadric cone") {
  auto r = count_contact_jets(fermat(3, 2), 2, 3, single_thread());
  CHECK(r.by_order.size() == 1);
  CHECK(r.by_order.count(1) == 1);
  CHECK(r.by_order.at(1) == r.base_counts.milnor * power(3, 3));
  CHECK(stratification_matches(r));

  r = count_contact_jets(fermat(3, 2), 3, 3, single_thread());
  CHECK(r.by_order.size() == 1);
  CHECK(r.by_order.at(1) == r.base_counts.cone * power(3, 5));
  CHECK(stratification_matches(r));

  r = count_contact_jets(fermat(3, 4), 3, 5, single_thread());
  CHECK(r.total_count == 0);
  CHECK(stratification_matches(r));
}

TEST_CASE("stratification matches the bundle prediction") {
  CHECK(verify_stratification(fermat(3, 2), 4, 3));
  CHECK(verify_stratification(fermat(3, 2), 4, 5));
  CHECK(verify_stratification(fermat(3, 4), 4, 3));
  CHECK(verify_stratification(fermat(2, 3), 6, 5));
  CHECK(verify_stratification(fermat(4, 2), 3, 3));
}

TEST_CASE("perturbation by higher order terms does not change the counts") {
  auto h = fermat(3, 2);
  auto f = parse_polynomial("x0^2+x1^2+x2^2+x0^3");
  auto a = count_contact_jets(h, 4, 5);
  auto b = count_contact_jets(f, 4, 5);
  CHECK(stratification_matches(b));
  CHECK(a.by_order == b.by_order);
}

TEST_CASE("thread partition does not change the result") {
  JetCountOptions many;
  many.threads = 4;
  CHECK(count_contact_jets(fermat(3, 2), 3, 5, single_thread()) ==
        count_contact_jets(fermat(3, 2), 3, 5, many));
}

TEST_CASE("jet count input checks") {
  JetCountOptions tiny;
  tiny.budget = 1000;
  CHECK_THROWS_AS(count_contact_jets(fermat(3, 2), 4, 5, tiny), BudgetExceeded);
  CHECK_THROWS_AS(count_contact_jets(fermat(3, 2), 2, 4), InvalidArgument);
  CHECK_THROWS_AS(count_contact_jets(parse_polynomial("x0+x1^2"), 2, 3), InvalidArgument);
  CHECK_THROWS_AS(count_contact_jets(fermat(3, 3), 3, 3), NonSmoothReduction);
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number_oracle(fermat(3, 2)) == 1);
  CHECK(milnor_number_oracle(fermat(3, 3)) == 8);
  CHECK(milnor_number_oracle(fermat(3, 4)) == 27);
  CHECK(milnor_number_oracle(fermat(4, 3)) == 16);
  CHECK_THROWS_AS(milnor_number_oracle(parse_polynomial("x0^2+x1^2", 3)), InvalidArgument);
}

namespace {

// Unpruned enumeration of all p^(n m) jets, for cross-checking the search.
std::map<std::int64_t, Integer> brute_force_counts(const SparseIntPoly& f, int m, std::uint64_t p) {
  const int n = f.n();
  const int cells = n * m;
  std::vector<std::uint64_t> digits(cells, 0);
  std::map<std::int64_t, Integer> out;
  while (true) {
    // series[i][k] = coefficient of t^k in x_i, k = 0..m.
    std::vector<std::vector<std::uint64_t>> series(n, std::vector<std::uint64_t>(m + 1, 0));
    for (int c = 0; c < cells; ++c) series[c % n][c / n + 1] = digits[c];
    std::vector<std::uint64_t> total(m + 1, 0);
    for (const auto& t : f.terms()) {
      std::vector<std::uint64_t> acc(m + 1, 0);
      std::int64_t c = t.coeff % static_cast<std::int64_t>(p);
      acc[0] = static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(p) : c);
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < t.exps[i]; ++e) {
          std::vector<std::uint64_t> next(m + 1, 0);
          for (int a = 0; a <= m; ++a) {
            for (int b = 0; a + b <= m; ++b) next[a + b] = (next[a + b] + acc[a] * series[i][b]) % p;
          }
          acc = next;
        }
      }
      for (int k = 0; k <= m; ++k) total[k] = (total[k] + acc[k]) % p;
    }
    bool hit = total[m] == 1;
    for (int k = 1; k < m; ++k) hit = hit && total[k] == 0;
    if (hit) {
      std::int64_t rho = 0;
      for (int c = 0; c < cells && rho == 0; ++c) {
        if (digits[c] != 0) rho = c / n + 1;
      }
      out[rho] += 1;
    }
    int c = 0;
    while (c < cells && ++digits[c] == p) digits[c++] = 0;
    if (c == cells) break;
  }
  return out;
}

}  // namespace

TEST_CASE("pruned search agrees with unpruned enumeration") {
  struct Case {
    const char* f;
    int m;
    std::uint64_t p;
  };
  for (const Case& c : {Case{"x0^2+x1^2+x2^2", 2, 3}, Case{"x0^2+x1^2+x2^2", 3, 3},
                        Case{"x0^2+x1^2+x2^2+x0^3", 3, 3}, Case{"x0^3+x1^3", 3, 5},
                        Case{"x0^3+x1^3", 4, 5}, Case{"x0^2+x1^2", 5, 3},
                        Case{"x0^2+3*x1^2+x1^3", 4, 5}}) {
    CAPTURE(c.f);
    CAPTURE(c.m);
    auto f = parse_polynomial(c.f);
    auto report = count_contact_jets(f, c.m, c.p, single_thread());
    CHECK(report.by_order == brute_force_counts(f, c.m, c.p));
  }
  // Mixed monomials are outside the inline grammar.
  SparseIntPoly mixed(2, {{{2, 0}, 1}, {{0, 2}, 3}, {{1, 2}, 1}});
  CHECK(count_contact_jets(mixed, 4, 5, single_thread()).by_order == brute_force_counts(mixed, 4, 5));
}
