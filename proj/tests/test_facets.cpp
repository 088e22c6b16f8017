#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hst/error.hpp"
#include "hst/facets.hpp"
#include "hst/points.hpp"

using namespace hst;

TEST_CASE("census of three points on a line") {
  const SplitCensus cs = census(moment_curve(3, 1));
  CHECK(cs.n == 3);
  CHECK(cs.d == 1);
  REQUIRE(cs.table.size() == 3);
  CHECK(cs.table[0] == 2);
  CHECK(cs.table[1] == 2);
  CHECK(cs.table[2] == 2);
  CHECK(cs.total() == 6);
}

TEST_CASE("census totals and symmetry") {
  for (auto [n, d] : {std::pair<int, int>{6, 1}, {7, 2}, {7, 3}, {8, 4}}) {
    const SplitCensus cs = census(moment_curve(n, d));
    CHECK(cs.total() == 2 * binomial(n, d));
    for (std::size_t k = 0; k + d <= std::size_t(n); ++k)
      CHECK(cs.table[k] == cs.table[n - d - k]);
  }
}

TEST_CASE("zero-sided oriented subsets count cyclic polytope facets") {
  for (auto [n, d] : {std::pair<int, int>{5, 3}, {6, 3}, {7, 3}, {7, 4},
                      {8, 2}, {8, 5}}) {
    const SplitCensus cs = census(moment_curve(n, d));
    CHECK(cs.table[0] == cyclic_facet_count(n, d));
  }
  CHECK(census(moment_curve(5, 3)).table[0] == 6);
}

TEST_CASE("cyclic polytope facet counts, n = d+2 closed forms") {
  CHECK(cyclic_facet_count(4, 2) == 4);    // even d: (d+2)^2/4
  CHECK(cyclic_facet_count(6, 4) == 9);
  CHECK(cyclic_facet_count(5, 3) == 6);    // odd d: (d+1)(d+3)/4
  CHECK(cyclic_facet_count(7, 5) == 12);
  CHECK(cyclic_facet_count(4, 3) == 4);    // simplex boundary cases
}

TEST_CASE("larger-side tails on the three-point line") {
  const SplitCensus cs = census(moment_curve(3, 1));
  CHECK(larger_side_tail(cs, 2, TailVariant::Randomized) == Rational(1, 3));
  CHECK(larger_side_tail(cs, 2, TailVariant::Larger) == Rational(2, 3));
  CHECK(larger_side_tail(cs, 1, TailVariant::Randomized) == Rational(2, 3));
  CHECK(larger_side_tail(cs, 1, TailVariant::Larger) == 1);
  CHECK(larger_side_tail(cs, 0, TailVariant::Randomized) == 1);
  CHECK(larger_side_tail(cs, 3, TailVariant::Larger) == 0);
  CHECK(larger_side_tail(cs, Rational(3, 2), TailVariant::Randomized) ==
        Rational(1, 3));
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(census(moment_curve(50, 4), 1000), BudgetExceeded);
  PointSet bad;
  bad.d = 2;
  for (int i = 0; i < 4; ++i)
    bad.points.push_back({{Rational(i), Rational(i)}});
  CHECK_THROWS_AS(census(bad), DegenerateInput);
}

TEST_CASE("same-side probability in convex position") {
  // n = d+2 moment sets are cyclic polytopes, hence convex.
  CHECK(same_side_probability(moment_curve(3, 1)) == Rational(2, 3));
  CHECK(same_side_probability(moment_curve(4, 2)) == Rational(2, 3));
  CHECK(same_side_probability(moment_curve(5, 3)) == Rational(3, 5));
  CHECK(same_side_probability(moment_curve(6, 4)) == Rational(3, 5));
  for (int d = 1; d <= 6; ++d) {
    const Rational p = same_side_probability(moment_curve(d + 2, d));
    const Rational expected = (d % 2 == 0)
                                  ? Rational(d + 2, 2 * (d + 1))
                                  : Rational(d + 3, 2 * (d + 2));
    CHECK(p == expected);
    CHECK(p <= Rational(1, 2) + Rational(1, 2 * (d + 1)));
  }
}

TEST_CASE("same-side probability with one point inside the simplex") {
  PointSet ps;
  ps.d = 2;
  ps.points.push_back({{Rational(0), Rational(0)}});
  ps.points.push_back({{Rational(4), Rational(0)}});
  ps.points.push_back({{Rational(0), Rational(4)}});
  ps.points.push_back({{Rational(1), Rational(1)}});
  CHECK_FALSE(is_convex_position_dplus2(ps));
  CHECK(same_side_probability(ps) == Rational(2, 4));  // 2/(d+2)
}

TEST_CASE("convex-position classifier on moment sets") {
  // d = 1 is the exception: the middle of three collinear points always lies
  // in the segment of the outer two.
  CHECK_FALSE(is_convex_position_dplus2(moment_curve(3, 1)));
  for (int d = 2; d <= 5; ++d)
    CHECK(is_convex_position_dplus2(moment_curve(d + 2, d)));
}

TEST_CASE("same-side probability rejects n != d+2") {
  CHECK_THROWS_AS(same_side_probability(moment_curve(5, 2)), InvalidArgument);
  CHECK_THROWS_AS(is_convex_position_dplus2(moment_curve(4, 1)),
                  InvalidArgument);
}

TEST_CASE("exact closed-form bounds") {
  // simplified: min(1/2, 1/(1 + 4(d+1)(x-1/2)^2))
  CHECK(simplified_balance_bound_exact(1, Rational(3, 4)) == Rational(1, 2));
  CHECK(simplified_balance_bound_exact(1, 1) == Rational(1, 3));
  CHECK(simplified_balance_bound_exact(7, 1) == Rational(1, 9));
  // balance: V/(V + x^2), V = (n-d)/4 + (n-d)^2/(4(d+1))
  CHECK(balance_bound_exact(5, 1, 1) == Rational(3, 4));
  CHECK(balance_bound_exact(5, 1, 0) == 1);
  // n-d = 7: V = 7/4 + 49/16 = 77/16, bound = 77/(77 + 64)
  CHECK(balance_bound_exact(10, 3, 2) == Rational(77, 141));
}

TEST_CASE("census tail is dominated by the balance bound") {
  // P(N >= (n-d)/2 + x) <= V/(V+x^2) with N the randomized side.
  for (auto [n, d] : {std::pair<int, int>{8, 1}, {8, 2}, {8, 3}}) {
    const SplitCensus cs = census(moment_curve(n, d));
    const std::size_t r = std::size_t(n - d);
    for (std::size_t k = 0; 2 * k <= r; ++k) {
      const Rational x(k);
      const Rational tail =
          larger_side_tail(cs, Rational(r, 2) + x, TailVariant::Randomized);
      CHECK(tail <= balance_bound_exact(n, d, x));
    }
  }
}
