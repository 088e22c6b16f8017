#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hst/error.hpp"
#include "hst/geom.hpp"
#include "hst/points.hpp"
#include "hst/rng.hpp"

using namespace hst;

namespace {

PointSet make2d(std::initializer_list<std::pair<int, int>> pts) {
  PointSet ps;
  ps.d = 2;
  for (auto [x, y] : pts) ps.points.push_back({{Rational(x), Rational(y)}});
  return ps;
}

}  // namespace

TEST_CASE("orientation of the standard simplex is positive") {
  const PointSet ps = make2d({{0, 0}, {1, 0}, {0, 1}});
  CHECK(orientation(ps, {0, 1, 2}) == 1);
}

TEST_CASE("collinear points have zero orientation") {
  const PointSet ps = make2d({{0, 0}, {1, 1}, {2, 2}});
  CHECK(orientation(ps, {0, 1, 2}) == 0);
}

TEST_CASE("orientation antisymmetry under transposition") {
  const PointSet ps = moment_curve(8, 3);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto tuple32 = sample_without_replacement(8, 4, rng);
    std::vector<std::size_t> tuple(tuple32.begin(), tuple32.end());
    const int before = orientation(ps, tuple);
    const std::size_t i = rng.below(4), j = (i + 1 + rng.below(3)) % 4;
    std::swap(tuple[i], tuple[j]);
    CHECK(orientation(ps, tuple) == -before);
  }
}

TEST_CASE("orientation rejects bad tuples") {
  const PointSet ps = make2d({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(orientation(ps, {0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(orientation(ps, {0, 1, 5}), InvalidArgument);
  CHECK_THROWS_AS(orientation(ps, {0, 1}), InvalidArgument);
}

TEST_CASE("hyperplane functional agrees with orientation") {
  const PointSet ps = moment_curve(7, 3);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto picks = sample_without_replacement(7, 4, rng);
    std::vector<std::size_t> pivots(picks.begin(), picks.begin() + 3);
    const std::size_t probe = picks[3];
    const auto coeffs = hyperplane_functional(ps, pivots);
    Rational v = coeffs[3];
    for (int c = 0; c < 3; ++c) v += coeffs[c] * ps.points[probe].coords[c];
    std::vector<std::size_t> tuple = pivots;
    tuple.push_back(probe);
    const int o = orientation(ps, tuple);
    CHECK((v > 0 ? 1 : v < 0 ? -1 : 0) == o);
  }
}

TEST_CASE("classify on a line: one pivot separates") {
  PointSet ps;
  ps.d = 1;
  for (int x : {1, 2, 3}) ps.points.push_back({{Rational(x)}});
  const Split s = classify_split(ps, {1});
  REQUIRE(s.left.size() + s.right.size() == 2);
  CHECK(s.left.size() == 1);
  CHECK(s.right.size() == 1);
  CHECK(s.left[0] != s.right[0]);
}

TEST_CASE("moment curve: points between pivot parameters share a side") {
  const PointSet ps = moment_curve(4, 2);
  const Split s = classify_split(ps, {0, 3});  // parameters 1 and 4
  const std::size_t lo = std::min(s.left.size(), s.right.size());
  const std::size_t hi = std::max(s.left.size(), s.right.size());
  CHECK(lo == 0);
  CHECK(hi == 2);
}

TEST_CASE("classify with n == d yields empty sides") {
  const PointSet ps = make2d({{0, 0}, {1, 0}});
  const Split s = classify_split(ps, {0, 1});
  CHECK(s.left.empty());
  CHECK(s.right.empty());
}

TEST_CASE("classify rejects a point on the pivot hyperplane") {
  const PointSet ps = make2d({{0, 0}, {2, 2}, {1, 1}, {5, 0}});
  CHECK_THROWS_AS(classify_split(ps, {0, 1}), DegenerateInput);
}

TEST_CASE("translation invariance of splits") {
  const PointSet ps = moment_curve(6, 2);
  PointSet shifted = ps;
  for (auto& p : shifted.points) {
    p.coords[0] += Rational(7, 3);
    p.coords[1] -= Rational(11, 5);
  }
  for_each_subset(6, 2, [&](const std::vector<std::size_t>& pivots) {
    const Split a = classify_split(ps, pivots);
    const Split b = classify_split(shifted, pivots);
    CHECK(a.left == b.left);
    CHECK(a.right == b.right);
  });
}

TEST_CASE("invertible linear maps preserve the unordered split") {
  const PointSet ps = moment_curve(6, 2);
  // rows of an invertible rational matrix
  const Rational m00(2, 3), m01(1, 7), m10(-1, 2), m11(4, 5);
  REQUIRE(m00 * m11 - m01 * m10 != 0);
  PointSet mapped = ps;
  for (auto& p : mapped.points) {
    const Rational x = p.coords[0], y = p.coords[1];
    p.coords[0] = m00 * x + m01 * y;
    p.coords[1] = m10 * x + m11 * y;
  }
  for_each_subset(6, 2, [&](const std::vector<std::size_t>& pivots) {
    Split a = classify_split(ps, pivots);
    Split b = classify_split(mapped, pivots);
    // compare as unordered pairs of sets
    const bool same = (a.left == b.left && a.right == b.right) ||
                      (a.left == b.right && a.right == b.left);
    CHECK(same);
  });
}

TEST_CASE("positive rational scaling preserves orientation signs") {
  const PointSet ps = moment_curve(5, 3);
  PointSet scaled = ps;
  for (auto& p : scaled.points)
    for (auto& c : p.coords) c *= Rational(22, 7);
  for_each_subset(5, 4, [&](const std::vector<std::size_t>& tuple) {
    CHECK(orientation(ps, tuple) == orientation(scaled, tuple));
  });
}

TEST_CASE("general position checks") {
  CHECK(is_general_position(moment_curve(6, 3)));
  const PointSet bad = make2d({{0, 0}, {1, 1}, {2, 2}, {5, 0}});
  CHECK_FALSE(is_general_position(bad));
  CHECK(is_general_position(make2d({{0, 0}, {1, 0}})));  // n <= d: vacuous
}

TEST_CASE("general position budget is enforced, not skipped") {
  CHECK_THROWS_AS(is_general_position(moment_curve(40, 3), 1000), BudgetExceeded);
}
