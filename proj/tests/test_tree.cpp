#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hst/error.hpp"
#include "hst/points.hpp"
#include "hst/tree.hpp"

using namespace hst;

TEST_CASE("build_hst is deterministic in (points, seed)") {
  const PointSet ps = random_pointset(30, 2, RandomModel::UnitCube, 5);
  const HstTree a = build_hst(ps, 123);
  const HstTree b = build_hst(ps, 123);
  CHECK(serialize_tree(a) == serialize_tree(b));
  const HstTree c = build_hst(ps, 124);
  CHECK(serialize_tree(a) != serialize_tree(c));
}

TEST_CASE("every point index appears exactly once in the tree") {
  const PointSet ps = moment_curve(41, 3);
  const HstTree tree = build_hst(ps, 9);
  std::set<std::uint32_t> seen;
  for (const auto& node : tree.nodes) {
    if (!node.leaf) {
      CHECK(node.points.size() == 3);
      CHECK(node.left >= 0);
      CHECK(node.right >= 0);
    } else {
      CHECK(node.points.size() <= 2);
    }
    for (auto idx : node.points) CHECK(seen.insert(idx).second);
  }
  CHECK(seen.size() == 41);
}

TEST_CASE("n < d gives a single leaf") {
  const PointSet ps = moment_curve(2, 3);
  const HstTree tree = build_hst(ps, 1);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.nodes[tree.root].leaf);
  const TreeStats st = stats(tree);
  CHECK(st.n == 2);
  CHECK(st.height == 0);
  CHECK(st.mean_depth == 0);
}

TEST_CASE("stats of a hand-built perfect d=1 tree") {
  const std::string text =
      "I 3\nI 1\nI 0\nL\nL\nI 2\nL\nL\nI 5\nI 4\nL\nL\nI 6\nL\nL\n";
  const HstTree tree = parse_tree(text, 1);
  const TreeStats st = stats(tree);
  CHECK(st.n == 7);
  CHECK(st.height == 2);
  CHECK(st.mean_depth == Rational(10, 7));
  CHECK(st.root_split == std::pair<std::size_t, std::size_t>{3, 3});
}

TEST_CASE("serialize/parse round trip") {
  for (std::uint64_t seed : {1ULL, 2ULL, 77ULL}) {
    const HstTree tree = build_moment_hst(25, 3, seed);
    const std::string text = serialize_tree(tree);
    const HstTree back = parse_tree(text, 3);
    CHECK(serialize_tree(back) == text);
    const TreeStats a = stats(tree), b = stats(back);
    CHECK(a.height == b.height);
    CHECK(a.mean_depth == b.mean_depth);
    CHECK(a.root_split == b.root_split);
  }
}

TEST_CASE("parse_tree error cases") {
  CHECK_THROWS_AS(parse_tree("", 1), ParseError);
  CHECK_THROWS_AS(parse_tree("X 1\n", 1), ParseError);
  CHECK_THROWS_AS(parse_tree("I 1 2\nL 0\nL 3\n", 1), ParseError);  // arity
  CHECK_THROWS_AS(parse_tree("I 1\nL 0\n", 1), ParseError);  // missing child
  CHECK_THROWS_AS(parse_tree("I 1\nL 0\nL 2\nL 9\n", 1), ParseError);  // extra
  CHECK_THROWS_AS(parse_tree("I 1\nL 0\nL 1\n", 1), ParseError);  // dup index
}

TEST_CASE("alternation split hand examples") {
  using P = std::pair<std::size_t, std::size_t>;
  // d = 2, m = 4, pivot ranks {0,1}: gaps 0|0|2, odd gaps 1 and 3.
  CHECK(alternation_split({0, 1}, 4) == P{2, 0});
  CHECK(alternation_split({0, 2}, 4) == P{1, 1});
  CHECK(alternation_split({0, 3}, 4) == P{0, 2});
  CHECK(alternation_split({1, 2}, 4) == P{2, 0});
  // d = 1: the single pivot cuts {below, above}.
  CHECK(alternation_split({2}, 6) == P{2, 3});
  // d = 3, m = 9, ranks {1,4,6}: gaps 1|2|1|2 -> odd 1+1, even 2+2.
  CHECK(alternation_split({1, 4, 6}, 9) == P{2, 4});
}

TEST_CASE("exact model root-split law for n=3, d=1") {
  const SplitDistribution law = enumerate_model_root_splits(3, 1);
  REQUIRE(law.size() == 2);
  CHECK(law.at({0, 2}) == Rational(2, 3));
  CHECK(law.at({1, 1}) == Rational(1, 3));
}

TEST_CASE("exact model root-split law for n=4, d=2") {
  const SplitDistribution law = enumerate_model_root_splits(4, 2);
  REQUIRE(law.size() == 2);
  CHECK(law.at({0, 2}) == Rational(4, 6));
  CHECK(law.at({1, 1}) == Rational(2, 6));
}

TEST_CASE("moment-curve geometry realizes the alternation model exactly") {
  for (auto [n, d] : {std::pair<int, int>{6, 1}, {7, 2}, {7, 3}, {8, 4}}) {
    const SplitDistribution geo =
        enumerate_geometric_root_splits(moment_curve(n, d));
    const SplitDistribution mod = enumerate_model_root_splits(n, d);
    CHECK(geo == mod);
  }
}

TEST_CASE("fringe tree with parameter t matches the d = 2t+1 model") {
  for (auto [n, t] : {std::pair<int, int>{6, 0}, {9, 1}, {11, 2}}) {
    const SplitDistribution fr = enumerate_fringe_root_splits(n, t);
    const SplitDistribution mod = enumerate_model_root_splits(n, 2 * t + 1);
    CHECK(fr == mod);
  }
}

TEST_CASE("split distributions sum to one") {
  const SplitDistribution law = enumerate_model_root_splits(12, 3);
  Rational total = 0;
  for (const auto& [split, p] : law) {
    CHECK(split.first <= split.second);
    CHECK(split.first + split.second == 9);
    total += p;
  }
  CHECK(total == 1);
}

TEST_CASE("combinatorial moment build matches geometric stats per seed") {
  // Both builders consume pivot draws identically, so with the same seed the
  // geometric tree on the moment curve and the rank-model tree agree.
  for (std::uint64_t seed : {3ULL, 8ULL, 21ULL}) {
    const HstTree geo = build_hst(moment_curve(18, 3), seed);
    const HstTree mod = build_moment_hst(18, 3, seed);
    CHECK(serialize_tree(geo) == serialize_tree(mod));
    const TreeStats a = stats(geo), b = stats(mod);
    CHECK(a.height == b.height);
    CHECK(a.mean_depth == b.mean_depth);
  }
}

TEST_CASE("fringe tree t=0 is a binary search tree") {
  const HstTree tree = build_fringe_tree(15, 0, 4);
  const TreeStats st = stats(tree);
  CHECK(st.n == 15);
  for (const auto& node : tree.nodes)
    CHECK(node.points.size() == (node.leaf ? 0u : 1u));
}

TEST_CASE("degenerate geometry is rejected by the builder") {
  PointSet ps;
  ps.d = 2;
  for (int i = 0; i < 4; ++i)
    ps.points.push_back({{Rational(i), Rational(2 * i)}});  // collinear
  CHECK_THROWS_AS(build_hst(ps, 5), DegenerateInput);
}

TEST_CASE("simulate_moment_split frequencies match the exact law") {
  SplitMix64 rng(31);
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    auto [a, b] = simulate_moment_split(4, 2, rng);
    if (a > b) std::swap(a, b);
    ++counts[{a, b}];
  }
  // exact law: (0,2) w.p. 2/3, (1,1) w.p. 1/3; 5 sigma ~ 0.017
  CHECK(std::abs(counts[{0, 2}] / double(trials) - 2.0 / 3) < 0.017);
  CHECK(std::abs(counts[{1, 1}] / double(trials) - 1.0 / 3) < 0.017);
}
