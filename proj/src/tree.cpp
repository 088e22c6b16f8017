#include "hst/tree.hpp"

#include <algorithm>
#include <sstream>

#include "hst/error.hpp"

namespace hst {
namespace {

std::int32_t add_node(HstTree& tree, TreeNode node) {
  tree.nodes.push_back(std::move(node));
  return std::int32_t(tree.nodes.size() - 1);
}

std::int32_t build_hst_rec(HstTree& tree, const PointSet& ps,
                           std::vector<std::uint32_t> scope, std::uint64_t seed) {
  const std::size_t d = std::size_t(ps.d);
  if (scope.size() < d) {
    return add_node(tree, TreeNode{true, std::move(scope), -1, -1});
  }
  SplitMix64 rng(seed);
  auto picks = sample_without_replacement(std::uint32_t(scope.size()),
                                          std::uint32_t(d), rng);
  std::vector<std::size_t> pivots;
  pivots.reserve(d);
  for (std::uint32_t p : picks) pivots.push_back(scope[p]);

  // classify within a sub-pointset view: reuse the full set, restricting to
  // scope indices by membership
  const auto coeffs = hyperplane_functional(ps, pivots);
  std::vector<bool> is_pivot_scope(scope.size(), false);
  for (std::uint32_t p : picks) is_pivot_scope[p] = true;
  std::vector<std::uint32_t> left, right;
  for (std::size_t si = 0; si < scope.size(); ++si) {
    if (is_pivot_scope[si]) continue;
    const std::size_t i = scope[si];
    Rational v = coeffs[ps.d];
    for (int c = 0; c < ps.d; ++c) v += coeffs[c] * ps.points[i].coords[c];
    if (v > 0)
      left.push_back(std::uint32_t(i));
    else if (v < 0)
      right.push_back(std::uint32_t(i));
    else
      throw DegenerateInput("point " + std::to_string(i) +
                            " lies on a pivot hyperplane");
  }

  std::vector<std::uint32_t> pivot_ids(pivots.begin(), pivots.end());
  const std::int32_t l = build_hst_rec(tree, ps, std::move(left), mix_seed(seed, 1));
  const std::int32_t r = build_hst_rec(tree, ps, std::move(right), mix_seed(seed, 2));
  return add_node(tree, TreeNode{false, std::move(pivot_ids), l, r});
}

}  // namespace

HstTree build_hst(const PointSet& ps, std::uint64_t seed) {
  if (ps.size() < 1) throw InvalidArgument("empty point set");
  HstTree tree;
  tree.d = ps.d;
  tree.source = ps.label;
  tree.seed = seed;
  std::vector<std::uint32_t> scope(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) scope[i] = std::uint32_t(i);
  tree.root = build_hst_rec(tree, ps, std::move(scope), seed);
  return tree;
}

TreeStats stats(const HstTree& tree) {
  TreeStats st;
  if (tree.root < 0) return st;
  BigInt depth_sum = 0;
  // iterative preorder with explicit depth
  std::vector<std::pair<std::int32_t, std::size_t>> stack{{tree.root, 0}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    const TreeNode& node = tree.nodes[std::size_t(id)];
    if (!node.points.empty()) {
      st.n += node.points.size();
      st.height = std::max(st.height, depth);
      depth_sum += BigInt(node.points.size()) * BigInt(depth);
    }
    if (!node.leaf) {
      stack.push_back({node.left, depth + 1});
      stack.push_back({node.right, depth + 1});
    }
  }
  st.mean_depth = st.n ? Rational(depth_sum, BigInt(st.n)) : Rational(0);

  const TreeNode& root = tree.nodes[std::size_t(tree.root)];
  if (!root.leaf) {
    auto count_points = [&](std::int32_t id) {
      std::size_t total = 0;
      std::vector<std::int32_t> s{id};
      while (!s.empty()) {
        const TreeNode& nd = tree.nodes[std::size_t(s.back())];
        s.pop_back();
        total += nd.points.size();
        if (!nd.leaf) {
          s.push_back(nd.left);
          s.push_back(nd.right);
        }
      }
      return total;
    };
    st.root_split = {count_points(root.left), count_points(root.right)};
  }
  return st;
}

std::pair<std::size_t, std::size_t> alternation_split(
    const std::vector<std::uint32_t>& sorted_pivot_ranks, std::size_t m) {
  std::size_t odd = 0, even = 0, prev = 0;
  for (std::size_t g = 0; g < sorted_pivot_ranks.size(); ++g) {
    const std::size_t gap = sorted_pivot_ranks[g] - prev;  // gap number g+1
    (g % 2 == 0 ? odd : even) += gap;
    prev = sorted_pivot_ranks[g] + 1;
  }
  const std::size_t last = m - prev;
  (sorted_pivot_ranks.size() % 2 == 0 ? odd : even) += last;
  return {odd, even};
}

std::pair<std::size_t, std::size_t> simulate_moment_split(std::size_t n, int d,
                                                          SplitMix64& rng) {
  if (n < std::size_t(d)) throw InvalidArgument("simulate_moment_split: n >= d");
  auto ranks = sample_without_replacement(std::uint32_t(n), std::uint32_t(d), rng);
  std::sort(ranks.begin(), ranks.end());
  return alternation_split(ranks, n);
}

namespace {

std::int32_t build_moment_rec(HstTree& tree, int d,
                              std::vector<std::uint32_t> scope, std::uint64_t seed) {
  if (scope.size() < std::size_t(d)) {
    return add_node(tree, TreeNode{true, std::move(scope), -1, -1});
  }
  SplitMix64 rng(seed);
  const auto draw = sample_without_replacement(std::uint32_t(scope.size()),
                                               std::uint32_t(d), rng);
  auto pos = draw;
  std::sort(pos.begin(), pos.end());
  // Parity of the permutation sorting the draw: on the moment curve the
  // orientation-positive side is the odd-gap side iff this parity is even,
  // so honoring it keeps this builder bit-compatible with the geometric one.
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < draw.size(); ++i)
    for (std::size_t j = i + 1; j < draw.size(); ++j)
      if (draw[i] > draw[j]) ++inversions;
  const bool swap_sides = (inversions % 2) != 0;

  std::vector<std::uint32_t> pivots, odd_side, even_side;
  pivots.reserve(std::size_t(d));
  for (std::uint32_t p : draw) pivots.push_back(scope[p]);
  std::size_t g = 0;  // current gap number - 1
  std::size_t prev = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    auto& side = (g % 2 == 0) ? odd_side : even_side;
    for (std::size_t i = prev; i < pos[k]; ++i) side.push_back(scope[i]);
    prev = pos[k] + 1;
    ++g;
  }
  auto& side = (g % 2 == 0) ? odd_side : even_side;
  for (std::size_t i = prev; i < scope.size(); ++i) side.push_back(scope[i]);

  auto& pos_side = swap_sides ? even_side : odd_side;
  auto& neg_side = swap_sides ? odd_side : even_side;
  const std::int32_t l = build_moment_rec(tree, d, std::move(pos_side), mix_seed(seed, 1));
  const std::int32_t r = build_moment_rec(tree, d, std::move(neg_side), mix_seed(seed, 2));
  return add_node(tree, TreeNode{false, std::move(pivots), l, r});
}

}  // namespace

HstTree build_moment_hst(std::size_t n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw InvalidArgument("build_moment_hst: n >= 1, d >= 1");
  HstTree tree;
  tree.d = d;
  tree.source = "moment-model(" + std::to_string(n) + "," + std::to_string(d) + ")";
  tree.seed = seed;
  std::vector<std::uint32_t> scope(n);
  for (std::size_t i = 0; i < n; ++i) scope[i] = std::uint32_t(i);
  tree.root = build_moment_rec(tree, d, std::move(scope), seed);
  return tree;
}

namespace {

std::int32_t build_fringe_rec(HstTree& tree, unsigned t,
                              std::vector<std::uint32_t> scope, std::uint64_t seed) {
  const std::size_t arity = 2 * std::size_t(t) + 1;
  if (scope.size() < arity) {
    return add_node(tree, TreeNode{true, std::move(scope), -1, -1});
  }
  SplitMix64 rng(seed);
  auto pos = sample_without_replacement(std::uint32_t(scope.size()),
                                        std::uint32_t(arity), rng);
  std::sort(pos.begin(), pos.end());
  const std::uint32_t median = pos[t];

  std::vector<std::uint32_t> node_points, left, right;
  node_points.reserve(arity);
  for (std::uint32_t p : pos) node_points.push_back(scope[p]);
  std::vector<bool> sampled(scope.size(), false);
  for (std::uint32_t p : pos) sampled[p] = true;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (sampled[i]) continue;
    (i < median ? left : right).push_back(scope[i]);
  }

  const std::int32_t l = build_fringe_rec(tree, t, std::move(left), mix_seed(seed, 1));
  const std::int32_t r = build_fringe_rec(tree, t, std::move(right), mix_seed(seed, 2));
  return add_node(tree, TreeNode{false, std::move(node_points), l, r});
}

}  // namespace

HstTree build_fringe_tree(std::size_t n, unsigned t, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("build_fringe_tree: n >= 1");
  HstTree tree;
  tree.d = int(2 * t + 1);
  tree.source = "fringe(" + std::to_string(n) + ",t=" + std::to_string(t) + ")";
  tree.seed = seed;
  std::vector<std::uint32_t> scope(n);
  for (std::size_t i = 0; i < n; ++i) scope[i] = std::uint32_t(i);
  tree.root = build_fringe_rec(tree, t, std::move(scope), seed);
  return tree;
}

namespace {

void serialize_rec(const HstTree& tree, std::int32_t id, std::ostringstream& out) {
  const TreeNode& node = tree.nodes[std::size_t(id)];
  out << (node.leaf ? "L" : "I");
  for (std::uint32_t p : node.points) out << " " << p;
  out << "\n";
  if (!node.leaf) {
    serialize_rec(tree, node.left, out);
    serialize_rec(tree, node.right, out);
  }
}

std::int32_t parse_rec(HstTree& tree, const std::vector<std::string>& lines,
                       std::size_t& pos, int d) {
  if (pos >= lines.size()) throw ParseError("truncated tree text");
  std::istringstream in(lines[pos++]);
  std::string kind;
  in >> kind;
  TreeNode node;
  std::uint32_t v;
  while (in >> v) node.points.push_back(v);
  if (kind == "L") {
    node.leaf = true;
    if (node.points.size() >= std::size_t(d))
      throw ParseError("leaf with >= d points");
    return add_node(tree, node);
  }
  if (kind != "I") throw ParseError("bad node tag '" + kind + "'");
  if (node.points.size() != std::size_t(d))
    throw ParseError("internal node without exactly d pivots");
  node.leaf = false;
  node.left = parse_rec(tree, lines, pos, d);
  node.right = parse_rec(tree, lines, pos, d);
  return add_node(tree, node);
}

}  // namespace

std::string serialize_tree(const HstTree& tree) {
  std::ostringstream out;
  if (tree.root >= 0) serialize_rec(tree, tree.root, out);
  return out.str();
}

HstTree parse_tree(const std::string& text, int d) {
  HstTree tree;
  tree.d = d;
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  std::size_t pos = 0;
  tree.root = parse_rec(tree, lines, pos, d);
  if (pos != lines.size()) throw ParseError("trailing tree lines");
  return tree;
}

// ----- exhaustive oracles ---------------------------------------------------

namespace {

void accumulate(SplitDistribution& dist, std::size_t a, std::size_t b,
                const Rational& weight) {
  if (a > b) std::swap(a, b);
  dist[{a, b}] += weight;
}

}  // namespace

SplitDistribution enumerate_geometric_root_splits(const PointSet& ps) {
  const std::size_t n = ps.size();
  const int d = ps.d;
  SplitDistribution dist;
  if (n < std::size_t(d)) return dist;
  const Rational w(1, binomial(long(n), long(d)));
  for_each_subset(n, std::size_t(d), [&](const std::vector<std::size_t>& subset) {
    const Split s = classify_split(ps, subset);
    accumulate(dist, s.left.size(), s.right.size(), w);
  });
  return dist;
}

SplitDistribution enumerate_model_root_splits(std::size_t n, int d) {
  SplitDistribution dist;
  if (n < std::size_t(d)) return dist;
  const Rational w(1, binomial(long(n), long(d)));
  for_each_subset(n, std::size_t(d), [&](const std::vector<std::size_t>& subset) {
    std::vector<std::uint32_t> ranks(subset.begin(), subset.end());
    const auto [odd, even] = alternation_split(ranks, n);
    accumulate(dist, odd, even, w);
  });
  return dist;
}

SplitDistribution enumerate_fringe_root_splits(std::size_t n, unsigned t) {
  const std::size_t arity = 2 * std::size_t(t) + 1;
  SplitDistribution dist;
  if (n < arity) return dist;
  const Rational w(1, binomial(long(n), long(arity)));
  for_each_subset(n, arity, [&](const std::vector<std::size_t>& subset) {
    const std::size_t median = subset[t];
    accumulate(dist, median - t, n - 1 - median - t, w);
  });
  return dist;
}

}  // namespace hst
