#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hst/geom.hpp"
#include "hst/rng.hpp"

namespace hst {

// Arena node of a hyperplane search tree.  Internal nodes hold exactly d
// pivot indices and two children; leaves hold 0..d-1 point indices.
struct TreeNode {
  bool leaf = true;
  std::vector<std::uint32_t> points;  // pivots (internal) or residents (leaf)
  std::int32_t left = -1;
  std::int32_t right = -1;
};

struct HstTree {
  int d = 0;
  std::vector<TreeNode> nodes;
  std::int32_t root = -1;
  std::string source;
  std::uint64_t seed = 0;
};

struct TreeStats {
  std::size_t n = 0;
  std::size_t height = 0;        // max data-point depth, root = 0
  Rational mean_depth;           // exact average over all n points
  std::pair<std::size_t, std::size_t> root_split{0, 0};
};

// Recursive random hyperplane split tree on a point set in general position.
// Deterministic in (ps, seed): pivots are drawn by partial Fisher-Yates from
// a SplitMix64 stream, child streams are mix_seed(node seed, 1 or 2).
HstTree build_hst(const PointSet& ps, std::uint64_t seed);

TreeStats stats(const HstTree& tree);

// Deterministic split of the gap alternation model given the sorted 0-based
// ranks of the d pivots among m points: gap i (1-based, before/between/after
// the pivots) goes to the odd side when i is odd.
std::pair<std::size_t, std::size_t> alternation_split(
    const std::vector<std::uint32_t>& sorted_pivot_ranks, std::size_t m);

// One random draw of the model: d distinct ranks from {1..n}, returning
// (odd side, even side) gap totals.  No geometry touched.
std::pair<std::size_t, std::size_t> simulate_moment_split(std::size_t n, int d,
                                                          SplitMix64& rng);

// Purely combinatorial tree whose TreeStats distribution equals
// build_hst(moment_curve(n, d), .) without big-integer coordinates.
HstTree build_moment_hst(std::size_t n, int d, std::uint64_t seed);

// Median-of-(2t+1) fringe-balanced tree; the 2t non-median samples stay at
// the node (no reuse), so node arity matches the d = 2t+1 hyperplane tree.
HstTree build_fringe_tree(std::size_t n, unsigned t, std::uint64_t seed);

// Line-oriented preorder serialization: `I <pivots...>` / `L <points...>`.
std::string serialize_tree(const HstTree& tree);
HstTree parse_tree(const std::string& text, int d);

// ----- exhaustive oracles (exact distributions over uniform pivot subsets) -

using SplitDistribution =
    std::map<std::pair<std::size_t, std::size_t>, Rational>;  // unordered (a<=b)

// Exact unordered root-split-size distribution over all C(n, d) pivot
// subsets of the geometric build on `ps`.
SplitDistribution enumerate_geometric_root_splits(const PointSet& ps);

// Same, for the interval-alternation model on n abstract ranks.
SplitDistribution enumerate_model_root_splits(std::size_t n, int d);

// Same, for the fringe-balanced tree with parameter t (subset of 2t+1 ranks,
// split at the median).
SplitDistribution enumerate_fringe_root_splits(std::size_t n, unsigned t);

}  // namespace hst
