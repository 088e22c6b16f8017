#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hst/rational.hpp"

namespace hst {

struct Point {
  std::vector<Rational> coords;

  bool operator==(const Point&) const = default;
};

// n points in R^d with exact rational coordinates.  All other modules refer
// to points by their (stable, 0-based) index in `points`.
struct PointSet {
  int d = 0;
  std::vector<Point> points;
  std::string label;

  std::size_t size() const { return points.size(); }

  bool operator==(const PointSet&) const = default;
};

// Sign of the (d+1)x(d+1) determinant whose rows are the points of `tuple`
// in homogeneous form (coordinates followed by 1), in exact arithmetic.
// Zero iff the d+1 points are affinely dependent.
int orientation(const PointSet& ps, const std::vector<std::size_t>& tuple);

// The affine functional of the hyperplane through `pivots` (in index order):
// sign(eval(x)) == orientation(pivots..., x).  coeffs[0..d-1] multiply the
// coordinates, coeffs[d] is the constant term.
std::vector<Rational> hyperplane_functional(const PointSet& ps,
                                            const std::vector<std::size_t>& pivots);

struct Split {
  std::vector<std::size_t> left;   // orientation +1 side
  std::vector<std::size_t> right;  // orientation -1 side
};

// Partition the non-pivot points by the hyperplane through the d pivots.
// Throws DegenerateInput if some non-pivot point lies on the hyperplane.
// "left" is the orientation-positive side; treat the pair as unordered when
// symmetry matters.
Split classify_split(const PointSet& ps, const std::vector<std::size_t>& pivots);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

// True iff every (d+1)-subset has nonzero orientation.  Vacuously true when
// n <= d.  Throws BudgetExceeded when C(n, d+1) exceeds `budget`.
bool is_general_position(const PointSet& ps,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// Enumerate all k-subsets of {0,...,n-1} in lexicographic order, invoking
// visit(subset).  Shared by the census and general-position scans.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace hst
