#pragma once

#include <cstdint>
#include <vector>

#include "hst/geom.hpp"
#include "hst/rational.hpp"

namespace hst {

// Exact counts of oriented d-subsets by the number of points in their
// positive open halfspace.  Each unordered subset contributes both
// orientations, so the table sums to 2*C(n, d).
struct SplitCensus {
  std::size_t n = 0;
  int d = 0;
  std::vector<BigInt> table;  // index k = 0..n-d

  BigInt total() const;  // == 2*C(n, d)
};

enum class TailVariant { Randomized, Larger };

// Full enumeration of all d-subsets.  Throws BudgetExceeded when C(n, d)
// exceeds the budget and DegenerateInput on a point lying on a pivot
// hyperplane.
SplitCensus census(const PointSet& ps,
                   std::uint64_t budget = kDefaultEnumerationBudget);

// Exact P(N >= x) over a uniform pivot subset.  Randomized: N is one of the
// two sides with a fair coin; Larger: N = max side.
Rational larger_side_tail(const SplitCensus& cs, const Rational& x,
                          TailVariant variant);

// f_{d-1}(C_n^d) = C(n - floor((d+1)/2), n-d) + C(n - floor((d+2)/2), n-d).
BigInt cyclic_facet_count(std::size_t n, int d);

// For n = d+2: exact probability over the C(d+2, d) pivot choices that the
// two leftover points land on the same side.
Rational same_side_probability(const PointSet& ps);

// For n = d+2: true iff no point lies inside the simplex of the others.
bool is_convex_position_dplus2(const PointSet& ps);

// ----- exact-rational forms of the closed-form bounds, for verification ----

// Balance lemma: P(N >= (n-d)/2 + x) <= V/(V + x^2), V = (n-d)/4 +
// (n-d)^2/(4(d+1)).
Rational balance_bound_exact(std::size_t n, int d, const Rational& x);

// Simplified balance lemma: P(N/n >= x) <= min(1/2, 1/(1+4(d+1)(x-1/2)^2))
// for x > 1/2.
Rational simplified_balance_bound_exact(int d, const Rational& x);

}  // namespace hst
