#include "hst/facets.hpp"

#include <algorithm>

#include "hst/error.hpp"

namespace hst {

BigInt SplitCensus::total() const {
  BigInt s = 0;
  for (const BigInt& c : table) s += c;
  return s;
}

SplitCensus census(const PointSet& ps, std::uint64_t budget) {
  const std::size_t n = ps.size();
  const int d = ps.d;
  if (n < std::size_t(d)) throw InvalidArgument("census: n >= d required");
  const BigInt subsets = binomial(long(n), long(d));
  if (subsets > BigInt(budget))
    throw BudgetExceeded("census needs " + subsets.str() +
                         " subsets, budget " + std::to_string(budget));
  SplitCensus cs;
  cs.n = n;
  cs.d = d;
  cs.table.assign(n - std::size_t(d) + 1, BigInt(0));
  for_each_subset(n, std::size_t(d), [&](const std::vector<std::size_t>& subset) {
    const Split s = classify_split(ps, subset);
    cs.table[s.left.size()] += 1;   // positive orientation
    cs.table[s.right.size()] += 1;  // reversed orientation
  });
  return cs;
}

Rational larger_side_tail(const SplitCensus& cs, const Rational& x,
                          TailVariant variant) {
  if (x < 0) throw InvalidArgument("larger_side_tail: x >= 0");
  const std::size_t r = cs.n - std::size_t(cs.d);
  BigInt hits = 0;
  for (std::size_t k = 0; k <= r; ++k) {
    const std::size_t side =
        (variant == TailVariant::Larger) ? std::max(k, r - k) : k;
    if (Rational(side) >= x) hits += cs.table[k];
  }
  // oriented entries pair up each unordered subset twice
  return Rational(hits, 2 * binomial(long(cs.n), long(cs.d)));
}

BigInt cyclic_facet_count(std::size_t n, int d) {
  if (n < std::size_t(d) + 1) throw InvalidArgument("cyclic_facet_count: n >= d+1");
  const long nn = long(n), dd = long(d);
  return binomial(nn - (dd + 1) / 2, nn - dd) + binomial(nn - (dd + 2) / 2, nn - dd);
}

Rational same_side_probability(const PointSet& ps) {
  const int d = ps.d;
  if (ps.size() != std::size_t(d) + 2)
    throw InvalidArgument("same_side_probability: n must equal d+2");
  BigInt same = 0;
  for_each_subset(ps.size(), std::size_t(d), [&](const std::vector<std::size_t>& subset) {
    const Split s = classify_split(ps, subset);
    if (s.left.size() == 2 || s.right.size() == 2) same += 1;
  });
  return Rational(same, binomial(long(d) + 2, long(d)));
}

bool is_convex_position_dplus2(const PointSet& ps) {
  const int d = ps.d;
  if (ps.size() != std::size_t(d) + 2)
    throw InvalidArgument("is_convex_position_dplus2: n must equal d+2");
  // Some point inside the simplex of the others <=> not convex position.
  for (std::size_t inner = 0; inner < ps.size(); ++inner) {
    std::vector<std::size_t> simplex;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (i != inner) simplex.push_back(i);
    // `inner` is inside iff replacing each vertex in turn preserves the
    // orientation of the whole simplex.
    const int base = orientation(ps, simplex);
    if (base == 0) throw DegenerateInput("degenerate simplex");
    bool inside = true;
    for (std::size_t v = 0; v < simplex.size() && inside; ++v) {
      std::vector<std::size_t> tuple = simplex;
      tuple[v] = inner;
      if (orientation(ps, tuple) != base) inside = false;
    }
    if (inside) return false;
  }
  return true;
}

Rational balance_bound_exact(std::size_t n, int d, const Rational& x) {
  if (n < std::size_t(d) + 1) throw InvalidArgument("balance_bound: n >= d+1");
  if (x < 0) throw InvalidArgument("balance_bound: x >= 0");
  const Rational r(n - std::size_t(d));
  const Rational v = r / 4 + r * r / (4 * (d + 1));
  return v / (v + x * x);
}

Rational simplified_balance_bound_exact(int d, const Rational& x) {
  if (x <= Rational(1, 2)) throw InvalidArgument("simplified_balance_bound: x > 1/2");
  const Rational dx = x - Rational(1, 2);
  const Rational body = Rational(1) / (1 + 4 * (d + 1) * dx * dx);
  return std::min(body, Rational(1, 2));
}

}  // namespace hst
