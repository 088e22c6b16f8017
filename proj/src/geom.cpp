#include "hst/geom.hpp"

#include <algorithm>
#include <set>

#include "hst/error.hpp"

namespace hst {
namespace {

void check_tuple(const PointSet& ps, const std::vector<std::size_t>& tuple,
                 std::size_t expected) {
  if (tuple.size() != expected)
    throw InvalidArgument("expected " + std::to_string(expected) +
                          " indices, got " + std::to_string(tuple.size()));
  std::set<std::size_t> seen;
  for (std::size_t i : tuple) {
    if (i >= ps.size())
      throw InvalidArgument("point index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second)
      throw InvalidArgument("repeated point index " + std::to_string(i));
    if (ps.points[i].coords.size() != std::size_t(ps.d))
      throw InvalidArgument("point dimension mismatch at index " + std::to_string(i));
  }
}

// Sign of det(M) for a square rational matrix, by Gaussian elimination.
int det_sign(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  int sign = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    if (m[col][col] < 0) sign = -sign;
    for (std::size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t c = col + 1; c < k; ++c) m[row][c] -= f * m[col][c];
      m[row][col] = 0;
    }
  }
  return sign;
}

// Determinant (value, not just sign) for the cofactor expansion.
Rational det_value(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t c = col + 1; c < k; ++c) m[row][c] -= f * m[col][c];
      m[row][col] = 0;
    }
  }
  return det;
}

}  // namespace

int orientation(const PointSet& ps, const std::vector<std::size_t>& tuple) {
  check_tuple(ps, tuple, std::size_t(ps.d) + 1);
  const std::size_t k = tuple.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (int c = 0; c < ps.d; ++c) m[r][c] = ps.points[tuple[r]].coords[c];
    m[r][ps.d] = 1;
  }
  return det_sign(std::move(m));
}

std::vector<Rational> hyperplane_functional(const PointSet& ps,
                                            const std::vector<std::size_t>& pivots) {
  check_tuple(ps, pivots, std::size_t(ps.d));
  const std::size_t d = std::size_t(ps.d);
  // Cofactor expansion of the homogeneous determinant along its last row:
  // eval(x) = sum_j coeff[j]*x_j + coeff[d], with coeff[j] the signed minor
  // obtained by deleting column j.
  std::vector<Rational> coeffs(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<std::vector<Rational>> minor(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c <= d; ++c) {
        if (c == j) continue;
        minor[r][cc++] = (c < d) ? ps.points[pivots[r]].coords[c] : Rational(1);
      }
    }
    const int sgn = ((d + j) % 2 == 0) ? 1 : -1;  // (-1)^{(d+1)+(j+1)}
    coeffs[j] = sgn * det_value(std::move(minor));
  }
  return coeffs;
}

Split classify_split(const PointSet& ps, const std::vector<std::size_t>& pivots) {
  if (ps.size() < std::size_t(ps.d))
    throw InvalidArgument("need at least d points");
  const auto coeffs = hyperplane_functional(ps, pivots);
  std::vector<bool> is_pivot(ps.size(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Split out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (is_pivot[i]) continue;
    Rational v = coeffs[ps.d];
    for (int c = 0; c < ps.d; ++c) v += coeffs[c] * ps.points[i].coords[c];
    if (v > 0)
      out.left.push_back(i);
    else if (v < 0)
      out.right.push_back(i);
    else
      throw DegenerateInput("point " + std::to_string(i) +
                            " lies on the pivot hyperplane");
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    // advance to the next k-combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_general_position(const PointSet& ps, std::uint64_t budget) {
  const std::size_t n = ps.size();
  const std::size_t k = std::size_t(ps.d) + 1;
  if (n < k) return true;
  const BigInt count = binomial(long(n), long(k));
  if (count > BigInt(budget))
    throw BudgetExceeded("general-position scan needs " + count.str() +
                         " orientation tests, budget " + std::to_string(budget));
  bool ok = true;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& tuple) {
    if (ok && orientation(ps, tuple) == 0) ok = false;
  });
  return ok;
}

}  // namespace hst
