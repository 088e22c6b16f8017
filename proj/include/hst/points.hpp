#pragma once

#include <cstdint>
#include <string>

#include "hst/geom.hpp"

namespace hst {

enum class RandomModel { UnitCube, Sphere };

// x_i = (i, i^2, ..., i^d) for i = 1..n, as exact integers.
PointSet moment_curve(std::size_t n, int d);

// Deterministic pseudo-random point set with dyadic rational coordinates of
// denominator 2^precision.  UnitCube draws each coordinate uniformly from
// [0, 1); Sphere (d >= 2) places points exactly on the unit sphere via the
// rational stereographic parametrization of a random dyadic vector.
//
// The result is checked with is_general_position when C(n, d+1) fits the
// budget; on a degenerate draw the generator retries with an incremented
// internal nonce (recorded in the label).
PointSet random_pointset(std::size_t n, int d, RandomModel model,
                         std::uint64_t seed, unsigned precision = 64,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// Text persistence.  Format: optional `# label: ...` comment, a `d n` header
// line, then n lines of d space-separated rationals (`p/q` or bare integer).
// load(save(ps)) == ps field for field.
void save_points(const PointSet& ps, const std::string& path);
PointSet load_points(const std::string& path);

std::string format_points(const PointSet& ps);
PointSet parse_points(const std::string& text);

}  // namespace hst
