#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tverberg/geometry.hpp"

namespace tverberg {

struct GeneratorOptions {
  std::size_t n = 10;
  std::size_t dim = 2;
  /// Numerators are drawn uniformly from [-grid, grid].
  std::int64_t grid = 100;
  std::int64_t denominator = 1;
  std::uint64_t seed = 0x7e4be46;
  /// First id; points get ids first_id, first_id + 1, ...
  PointId first_id = 1;
};

/// True iff the points (at most d+1 of them) are affinely independent.
bool affinely_independent(std::span<const PointRef> points);

/**
 * Seeded random points with rational coordinates num/denominator, in
 * general position: no d+1 of them on a common hyperplane (distinct values
 * for d = 1). Candidates that break general position are rejected and
 * redrawn. Throws Error if the grid is too small to place n points.
 */
PointSet random_general_position(const GeneratorOptions& options);

}  // namespace tverberg
