#pragma once

#include <cstddef>
#include <optional>

#include "tverberg/geometry.hpp"

namespace tverberg {

struct OneDResult {
  IndexedPartition partition;
  /// Tolerance guaranteed by construction, max_tolerance_1d(|P|, m).
  std::size_t achieved_tolerance = 0;
};

/// Largest t >= 0 with m(t+2) - 1 <= n, i.e. floor((n+1)/m) - 2, or nullopt
/// when n < 2m - 1 (no Tverberg m-partition exists on the line).
std::optional<std::size_t> max_tolerance_1d(std::size_t n, std::size_t m);

/**
 * Interleaving construction for points on a line.
 *
 * With n = m(t+2) - 1 points, part 0 receives the points whose rank is a
 * multiple of m (found by repeated splitting at selected ranks) and parts
 * 1..m-1 each receive one point from every gap between consecutive part-0
 * points, assigned in ascending order inside each gap. The result is
 * t-tolerant.
 *
 * Larger inputs: the m(t+2) - 1 smallest points form the core and the
 * remaining (fewer than m) points are appended round-robin to parts 1..m-1.
 *
 * Throws DimensionError unless P is 1-D and InsufficientPointsError
 * ("too few points") when |P| < 2m - 1.
 */
OneDResult tolerant_tverberg_1d(const PointSet& points, std::size_t m);

}  // namespace tverberg
