#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg {

/**
 * One halving step along the last axis x_d.
 *
 * Points are ordered by (x_d, x_{d-1}, ..., x_1, id). The lower floor(n/2)
 * points are paired with the upper floor(n/2) by rank on each side, and the
 * median of an odd-sized set is dropped. `projected` holds, for each pair i,
 * the first d-1 coordinates of the point where the segment between the pair
 * meets {x_d = halving_value}; its point ids are the pair indices 0..k-1.
 */
struct PairProjection {
  Scalar halving_value;
  std::vector<std::pair<PointId, PointId>> pairs;  // (minus, plus)
  PointSet projected;
  std::vector<PointId> dropped_ids;
};

/// Throws DimensionError for d < 2 and InsufficientPointsError for |P| < 2.
PairProjection halve_and_pair(const PointSet& points);

/**
 * Replaces each projected point by both endpoints of its pair. Dropped ids
 * are appended to part 1 (the second part) when there are at least two
 * parts, else to part 0. Throws InvalidPartitionError if `projected_partition`
 * is not a partition of `projection.projected`.
 */
IndexedPartition lift_partition(const PairProjection& projection,
                                const IndexedPartition& projected_partition);

struct LiftResult {
  IndexedPartition partition;
  /// Tolerance guaranteed by the 1-D base case; at least the requested t.
  std::size_t achieved_tolerance = 0;
};

/// Number of points 2^{d-1}(m(t+2)-1) the lifting construction needs, or
/// nullopt on overflow.
std::optional<std::size_t> lifted_points_needed(std::size_t dim, std::size_t m, std::size_t t);

/**
 * t-tolerant Tverberg m-partition by repeated halving down to the line,
 * the interleaving construction there, and lifting back up. Every point of
 * P ends up in the partition. Throws InsufficientPointsError
 * ("need 2^{d-1}(m(t+2)-1) points") when P is too small.
 */
LiftResult tolerant_tverberg_lifted(const PointSet& points, std::size_t m, std::size_t t);

}  // namespace tverberg
