#pragma once

#include <cstddef>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg {

/**
 * Instance built from a centerpoint query (P, c) in R^d: P embedded at
 * x_{d+1} = 0 plus a gadget T of 2(t+1) points on the vertical line through
 * (c, 0), at heights -1..-(t+1) (T^-) and +1..+(t+1) (T^+), where
 * t = ceil(|P| / (d+1)) - 1. The 2-partition {P, T} is t-tolerant iff c is a
 * centerpoint of P.
 */
struct ReducedInstance {
  PointSet lifted_points;
  IndexedPartition partition;  // {embedded P ids, gadget ids}
  std::size_t t = 0;
  std::vector<PointId> gadget_minus_ids;
  std::vector<PointId> gadget_plus_ids;
};

/// Gadget ids start above the largest id of P. Throws DimensionError if c and
/// P differ in dimension and InsufficientPointsError for an empty P.
ReducedInstance center_to_tolerant_instance(const PointSet& points, const Point& c);

}  // namespace tverberg
