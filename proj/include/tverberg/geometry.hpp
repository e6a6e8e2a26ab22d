#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tverberg/scalar.hpp"

namespace tverberg {

using PointId = std::int64_t;

struct Point {
  PointId id = 0;
  std::vector<Scalar> coords;

  std::size_t dim() const { return coords.size(); }
  bool operator==(const Point&) const = default;
};

/// Non-owning view of a point; the referenced PointSet must outlive it.
using PointRef = std::reference_wrapper<const Point>;
using PointRefs = std::vector<PointRef>;

/**
 * An ordered list of points of a common dimension with distinct ids.
 * Immutable after construction.
 */
class PointSet {
 public:
  PointSet() = default;
  /// Throws DimensionError on dim == 0 or a coordinate-length mismatch and
  /// Error on a duplicate id.
  PointSet(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t index) const { return points_[index]; }

  bool contains(PointId id) const { return index_.contains(id); }
  /// Throws Error for an unknown id.
  const Point& at(PointId id) const;
  std::size_t index_of(PointId id) const;

  std::vector<PointId> ids() const;
  /// Ids in ascending numeric order.
  std::vector<PointId> sorted_ids() const;

  /// Points with the given ids, in the order the ids are listed.
  PointSet subset(std::span<const PointId> ids) const;

 private:
  std::size_t dim_ = 1;
  std::vector<Point> points_;
  std::unordered_map<PointId, std::size_t> index_;
};

/// A partition of a point set into m nonempty parts, by point id.
struct IndexedPartition {
  std::vector<std::vector<PointId>> parts;

  std::size_t size() const { return parts.size(); }
  bool operator==(const IndexedPartition&) const = default;
};

/// Ids removed from a point set, kept sorted ascending.
struct RemovalSet {
  std::vector<PointId> ids;

  std::size_t size() const { return ids.size(); }
  bool contains(PointId id) const;
  bool operator==(const RemovalSet&) const = default;
};

/// True iff T has at least one part, every part is nonempty, the parts are
/// pairwise disjoint and together cover exactly the ids of P.
bool validate_partition(const PointSet& points, const IndexedPartition& partition);

/// Strict total order on 1-D points: coordinate first, then id.
/// Throws DimensionError unless both points are 1-D.
std::strong_ordering total_order_1d(const Point& a, const Point& b);

/// Strict total order used for halving along the last axis:
/// (x_d, x_{d-1}, ..., x_1, id) lexicographically.
std::strong_ordering last_axis_order(const Point& a, const Point& b);

/// The points of every part, optionally skipping removed ids.
std::vector<PointRefs> part_points(const PointSet& points, const IndexedPartition& partition,
                                   const RemovalSet* removed = nullptr);

}  // namespace tverberg
