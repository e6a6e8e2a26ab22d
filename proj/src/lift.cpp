#include "tverberg/lift.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "tverberg/error.hpp"
#include "tverberg/tverberg_1d.hpp"

namespace tverberg {

PairProjection halve_and_pair(const PointSet& points) {
  const std::size_t d = points.dim();
  if (d < 2) throw DimensionError("halving needs d >= 2");
  const std::size_t n = points.size();
  if (n < 2) throw InsufficientPointsError("halving needs at least 2 points");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return last_axis_order(points[a], points[b]) < 0; });

  const std::size_t half = n / 2;
  const std::size_t axis = d - 1;
  const auto height = [&](std::size_t rank) -> const Scalar& { return points[order[rank]].coords[axis]; };

  PairProjection out;
  if (n % 2 == 1) {
    out.halving_value = height(half);
    out.dropped_ids.push_back(points[order[half]].id);
  } else {
    out.halving_value = (height(half - 1) + height(half)) / 2;
  }

  std::vector<Point> projected;
  projected.reserve(half);
  out.pairs.reserve(half);
  for (std::size_t i = 0; i < half; ++i) {
    const Point& minus = points[order[i]];
    const Point& plus = points[order[n - half + i]];
    out.pairs.emplace_back(minus.id, plus.id);

    // If the whole segment lies in the hyperplane every point of it is a
    // valid crossing; take the midpoint.
    Scalar lambda(1, 2);
    const Scalar rise = plus.coords[axis] - minus.coords[axis];
    if (rise != 0) lambda = (out.halving_value - minus.coords[axis]) / rise;

    Point q;
    q.id = static_cast<PointId>(i);
    q.coords.reserve(axis);
    for (std::size_t k = 0; k < axis; ++k) {
      q.coords.push_back(minus.coords[k] + lambda * (plus.coords[k] - minus.coords[k]));
    }
    projected.push_back(std::move(q));
  }
  out.projected = PointSet(axis, std::move(projected));
  return out;
}

IndexedPartition lift_partition(const PairProjection& projection,
                                const IndexedPartition& projected_partition) {
  if (!validate_partition(projection.projected, projected_partition)) throw InvalidPartitionError();

  IndexedPartition out;
  out.parts.resize(projected_partition.size());
  for (std::size_t j = 0; j < projected_partition.size(); ++j) {
    for (PointId q : projected_partition.parts[j]) {
      const auto& [minus, plus] = projection.pairs.at(static_cast<std::size_t>(q));
      out.parts[j].push_back(minus);
      out.parts[j].push_back(plus);
    }
  }
  auto& sink = out.parts[out.parts.size() >= 2 ? 1 : 0];
  sink.insert(sink.end(), projection.dropped_ids.begin(), projection.dropped_ids.end());
  return out;
}

std::optional<std::size_t> lifted_points_needed(std::size_t dim, std::size_t m, std::size_t t) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (dim == 0 || m == 0) return std::nullopt;
  if (t > kMax - 2 || kMax / m < t + 2) return std::nullopt;
  std::size_t needed = m * (t + 2) - 1;
  for (std::size_t k = 1; k < dim; ++k) {
    if (needed > kMax / 2) return std::nullopt;
    needed *= 2;
  }
  return needed;
}

namespace {

LiftResult lift_recursive(const PointSet& points, std::size_t m) {
  if (points.dim() == 1) {
    OneDResult base = tolerant_tverberg_1d(points, m);
    return {std::move(base.partition), base.achieved_tolerance};
  }
  const PairProjection projection = halve_and_pair(points);
  LiftResult below = lift_recursive(projection.projected, m);
  return {lift_partition(projection, below.partition), below.achieved_tolerance};
}

}  // namespace

LiftResult tolerant_tverberg_lifted(const PointSet& points, std::size_t m, std::size_t t) {
  if (m == 0) throw Error("partition size m must be positive");
  const auto needed = lifted_points_needed(points.dim(), m, t);
  if (!needed || points.size() < *needed) {
    throw InsufficientPointsError("need 2^{d-1}(m(t+2)-1) points" +
                                  (needed ? " (" + std::to_string(*needed) + ")" : std::string()));
  }
  return lift_recursive(points, m);
}

}  // namespace tverberg
