#include "tverberg/reduction.hpp"

#include <algorithm>

#include "tverberg/error.hpp"
#include "tverberg/verify.hpp"

namespace tverberg {

ReducedInstance center_to_tolerant_instance(const PointSet& points, const Point& c) {
  if (c.dim() != points.dim()) throw DimensionError("candidate center and point set differ in dimension");
  if (points.empty()) throw InsufficientPointsError("reduction needs at least one point");

  const std::size_t d = points.dim();
  ReducedInstance out;
  out.t = centerpoint_depth(points.size(), d) - 1;

  std::vector<Point> lifted;
  lifted.reserve(points.size() + 2 * (out.t + 1));
  IndexedPartition partition;
  partition.parts.resize(2);
  for (const Point& p : points.points()) {
    Point q = p;
    q.coords.emplace_back(0);
    lifted.push_back(std::move(q));
    partition.parts[0].push_back(p.id);
  }

  const auto ids = points.ids();
  PointId next_id = *std::max_element(ids.begin(), ids.end()) + 1;
  const auto add_gadget = [&](long height, std::vector<PointId>& side) {
    Point g{next_id++, c.coords};
    g.coords.emplace_back(height);
    side.push_back(g.id);
    partition.parts[1].push_back(g.id);
    lifted.push_back(std::move(g));
  };
  for (std::size_t k = 1; k <= out.t + 1; ++k) add_gadget(-static_cast<long>(k), out.gadget_minus_ids);
  for (std::size_t k = 1; k <= out.t + 1; ++k) add_gadget(static_cast<long>(k), out.gadget_plus_ids);

  out.lifted_points = PointSet(d + 1, std::move(lifted));
  out.partition = std::move(partition);
  return out;
}

}  // namespace tverberg
