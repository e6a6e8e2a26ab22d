#include "tverberg/selection.hpp"

#include <numeric>

#include "tverberg/error.hpp"

namespace tverberg {

Point select(std::span<const Point> points, std::size_t k) {
  for (const Point& p : points) {
    if (p.dim() != 1) throw DimensionError("select needs 1-D points");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto index = select_kth(std::move(order), k, [&](std::size_t a, std::size_t b) {
    return total_order_1d(points[a], points[b]) < 0;
  });
  return points[index];
}

}  // namespace tverberg
