#include "tverberg/tverberg_1d.hpp"

#include <algorithm>
#include <numeric>

#include "tverberg/error.hpp"
#include "tverberg/selection.hpp"

namespace tverberg {

std::optional<std::size_t> max_tolerance_1d(std::size_t n, std::size_t m) {
  if (m == 0) return std::nullopt;
  const std::size_t groups = (n + 1) / m;
  if (groups < 2) return std::nullopt;
  return groups - 2;
}

OneDResult tolerant_tverberg_1d(const PointSet& points, std::size_t m) {
  if (points.dim() != 1) throw DimensionError("tolerant_tverberg_1d needs a 1-D point set");
  if (m == 0) throw Error("partition size m must be positive");
  const auto tolerance = max_tolerance_1d(points.size(), m);
  if (!tolerance) throw InsufficientPointsError("too few points");

  using Index = std::size_t;
  const auto less = [&](Index a, Index b) { return total_order_1d(points[a], points[b]) < 0; };
  const auto split = [&](std::vector<Index>& items, Index pivot, std::vector<Index>& below,
                         std::vector<Index>& above) {
    for (Index i : items) {
      if (less(i, pivot)) {
        below.push_back(i);
      } else if (less(pivot, i)) {
        above.push_back(i);
      }
    }
  };

  std::vector<Index> core(points.size());
  std::iota(core.begin(), core.end(), Index{0});
  std::vector<Index> surplus;
  const std::size_t core_size = m * (*tolerance + 2) - 1;
  if (core_size < points.size()) {
    const Index last_core = select_kth(core, core_size, less);
    std::vector<Index> below;
    split(core, last_core, below, surplus);
    below.push_back(last_core);
    core = std::move(below);
    std::sort(surplus.begin(), surplus.end(), less);
  }

  std::size_t r = m;
  while (2 * r <= core.size()) r *= 2;

  // Q holds the still-unsplit runs, ordered left to right.
  std::vector<std::vector<Index>> runs;
  runs.push_back(std::move(core));
  std::vector<Index> first_part;
  while (r >= m) {
    std::vector<std::vector<Index>> next;
    next.reserve(2 * runs.size());
    for (auto& run : runs) {
      if (run.size() < r) {
        next.push_back(std::move(run));
        continue;
      }
      const Index pivot = select_kth(run, r, less);
      std::vector<Index> below;
      std::vector<Index> above;
      split(run, pivot, below, above);
      next.push_back(std::move(below));
      next.push_back(std::move(above));
      first_part.push_back(pivot);
    }
    runs = std::move(next);
    if (r == m) break;
    r /= 2;
  }
  std::sort(first_part.begin(), first_part.end(), less);

  std::vector<std::vector<Index>> parts(m);
  parts[0] = std::move(first_part);
  for (auto& run : runs) {
    std::sort(run.begin(), run.end(), less);
    // Every run is a gap of exactly m - 1 points.
    for (std::size_t j = 0; j < run.size(); ++j) parts[1 + j].push_back(run[j]);
  }
  for (std::size_t s = 0; s < surplus.size(); ++s) parts[1 + s % (m - 1)].push_back(surplus[s]);

  OneDResult result;
  result.achieved_tolerance = *tolerance;
  result.partition.parts.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (Index i : parts[j]) result.partition.parts[j].push_back(points[i].id);
  }
  return result;
}

}  // namespace tverberg
