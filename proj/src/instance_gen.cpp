#include "tverberg/instance_gen.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tverberg/combinatorics.hpp"
#include "tverberg/error.hpp"

namespace tverberg {

bool affinely_independent(std::span<const PointRef> points) {
  if (points.size() <= 1) return true;
  const std::size_t d = points.front().get().dim();
  if (points.size() > d + 1) return false;

  // Rank of the difference vectors must be |points| - 1.
  const std::size_t count = points.size() - 1;
  std::vector<std::vector<Scalar>> rows(count, std::vector<Scalar>(d));
  const Point& origin = points[0];
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < d; ++k) rows[i][k] = points[i + 1].get().coords[k] - origin.coords[k];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < count; ++col) {
    std::size_t pivot = rank;
    while (pivot < count && rows[pivot][col] == 0) ++pivot;
    if (pivot == count) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < count; ++r) {
      if (rows[r][col] == 0) continue;
      const Scalar factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < d; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank == count;
}

PointSet random_general_position(const GeneratorOptions& options) {
  if (options.dim == 0) throw DimensionError("dimension must be positive");
  if (options.grid < 1 || options.denominator < 1) throw Error("grid and denominator must be positive");

  std::mt19937_64 rng(options.seed);
  const auto span = static_cast<std::uint64_t>(2 * options.grid + 1);
  const auto draw = [&] {
    const auto numerator = static_cast<std::int64_t>(rng() % span) - options.grid;
    return Scalar(numerator, options.denominator);
  };

  constexpr int kMaxAttempts = 10000;
  std::vector<Point> points;
  points.reserve(options.n);
  for (std::size_t i = 0; i < options.n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      Point candidate{options.first_id + static_cast<PointId>(i), {}};
      for (std::size_t k = 0; k < options.dim; ++k) candidate.coords.push_back(draw());

      // Every d-subset of the placed points plus the candidate must span.
      placed = for_each_combination(points.size(), std::min(points.size(), options.dim), [&](std::span<const std::size_t> chosen) {
        PointRefs simplex;
        for (std::size_t c : chosen) simplex.emplace_back(points[c]);
        simplex.emplace_back(candidate);
        return affinely_independent(simplex);
      });
      if (placed) points.push_back(std::move(candidate));
    }
    if (!placed) throw Error("could not place point " + std::to_string(i) + " in general position; enlarge the grid");
  }
  return PointSet(options.dim, std::move(points));
}

}  // namespace tverberg
