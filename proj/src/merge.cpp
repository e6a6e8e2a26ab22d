#include "tverberg/merge.hpp"

#include <random>
#include <string>
#include <unordered_set>

#include "tverberg/error.hpp"

namespace tverberg {

MergeResult merge_partitions(std::span<const MergeBlock> blocks) {
  if (blocks.empty()) throw IncompatibleBlocksError("no blocks");
  const std::size_t m = blocks.front().partition.size();
  const std::size_t dim = blocks.front().points.dim();

  std::unordered_set<PointId> seen;
  std::vector<Point> all_points;
  MergeResult result;
  result.partition.parts.resize(m);
  std::size_t tolerance_sum = 0;
  for (const MergeBlock& block : blocks) {
    if (block.partition.size() != m) throw IncompatibleBlocksError("blocks have different part counts");
    if (block.points.dim() != dim) throw IncompatibleBlocksError("blocks have different dimensions");
    if (!validate_partition(block.points, block.partition)) {
      throw IncompatibleBlocksError("block partition does not partition its points");
    }
    for (const Point& p : block.points.points()) {
      if (!seen.insert(p.id).second) throw IncompatibleBlocksError("point id " + std::to_string(p.id) + " repeats");
      all_points.push_back(p);
    }
    for (std::size_t j = 0; j < m; ++j) {
      auto& part = result.partition.parts[j];
      part.insert(part.end(), block.partition.parts[j].begin(), block.partition.parts[j].end());
    }
    tolerance_sum += block.tolerance;
  }
  result.points = PointSet(dim, std::move(all_points));
  result.tolerance = tolerance_sum + blocks.size() - 1;
  return result;
}

std::vector<Point> seeded_shuffle(std::vector<Point> points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = points.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(points[i - 1], points[j]);
  }
  return points;
}

namespace {

/// Cuts `ordered` into blocks of block_size (the last takes the rest),
/// solves each and merges.
ChunkResult solve_blocks(const PointSet& points, const std::vector<Point>& ordered, std::size_t m,
                         std::size_t num_blocks, std::size_t block_size, const SolverContract& solver) {
  std::vector<MergeBlock> blocks;
  blocks.reserve(num_blocks);
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const auto first = ordered.begin() + static_cast<std::ptrdiff_t>(b * block_size);
    const auto last = b + 1 == num_blocks ? ordered.end() : first + static_cast<std::ptrdiff_t>(block_size);
    PointSet block(points.dim(), std::vector<Point>(first, last));
    auto partition = solver.solve(block, m);
    if (!partition) {
      throw Error("solver '" + solver.name + "' found no Tverberg " + std::to_string(m) + "-partition for block " +
                  std::to_string(b));
    }
    blocks.push_back({std::move(block), std::move(*partition), solver.guaranteed_tolerance});
  }
  MergeResult merged = merge_partitions(blocks);
  return {std::move(merged.partition), merged.tolerance, num_blocks, m};
}

}  // namespace

ChunkResult chunk_and_merge(const PointSet& points, std::size_t m, const SolverContract& solver,
                            const ChunkOptions& options) {
  if (m == 0) throw Error("partition size m must be positive");
  const std::size_t block_size = solver.points_needed(m, points.dim());
  if (block_size == 0 || points.size() < block_size) {
    throw InsufficientPointsError("too few points for one block: need " + std::to_string(block_size) + ", have " +
                                  std::to_string(points.size()));
  }
  std::vector<Point> ordered = points.points();
  if (options.shuffle_seed) ordered = seeded_shuffle(std::move(ordered), *options.shuffle_seed);
  return solve_blocks(points, ordered, m, points.size() / block_size, block_size, solver);
}

ChunkResult merge_for_tolerance(const PointSet& points, std::size_t t, const SolverContract& solver) {
  const std::size_t num_blocks = t + 1;
  const std::size_t block_size = points.size() / num_blocks;
  const std::size_t dim = points.dim();
  const std::size_t m = (block_size + dim) / (dim + 1);
  if (m == 0 || solver.points_needed(m, dim) > block_size) {
    throw InsufficientPointsError("too few points: blocks of " + std::to_string(block_size) + " points are too small for solver '" +
                                  solver.name + "'");
  }
  return solve_blocks(points, points.points(), m, num_blocks, block_size, solver);
}

}  // namespace tverberg
