#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "tverberg/geometry.hpp"
#include "tverberg/regular_solvers.hpp"

namespace tverberg {

/// A Tverberg m-partition of one block together with its known tolerance.
struct MergeBlock {
  PointSet points;
  IndexedPartition partition;
  std::size_t tolerance = 0;
};

struct MergeResult {
  PointSet points;  // union of the block point sets, block order
  IndexedPartition partition;
  std::size_t tolerance = 0;  // sum of block tolerances + k - 1
};

/**
 * Part j of the result is the union of part j of every block. With k blocks
 * of tolerances t_1..t_k the result has tolerance t_1 + ... + t_k + k - 1.
 *
 * Throws IncompatibleBlocksError for no blocks, differing part counts or
 * dimensions, overlapping ids, or a block partition that is not a
 * partition of its points.
 */
MergeResult merge_partitions(std::span<const MergeBlock> blocks);

struct ChunkOptions {
  /// Shuffle P with this seed before cutting it into blocks.
  std::optional<std::uint64_t> shuffle_seed;
};

struct ChunkResult {
  IndexedPartition partition;
  std::size_t tolerance = 0;
  std::size_t blocks = 0;
  std::size_t m = 0;
};

/**
 * Cuts P (in input order, or shuffled) into k = floor(|P| / n_A(m)) blocks,
 * the first k-1 of size n_A(m) and the last taking the rest, solves each
 * block with `solver` and merges. Guaranteed tolerance k - 1 plus the sum of
 * the solver's per-block guarantees.
 *
 * Throws InsufficientPointsError ("too few points for one block") when
 * |P| < n_A(m) and Error if the solver fails on a block.
 */
ChunkResult chunk_and_merge(const PointSet& points, std::size_t m, const SolverContract& solver,
                            const ChunkOptions& options = {});

/**
 * Targets a tolerance instead of a part count: cuts P into t+1 blocks of at
 * least b = floor(|P| / (t+1)) points (the last takes the rest), uses
 * m = ceil(b / (d+1)) parts, solves and merges. The merged partition is
 * t-tolerant. Throws InsufficientPointsError if the solver needs more than b
 * points for m parts.
 */
ChunkResult merge_for_tolerance(const PointSet& points, std::size_t t, const SolverContract& solver);

/// Fisher-Yates over a 64-bit Mersenne twister; identical on every platform.
std::vector<Point> seeded_shuffle(std::vector<Point> points, std::uint64_t seed);

}  // namespace tverberg
