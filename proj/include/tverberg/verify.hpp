#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg {

struct VerifyOptions {
  /// Largest number of removal sets one enumeration level may visit.
  std::uint64_t budget = 1'000'000;
  /// Worker threads for removal-set enumeration. Results do not depend on it.
  unsigned threads = 1;
};

enum class ToleranceStatus { tolerant, refuted };

struct ToleranceVerdict {
  ToleranceStatus status = ToleranceStatus::tolerant;
  /// Present iff refuted; the lexicographically smallest separating set.
  std::optional<RemovalSet> witness_removal;
  /// Common point found for the last removal set checked, when tolerant.
  std::optional<std::vector<Scalar>> certificate;

  bool tolerant() const { return status == ToleranceStatus::tolerant; }
};

/// Common point of the hulls of the parts after deleting `removed`, or
/// nullopt if the removal separates them (including emptying a part).
std::optional<std::vector<Scalar>> common_point_after_removal(const PointSet& points,
                                                              const IndexedPartition& partition,
                                                              const RemovalSet& removed);

/**
 * Decides whether T stays a Tverberg partition after deleting any t points.
 *
 * Removal sets of size exactly min(t, |P|) are tried in lexicographic order
 * of the sorted ids; a smaller separating set extends to a separating set of
 * that size because hulls only shrink. If t >= the smallest part size, the
 * verdict is immediate: the smallest part, padded with the smallest other
 * ids, is returned as witness.
 *
 * Throws InvalidPartitionError if T is not a partition of P and
 * BudgetExceededError ("instance too large") when C(|P|, t) > budget.
 */
ToleranceVerdict verify_tolerance(const PointSet& points, const IndexedPartition& partition, std::size_t t,
                                  const VerifyOptions& options = {});

/// Largest t for which verify_tolerance is tolerant; -1 if T is not a
/// Tverberg partition at all.
long exact_tolerance(const PointSet& points, const IndexedPartition& partition,
                     const VerifyOptions& options = {});

/// Tukey depth of c: the size of the smallest R with c outside conv(P \ R).
std::size_t tukey_depth(const Point& c, const PointSet& points, const VerifyOptions& options = {});

/// depth(c, P) >= k, checked with removal sets of size exactly k - 1.
bool depth_at_least(const Point& c, const PointSet& points, std::size_t k, const VerifyOptions& options = {});

/// Centerpoint threshold ceil(n / (d + 1)).
std::size_t centerpoint_depth(std::size_t n, std::size_t dim);

bool is_centerpoint(const Point& c, const PointSet& points, const VerifyOptions& options = {});

}  // namespace tverberg
