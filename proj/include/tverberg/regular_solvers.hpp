#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tverberg/geometry.hpp"

namespace tverberg {

/**
 * Uniform interface to a Tverberg solver: for any P of dimension d with
 * |P| >= points_needed(m, d), solve(P, m) returns a Tverberg m-partition of
 * P with tolerance at least guaranteed_tolerance (nullopt only for solvers
 * that may legitimately fail, i.e. the brute-force search).
 */
struct SolverContract {
  std::string name;
  std::function<std::size_t(std::size_t m, std::size_t dim)> points_needed;
  std::size_t guaranteed_tolerance = 0;
  std::function<std::optional<IndexedPartition>(const PointSet&, std::size_t m)> solve;
};

inline constexpr std::size_t kBruteForceCap = 12;

/**
 * First partition of P into exactly m nonempty parts, in restricted-growth
 * string order over the point order of P, whose hulls share a point.
 * nullopt if none exists (in particular if |P| < m). Throws
 * BudgetExceededError ("instance too large for brute force") if |P| > cap.
 */
std::optional<IndexedPartition> brute_force_tverberg(const PointSet& points, std::size_t m,
                                                     std::size_t cap = kBruteForceCap);

/// Interleaving construction with t = 0; needs 2m - 1 points on the line.
IndexedPartition solver_1d_regular(const PointSet& points, std::size_t m);

/// Lifting construction with t = 0; needs 2^{d-1}(2m - 1) points.
IndexedPartition solver_lifted_regular(const PointSet& points, std::size_t m);

/// Registered solvers: "brute", "1d", "lift".
std::span<const SolverContract> registered_solvers();
/// Throws Error for an unknown name.
const SolverContract& solver_by_name(std::string_view name);

/**
 * Published approximation algorithms for regular Tverberg partitions and
 * the tolerance the block-merging driver yields with them. Not implemented
 * here; the rows document where such a solver would plug in.
 */
struct PublishedSolverRow {
  std::string_view algorithm;
  std::string_view tolerance;
  std::string_view running_time;
  std::size_t (*points_needed)(std::size_t m, std::size_t dim);
};

std::span<const PublishedSolverRow> published_solver_rows();

}  // namespace tverberg
