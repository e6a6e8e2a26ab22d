#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg {

struct LinearEquality {
  std::vector<Scalar> coefficients;
  Scalar rhs;
};

/// Feasibility problem: A x = b with x_j >= 0 for j in nonneg_vars and the
/// other variables free.
struct LPProblem {
  std::size_t num_vars = 0;
  std::vector<LinearEquality> equalities;
  std::vector<std::size_t> nonneg_vars;
};

enum class LPStatus { feasible, infeasible };

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  std::vector<Scalar> witness;  // one value per variable when feasible

  bool feasible() const { return status == LPStatus::feasible; }
};

/**
 * Exact phase-1 simplex over the rationals with Bland's rule. Free variables
 * are split into a difference of two nonnegative ones and one artificial
 * variable is added per row. Every feasible witness is re-checked by
 * substitution before it is returned.
 *
 * Throws ShapeError for a row whose length differs from num_vars or a
 * nonneg index out of range.
 */
LPOutcome lp_feasible(const LPProblem& problem);

/// True iff the assignment satisfies every equality and sign constraint.
bool satisfies(const LPProblem& problem, std::span<const Scalar> assignment);

/**
 * LP for a common point of the convex hulls of `sets`:
 *   per set i:  sum_j a_ij p_ij - x = 0,  sum_j a_ij = 1,  a_ij >= 0
 * with x in R^dim free. Variables are ordered set by set, then x.
 */
LPProblem common_point_problem(std::span<const PointRefs> sets, std::size_t dim);

/**
 * A point in the intersection of the convex hulls of all `sets`, or nullopt
 * if the intersection is empty. Any empty set makes the intersection empty.
 * Throws DimensionError if a point's dimension differs from `dim`.
 */
std::optional<std::vector<Scalar>> common_intersection_point(std::span<const PointRefs> sets,
                                                             std::size_t dim);
std::optional<std::vector<Scalar>> common_intersection_point(
    std::span<const std::vector<Point>> sets, std::size_t dim);

/// True iff c is a convex combination of `hull`. False for an empty hull.
bool point_in_hull(std::span<const Scalar> c, const PointRefs& hull);
bool point_in_hull(const Point& c, std::span<const Point> hull);

}  // namespace tverberg
