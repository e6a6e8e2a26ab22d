#include "tverberg/hull_lp.hpp"

#include <stdexcept>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

/// Dense phase-1 tableau. Column layout: structural columns (free variables
/// contribute a positive and a negative column), then one artificial column
/// per row.
class Phase1Tableau {
 public:
  explicit Phase1Tableau(const LPProblem& problem)
      : rows_(problem.equalities.size()), num_vars_(problem.num_vars) {
    std::vector<bool> nonneg(num_vars_, false);
    for (std::size_t j : problem.nonneg_vars) nonneg[j] = true;

    positive_col_.resize(num_vars_);
    negative_col_.assign(num_vars_, kNoColumn);
    std::size_t col = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      positive_col_[j] = col++;
      if (!nonneg[j]) negative_col_[j] = col++;
    }
    structural_ = col;
    cols_ = structural_ + rows_;

    cells_.assign(rows_ * cols_, Scalar(0));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    reduced_.assign(cols_, Scalar(0));
    objective_ = 0;

    for (std::size_t i = 0; i < rows_; ++i) {
      const LinearEquality& eq = problem.equalities[i];
      const bool flip = eq.rhs < 0;
      for (std::size_t j = 0; j < num_vars_; ++j) {
        const Scalar& a = eq.coefficients[j];
        if (a == 0) continue;
        const Scalar v = flip ? Scalar(-a) : a;
        at(i, positive_col_[j]) = v;
        if (negative_col_[j] != kNoColumn) at(i, negative_col_[j]) = -v;
      }
      rhs_[i] = flip ? Scalar(-eq.rhs) : eq.rhs;
      at(i, structural_ + i) = 1;
      basis_[i] = structural_ + i;
      for (std::size_t c = 0; c < structural_; ++c) {
        if (at(i, c) != 0) reduced_[c] -= at(i, c);
      }
      objective_ -= rhs_[i];
    }
  }

  /// Runs Bland's rule to optimality. Returns true iff the artificial sum
  /// reaches zero.
  bool solve() {
    while (true) {
      std::size_t entering = kNoColumn;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (reduced_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (entering == kNoColumn) break;

      std::size_t leaving = kNoColumn;
      Scalar best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = at(i, entering);
        if (a <= 0) continue;
        Scalar ratio = rhs_[i] / a;
        if (leaving == kNoColumn || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // The phase-1 objective is bounded below by zero, so some row limits
      // every improving column.
      if (leaving == kNoColumn) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(leaving, entering);
    }
    return objective_ == 0;
  }

  std::vector<Scalar> witness() const {
    std::vector<Scalar> column_value(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) column_value[basis_[i]] = rhs_[i];
    std::vector<Scalar> out(num_vars_);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      out[j] = column_value[positive_col_[j]];
      if (negative_col_[j] != kNoColumn) out[j] -= column_value[negative_col_[j]];
    }
    return out;
  }

 private:
  static constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

  Scalar& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  void pivot(std::size_t row, std::size_t col) {
    const Scalar inverse = 1 / at(row, col);
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(row, c) != 0) {
        at(row, c) *= inverse;
        support.push_back(c);
      }
    }
    rhs_[row] *= inverse;

    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Scalar factor = at(i, col);
      for (std::size_t c : support) at(i, c) -= factor * at(row, c);
      rhs_[i] -= factor * rhs_[row];
    }
    if (reduced_[col] != 0) {
      const Scalar factor = reduced_[col];
      for (std::size_t c : support) reduced_[c] -= factor * at(row, c);
      objective_ -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t num_vars_;
  std::size_t structural_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> positive_col_;
  std::vector<std::size_t> negative_col_;
  std::vector<Scalar> cells_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Scalar> reduced_;
  Scalar objective_;  // minus the current artificial sum
};

void check_shape(const LPProblem& problem) {
  for (const auto& eq : problem.equalities) {
    if (eq.coefficients.size() != problem.num_vars) {
      throw ShapeError("row has " + std::to_string(eq.coefficients.size()) + " coefficients, expected " +
                       std::to_string(problem.num_vars));
    }
  }
  for (std::size_t j : problem.nonneg_vars) {
    if (j >= problem.num_vars) throw ShapeError("nonnegative variable index out of range");
  }
}

}  // namespace

bool satisfies(const LPProblem& problem, std::span<const Scalar> assignment) {
  if (assignment.size() != problem.num_vars) return false;
  for (std::size_t j : problem.nonneg_vars) {
    if (j >= assignment.size() || assignment[j] < 0) return false;
  }
  for (const auto& eq : problem.equalities) {
    Scalar lhs = 0;
    for (std::size_t j = 0; j < problem.num_vars; ++j) {
      if (eq.coefficients[j] != 0) lhs += eq.coefficients[j] * assignment[j];
    }
    if (lhs != eq.rhs) return false;
  }
  return true;
}

LPOutcome lp_feasible(const LPProblem& problem) {
  check_shape(problem);
  Phase1Tableau tableau(problem);
  LPOutcome outcome;
  if (!tableau.solve()) return outcome;
  outcome.status = LPStatus::feasible;
  outcome.witness = tableau.witness();
  if (!satisfies(problem, outcome.witness)) {
    throw std::logic_error("LP witness failed exact re-substitution");
  }
  return outcome;
}

LPProblem common_point_problem(std::span<const PointRefs> sets, std::size_t dim) {
  std::size_t num_alpha = 0;
  for (const auto& set : sets) {
    for (const Point& p : set) {
      if (p.dim() != dim) throw DimensionError("point " + std::to_string(p.id) + " has wrong dimension");
    }
    num_alpha += set.size();
  }

  LPProblem lp;
  lp.num_vars = num_alpha + dim;
  lp.nonneg_vars.reserve(num_alpha);
  for (std::size_t j = 0; j < num_alpha; ++j) lp.nonneg_vars.push_back(j);

  std::size_t offset = 0;
  for (const auto& set : sets) {
    for (std::size_t k = 0; k < dim; ++k) {
      LinearEquality row{std::vector<Scalar>(lp.num_vars, Scalar(0)), Scalar(0)};
      for (std::size_t j = 0; j < set.size(); ++j) row.coefficients[offset + j] = set[j].get().coords[k];
      row.coefficients[num_alpha + k] = -1;
      lp.equalities.push_back(std::move(row));
    }
    LinearEquality sum{std::vector<Scalar>(lp.num_vars, Scalar(0)), Scalar(1)};
    for (std::size_t j = 0; j < set.size(); ++j) sum.coefficients[offset + j] = 1;
    lp.equalities.push_back(std::move(sum));
    offset += set.size();
  }
  return lp;
}

std::optional<std::vector<Scalar>> common_intersection_point(std::span<const PointRefs> sets,
                                                             std::size_t dim) {
  const LPProblem lp = common_point_problem(sets, dim);
  for (const auto& set : sets) {
    if (set.empty()) return std::nullopt;
  }
  const LPOutcome outcome = lp_feasible(lp);
  if (!outcome.feasible()) return std::nullopt;
  const auto x = outcome.witness.end() - static_cast<std::ptrdiff_t>(dim);
  return std::vector<Scalar>(x, outcome.witness.end());
}

std::optional<std::vector<Scalar>> common_intersection_point(
    std::span<const std::vector<Point>> sets, std::size_t dim) {
  std::vector<PointRefs> refs;
  refs.reserve(sets.size());
  for (const auto& set : sets) refs.emplace_back(set.begin(), set.end());
  return common_intersection_point(std::span<const PointRefs>(refs), dim);
}

bool point_in_hull(std::span<const Scalar> c, const PointRefs& hull) {
  const std::size_t dim = c.size();
  for (const Point& p : hull) {
    if (p.dim() != dim) throw DimensionError("query point and hull differ in dimension");
  }
  if (hull.empty()) return false;

  LPProblem lp;
  lp.num_vars = hull.size();
  for (std::size_t j = 0; j < hull.size(); ++j) lp.nonneg_vars.push_back(j);
  for (std::size_t k = 0; k < dim; ++k) {
    LinearEquality row{std::vector<Scalar>(hull.size()), c[k]};
    for (std::size_t j = 0; j < hull.size(); ++j) row.coefficients[j] = hull[j].get().coords[k];
    lp.equalities.push_back(std::move(row));
  }
  lp.equalities.push_back({std::vector<Scalar>(hull.size(), Scalar(1)), Scalar(1)});
  return lp_feasible(lp).feasible();
}

bool point_in_hull(const Point& c, std::span<const Point> hull) {
  PointRefs refs(hull.begin(), hull.end());
  return point_in_hull(std::span<const Scalar>(c.coords), refs);
}

}  // namespace tverberg
