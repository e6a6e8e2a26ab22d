#include "tverberg/regular_solvers.hpp"

#include <array>
#include <string>

#include "tverberg/combinatorics.hpp"
#include "tverberg/error.hpp"
#include "tverberg/hull_lp.hpp"
#include "tverberg/lift.hpp"
#include "tverberg/tverberg_1d.hpp"

namespace tverberg {

std::optional<IndexedPartition> brute_force_tverberg(const PointSet& points, std::size_t m, std::size_t cap) {
  const std::size_t n = points.size();
  if (n > cap) throw BudgetExceededError("instance too large for brute force");
  if (m == 0 || m > n) return std::nullopt;

  std::optional<IndexedPartition> found;
  std::vector<PointRefs> sets(m);
  for_each_set_partition(n, m, [&](std::span<const std::size_t> labels) {
    for (auto& set : sets) set.clear();
    for (std::size_t i = 0; i < n; ++i) sets[labels[i]].emplace_back(points[i]);
    if (!common_intersection_point(std::span<const PointRefs>(sets), points.dim())) return true;
    IndexedPartition partition;
    partition.parts.resize(m);
    for (std::size_t i = 0; i < n; ++i) partition.parts[labels[i]].push_back(points[i].id);
    found = std::move(partition);
    return false;
  });
  return found;
}

IndexedPartition solver_1d_regular(const PointSet& points, std::size_t m) {
  return tolerant_tverberg_1d(points, m).partition;
}

IndexedPartition solver_lifted_regular(const PointSet& points, std::size_t m) {
  return tolerant_tverberg_lifted(points, m, 0).partition;
}

namespace {

std::size_t pow2(std::size_t exponent) { return std::size_t{1} << exponent; }

std::vector<SolverContract> make_registry() {
  std::vector<SolverContract> out;
  out.push_back({"brute",
                 [](std::size_t m, std::size_t dim) { return (dim + 1) * (m - 1) + 1; },
                 0,
                 [](const PointSet& p, std::size_t m) { return brute_force_tverberg(p, m); }});
  out.push_back({"1d",
                 [](std::size_t m, std::size_t) { return 2 * m - 1; },
                 0,
                 [](const PointSet& p, std::size_t m) -> std::optional<IndexedPartition> {
                   return solver_1d_regular(p, m);
                 }});
  out.push_back({"lift",
                 [](std::size_t m, std::size_t dim) { return pow2(dim - 1) * (2 * m - 1); },
                 0,
                 [](const PointSet& p, std::size_t m) -> std::optional<IndexedPartition> {
                   return solver_lifted_regular(p, m);
                 }});
  return out;
}

std::size_t miller_sheehy_block(std::size_t m, std::size_t dim) { return 2 * m * (dim + 1) * (dim + 1); }
std::size_t mulzer_werner_block(std::size_t m, std::size_t dim) {
  return 4 * m * (dim + 1) * (dim + 1) * (dim + 1);
}

constexpr std::array kPublishedRows{
    PublishedSolverRow{"Miller-Sheehy", "floor(|P| / 2m(d+1)^2) - 1", "m^O(log d) d^O(log d) |P|",
                       &miller_sheehy_block},
    PublishedSolverRow{"Mulzer-Werner", "floor(|P| / 4m(d+1)^3) - 1", "d^O(log d) |P|", &mulzer_werner_block},
};

}  // namespace

std::span<const SolverContract> registered_solvers() {
  static const std::vector<SolverContract> registry = make_registry();
  return registry;
}

const SolverContract& solver_by_name(std::string_view name) {
  for (const auto& solver : registered_solvers()) {
    if (solver.name == name) return solver;
  }
  throw Error("unknown solver '" + std::string(name) + "' (expected brute, 1d or lift)");
}

std::span<const PublishedSolverRow> published_solver_rows() { return kPublishedRows; }

}  // namespace tverberg
