#include "tverberg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "tverberg/combinatorics.hpp"
#include "tverberg/error.hpp"
#include "tverberg/hull_lp.hpp"

namespace tverberg {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void check_budget(std::size_t n, std::size_t k, const VerifyOptions& options) {
  const std::uint64_t count = binomial(n, k);
  if (count > options.budget) {
    throw BudgetExceededError("instance too large: C(" + std::to_string(n) + "," + std::to_string(k) +
                              ") = " + std::to_string(count) + " removal sets exceed budget " +
                              std::to_string(options.budget));
  }
}

/**
 * Lexicographically first k-subset of {0..n-1} for which `hit` holds.
 * Workers take subsets by index modulo the thread count and stop once they
 * pass the best index found so far, so the answer matches a sequential scan.
 */
template <class Hit>
std::optional<std::vector<std::size_t>> first_hit(std::size_t n, std::size_t k, unsigned threads, const Hit& hit) {
  if (threads <= 1) {
    std::optional<std::vector<std::size_t>> found;
    for_each_combination(n, k, [&](std::span<const std::size_t> chosen) {
      if (!hit(chosen)) return true;
      found.emplace(chosen.begin(), chosen.end());
      return false;
    });
    return found;
  }

  std::atomic<std::uint64_t> best{kNone};
  std::mutex result_mutex;
  std::vector<std::size_t> best_subset;
  std::exception_ptr failure;
  auto worker = [&](unsigned id) {
    try {
      std::uint64_t index = 0;
      for_each_combination(n, k, [&](std::span<const std::size_t> chosen) {
        const std::uint64_t current = index++;
        if (current >= best.load(std::memory_order_relaxed)) return false;
        if (current % threads != id || !hit(chosen)) return true;
        std::lock_guard lock(result_mutex);
        if (current < best.load()) {
          best.store(current);
          best_subset.assign(chosen.begin(), chosen.end());
        }
        return false;
      });
    } catch (...) {
      std::lock_guard lock(result_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == kNone) return std::nullopt;
  return best_subset;
}

RemovalSet removal_from(std::span<const PointId> sorted_ids, std::span<const std::size_t> chosen) {
  RemovalSet removed;
  removed.ids.reserve(chosen.size());
  for (std::size_t i : chosen) removed.ids.push_back(sorted_ids[i]);
  return removed;
}

/// True iff c lies outside conv(P \ R) for the points not selected by `chosen`.
bool expels(const Point& c, const PointSet& points, std::span<const std::size_t> chosen) {
  PointRefs rest;
  rest.reserve(points.size() - chosen.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (next < chosen.size() && chosen[next] == i) {
      ++next;
      continue;
    }
    rest.emplace_back(points[i]);
  }
  return !point_in_hull(std::span<const Scalar>(c.coords), rest);
}

}  // namespace

std::optional<std::vector<Scalar>> common_point_after_removal(const PointSet& points,
                                                              const IndexedPartition& partition,
                                                              const RemovalSet& removed) {
  const auto sets = part_points(points, partition, &removed);
  return common_intersection_point(std::span<const PointRefs>(sets), points.dim());
}

ToleranceVerdict verify_tolerance(const PointSet& points, const IndexedPartition& partition, std::size_t t,
                                  const VerifyOptions& options) {
  if (!validate_partition(points, partition)) throw InvalidPartitionError();
  const std::size_t n = points.size();
  const std::size_t k = std::min(t, n);

  ToleranceVerdict verdict;
  const auto smallest = std::min_element(partition.parts.begin(), partition.parts.end(),
                                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (t >= smallest->size()) {
    // Deleting a whole part empties its hull.
    std::vector<PointId> part(smallest->begin(), smallest->end());
    std::sort(part.begin(), part.end());
    RemovalSet removed;
    removed.ids = part;
    for (PointId id : points.sorted_ids()) {
      if (removed.ids.size() >= k) break;
      if (!std::binary_search(part.begin(), part.end(), id)) removed.ids.push_back(id);
    }
    std::sort(removed.ids.begin(), removed.ids.end());
    verdict.status = ToleranceStatus::refuted;
    verdict.witness_removal = std::move(removed);
    return verdict;
  }

  check_budget(n, k, options);
  const std::vector<PointId> ids = points.sorted_ids();
  const auto separating = first_hit(n, k, options.threads, [&](std::span<const std::size_t> chosen) {
    return !common_point_after_removal(points, partition, removal_from(ids, chosen)).has_value();
  });
  if (separating) {
    verdict.status = ToleranceStatus::refuted;
    verdict.witness_removal = removal_from(ids, *separating);
    return verdict;
  }

  std::vector<std::size_t> last(k);
  for (std::size_t i = 0; i < k; ++i) last[i] = n - k + i;
  verdict.certificate = common_point_after_removal(points, partition, removal_from(ids, last));
  return verdict;
}

long exact_tolerance(const PointSet& points, const IndexedPartition& partition, const VerifyOptions& options) {
  for (std::size_t t = 0;; ++t) {
    if (!verify_tolerance(points, partition, t, options).tolerant()) return static_cast<long>(t) - 1;
  }
}

std::size_t tukey_depth(const Point& c, const PointSet& points, const VerifyOptions& options) {
  if (c.dim() != points.dim()) throw DimensionError("query point and point set differ in dimension");
  const std::size_t n = points.size();
  for (std::size_t k = 0; k < n; ++k) {
    check_budget(n, k, options);
    const auto hit = first_hit(n, k, options.threads,
                               [&](std::span<const std::size_t> chosen) { return expels(c, points, chosen); });
    if (hit) return k;
  }
  return n;  // removing everything leaves an empty hull
}

bool depth_at_least(const Point& c, const PointSet& points, std::size_t k, const VerifyOptions& options) {
  if (c.dim() != points.dim()) throw DimensionError("query point and point set differ in dimension");
  if (k == 0) return true;
  const std::size_t n = points.size();
  if (k > n) return false;
  check_budget(n, k - 1, options);
  return !first_hit(n, k - 1, options.threads,
                    [&](std::span<const std::size_t> chosen) { return expels(c, points, chosen); });
}

std::size_t centerpoint_depth(std::size_t n, std::size_t dim) { return (n + dim) / (dim + 1); }

bool is_centerpoint(const Point& c, const PointSet& points, const VerifyOptions& options) {
  return depth_at_least(c, points, centerpoint_depth(points.size(), points.dim()), options);
}

}  // namespace tverberg
