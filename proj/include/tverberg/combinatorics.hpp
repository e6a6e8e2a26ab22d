#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace tverberg {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    // result * factor / i is exact at every step; guard the product.
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    result = result * factor / i;
  }
  return result;
}

/**
 * Calls visit(span of k indices) for every k-subset of {0..n-1} in
 * lexicographic order. Stops early when visit returns false; returns false
 * in that case.
 */
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> chosen(k);
  for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(chosen))) return false;
    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

/**
 * Calls visit(span of block labels) for every partition of {0..n-1} into
 * exactly `blocks` nonempty blocks, encoded as a restricted growth string
 * (label[0] = 0, label[i] <= 1 + max(label[0..i-1])), in lexicographic
 * order. Stops early when visit returns false; returns false in that case.
 */
template <class Visit>
bool for_each_set_partition(std::size_t n, std::size_t blocks, Visit&& visit) {
  if (blocks == 0 || blocks > n) return true;
  std::vector<std::size_t> label(n, 0);
  // Depth-first over positions; used_before[i] = distinct labels in [0, i).
  std::vector<std::size_t> used_before(n + 1, 0);
  std::size_t pos = 1;
  used_before[1] = 1;
  if (n == 1) return visit(std::span<const std::size_t>(label));
  label[1] = 0;
  while (true) {
    // Invariant: positions < pos are assigned; label[pos] is the candidate.
    const std::size_t used = used_before[pos];
    const std::size_t max_label = std::min(used, blocks - 1);
    if (label[pos] > max_label) {
      // Exhausted this position; backtrack.
      if (pos == 1) return true;
      --pos;
      ++label[pos];
      continue;
    }
    const std::size_t now_used = std::max(used, label[pos] + 1);
    const std::size_t remaining = n - pos - 1;
    if (now_used + remaining < blocks) {
      ++label[pos];
      continue;
    }
    if (pos + 1 == n) {
      if (now_used == blocks && !visit(std::span<const std::size_t>(label))) return false;
      ++label[pos];
      continue;
    }
    used_before[pos + 1] = now_used;
    ++pos;
    label[pos] = 0;
  }
}

}  // namespace tverberg
