#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>

#include "tverberg/error.hpp"
#include "tverberg/geometry.hpp"

namespace tverberg {

namespace detail {

template <class It, class Less>
void insertion_sort(It first, It last, Less& less) {
  for (It i = first; i != last; ++i) {
    for (It j = i; j != first && less(*j, *std::prev(j)); --j) std::iter_swap(j, std::prev(j));
  }
}

/// Deterministic median-of-medians selection. Reorders [first, last) and
/// returns an iterator to the element of 0-based rank k under `less`.
template <class It, class Less>
It select_in_place(It first, It last, std::size_t k, Less& less) {
  while (true) {
    const auto n = static_cast<std::size_t>(last - first);
    if (n <= 5) {
      insertion_sort(first, last, less);
      return first + static_cast<std::ptrdiff_t>(k);
    }

    // Median of each group of five, gathered at the front.
    It medians_end = first;
    for (It group = first; group < last;) {
      const auto len = std::min<std::ptrdiff_t>(5, last - group);
      It group_end = group + len;
      insertion_sort(group, group_end, less);
      std::iter_swap(medians_end++, group + (len - 1) / 2);
      group = group_end;
    }
    const auto num_medians = static_cast<std::size_t>(medians_end - first);
    const auto pivot = *select_in_place(first, medians_end, (num_medians - 1) / 2, less);

    It equal_begin = std::partition(first, last, [&](const auto& x) { return less(x, pivot); });
    It equal_end = std::partition(equal_begin, last, [&](const auto& x) { return !less(pivot, x); });
    const auto below = static_cast<std::size_t>(equal_begin - first);
    const auto through = static_cast<std::size_t>(equal_end - first);
    if (k < below) {
      last = equal_begin;
    } else if (k < through) {
      return first + static_cast<std::ptrdiff_t>(k);
    } else {
      k -= through;
      first = equal_end;
    }
  }
}

}  // namespace detail

/// Element of 1-based rank k in `items` under `less`, in worst-case linear
/// time. `items` is taken by value. Throws RankError unless 1 <= k <= size.
template <class T, class Less>
T select_kth(std::vector<T> items, std::size_t k, Less less) {
  if (k < 1 || k > items.size()) throw RankError();
  return *detail::select_in_place(items.begin(), items.end(), k - 1, less);
}

/// The k-th smallest (1-based) of S under total_order_1d. S is untouched.
Point select(std::span<const Point> points, std::size_t k);

}  // namespace tverberg
