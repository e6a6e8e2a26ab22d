#include <gtest/gtest.h>

#include <set>

#include "tverberg/combinatorics.hpp"

using namespace tverberg;

namespace {

// Stirling numbers of the second kind by the recurrence.
std::uint64_t stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return s[n][k];
}

}  // namespace

TEST(Binomial, SmallValuesAndSaturation) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(22, 2), 231u);
  EXPECT_EQ(binomial(12, 3), 220u);
  EXPECT_EQ(binomial(4, 0), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(1000, 500), std::numeric_limits<std::uint64_t>::max());
}

TEST(Combinations, LexicographicAndComplete) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::vector<std::size_t>> seen;
      for_each_combination(n, k, [&](std::span<const std::size_t> c) {
        seen.emplace_back(c.begin(), c.end());
        return true;
      });
      EXPECT_EQ(seen.size(), binomial(n, k));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
      EXPECT_EQ(std::set(seen.begin(), seen.end()).size(), seen.size());
    }
  }
}

TEST(Combinations, EarlyStop) {
  int calls = 0;
  EXPECT_FALSE(for_each_combination(6, 2, [&](auto) { return ++calls < 4; }));
  EXPECT_EQ(calls, 4);
}

TEST(SetPartitions, CountsMatchStirlingNumbers) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t count = 0;
      for_each_set_partition(n, k, [&](std::span<const std::size_t> labels) {
        ++count;
        // Restricted growth with exactly k labels.
        std::size_t next = 0;
        for (std::size_t l : labels) {
          EXPECT_LE(l, next);
          if (l == next) ++next;
        }
        EXPECT_EQ(next, k);
        return true;
      });
      EXPECT_EQ(count, stirling2(n, k)) << n << " " << k;
    }
  }
}

TEST(SetPartitions, LexicographicOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_set_partition(5, 3, [&](std::span<const std::size_t> labels) {
    seen.emplace_back(labels.begin(), labels.end());
    return true;
  });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 0, 0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{0, 1, 2, 2, 2}));
}

TEST(SetPartitions, DegenerateArguments) {
  int calls = 0;
  for_each_set_partition(3, 0, [&](auto) { return ++calls, true; });
  for_each_set_partition(3, 4, [&](auto) { return ++calls, true; });
  EXPECT_EQ(calls, 0);
  for_each_set_partition(1, 1, [&](auto) { return ++calls, true; });
  EXPECT_EQ(calls, 1);
}
