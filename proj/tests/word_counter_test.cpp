#include <gtest/gtest.h>

#include <random>

#include "we/oracle.hpp"
#include "we/word_counter.hpp"

namespace we {
namespace {

BigCount counted(const DiscreteSystem& s, std::int64_t n, unsigned parts = 1) {
  BigCount total = 0;
  for (unsigned p = 0; p < parts; ++p) {
    WordCounter wc(n, parts, p);
    for (const auto& o : s.orbits) {
      auto hits = o.hit_list();
      wc.add(hits);
    }
    total += wc.count();
  }
  return total;
}

TEST(WordCounter, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_system(rng(), 1 + trial % 5, 1 + trial % 4, 3 + trial % 9);
    for (std::int64_t n = 1; n <= 8; ++n) {
      BigCount want = enumerate_words(s, n).size();
      EXPECT_EQ(counted(s, n), want) << "trial " << trial << " n=" << n;
    }
  }
}

TEST(WordCounter, PartitionsSumToTotal) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_system(rng(), 6, 3, 12);
    for (std::int64_t n : {1, 4, 9}) {
      BigCount whole = counted(s, n);
      for (unsigned parts : {2u, 3u, 7u}) EXPECT_EQ(counted(s, n, parts), whole);
    }
  }
}

TEST(WordCounter, WindowRestrictionMatchesMetricEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_metric_system(rng(), 1 + trial % 3, 14);
    for (std::int64_t n = 1; n <= 5; ++n) {
      WordCounter wc(n);
      for (const auto& o : s.orbits) {
        auto [a0, a1] = window_starts(o, n);
        if (a0 > a1) continue;
        auto hits = o.hit_list();
        wc.add(hits, a0, a1);
      }
      EXPECT_EQ(wc.count(), BigCount(enumerate_words(s, n).size())) << trial << " n=" << n;
    }
  }
}

TEST(WordCounter, ParallelCountMatches) {
  auto s = random_system(99, 40, 5, 30);
  for (std::int64_t n : {3, 10, 25}) {
    BigCount c = count_partitioned(n, [&](WordCounter& wc) {
      for (const auto& o : s.orbits) {
        auto hits = o.hit_list();
        wc.add(hits);
      }
    });
    EXPECT_EQ(c, counted(s, n));
  }
  EXPECT_GE(thread_count(), 1u);
}

TEST(WordCounter, EmptyCounterIsZero) {
  WordCounter wc(5);
  EXPECT_EQ(wc.count(), 0);
  EXPECT_EQ(wc.keys(), 0u);
}

}  // namespace
}  // namespace we
