#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>

#include "we/real.hpp"

namespace we {

// One visit of an orbit: the time and the bitmask of members containing it.
struct Hit {
  std::int64_t time = 0;
  std::uint64_t mask = 0;
  bool operator==(const Hit&) const = default;
};

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max() / 4;

// Distinct length-n words over all windows of the orbits fed in.
//
// A window starting at a sees the hits in [a, a+n-1]. Its word is fixed by
// the first and last hit inside it, the hit pattern in between and the
// offset of the first hit, so every contiguous run of hits contributes an
// interval of offsets under a shape key. Counting is the total length of the
// per-key interval unions. Overlapping members are expanded into every
// coding.
class WordCounter {
 public:
  // Keys are split into `parts` classes by hash; this counter keeps `part`.
  explicit WordCounter(std::int64_t n, unsigned parts = 1, unsigned part = 0);
  ~WordCounter();
  WordCounter(WordCounter&&) noexcept;
  WordCounter& operator=(WordCounter&&) noexcept;

  // Hits sorted by strictly increasing time. Window starts are restricted to
  // [a_min, a_max].
  void add(std::span<const Hit> hits, std::int64_t a_min = -kNoBound,
           std::int64_t a_max = kNoBound);

  BigCount count() const;
  std::size_t keys() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Worker count from WE_THREADS, else the hardware concurrency.
unsigned thread_count();

// Runs feed once per key partition (in parallel when allowed) and sums.
BigCount count_partitioned(std::int64_t n,
                           const std::function<void(WordCounter&)>& feed);

}  // namespace we
