#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "we/real.hpp"

namespace we {

// Nested staircase layout for the shears between consecutive charts.
//
// Level-1 block k is ((2/3)2^-k, (2/3)2^-(k-1)] and its plateau I_k is the
// closed middle third. Inside a level-(j-1) plateau the level-j values get
// equal sub-blocks, ordered so that values increase with y, each plateau
// again being the middle third of its sub-block.
struct GluingSpec {
  int L = 2;
  double alpha = 2.0;
  double alpha_prime = 1.0;
  std::int64_t k_max = 1;
  // Nested layout entries are serialized only for k_1 up to this value.
  std::int64_t layout_detail = 16;

  // Range [lo, hi] of the integers k_level inside the level-1 plateau k1.
  std::int64_t value_lo(int level, std::int64_t k1) const;
  std::int64_t value_hi(int level, std::int64_t k1) const;
  std::int64_t value_count(int level, std::int64_t k1) const {
    return value_hi(level, k1) - value_lo(level, k1) + 1;
  }
};

struct Interval {
  Real lo = 0;
  Real hi = 0;
  Real mid() const { return lo + (hi - lo) / 2; }
  bool contains(Real v) const { return lo <= v && v <= hi; }
};

// Multi-index (k_1, ..., k_j) of a level-j plateau.
using PlateauIndex = std::vector<std::int64_t>;

constexpr std::int64_t kMaxKMax = 16000;

GluingSpec build_gluing(int L, double alpha, std::int64_t k_max,
                        std::int64_t layout_detail = 16);

// floor(k^a), exact when k^a is an integer.
std::int64_t floor_pow(std::int64_t k, double a);

bool valid_index(const GluingSpec& spec, const PlateauIndex& index);
Interval plateau_interval(const GluingSpec& spec, const PlateauIndex& index);
Interval block_interval(std::int64_t k1);
// Plateau of slot s (0 = lowest) among m equal sub-blocks of parent.
Interval child_plateau(const Interval& parent, std::int64_t m, std::int64_t s);

std::optional<PlateauIndex> previous_plateau(const GluingSpec& spec,
                                             const PlateauIndex& index);
std::optional<PlateauIndex> next_plateau(const GluingSpec& spec,
                                         const PlateauIndex& index);

// Lowest y still covered by the materialized layout.
Real layout_floor(const GluingSpec& spec);

Real phi_eval(const GluingSpec& spec, int level, Real y);

// Calls fn for every plateau of `level` inside block k1, bottom to top.
void for_each_plateau(const GluingSpec& spec, int level, std::int64_t k1,
                      const std::function<void(const PlateauIndex&)>& fn);

struct LayoutEntry {
  PlateauIndex index;
  Real lo = 0;
  Real hi = 0;
  std::int64_t value = 0;
};

std::vector<LayoutEntry> layout_entries(const GluingSpec& spec);

}  // namespace we
