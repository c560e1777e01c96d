#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "we/family.hpp"
#include "we/oracle.hpp"
#include "we/plane.hpp"

namespace we {

// Deterministic coding: the lowest-indexed member wins on overlaps.
CodingWord code_orbit(const System& sys, const ChartPoint& start, std::int64_t n,
                      const SetFamily& family);

enum class Strategy { exact, plateau, sample, bound_lower, bound_upper };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct GrowthRow {
  std::int64_t n = 0;
  BigCount count;
  Strategy strategy = Strategy::exact;
  bool operator==(const GrowthRow&) const = default;
};

struct GrowthSeries {
  std::vector<GrowthRow> rows;

  // Enforces strictly increasing n and positive counts.
  void append(GrowthRow row);
  bool operator==(const GrowthSeries&) const = default;
};

// Exact number of distinct words over all windows and all codings.
BigCount count_exact(const DiscreteSystem& sys, std::int64_t n);

// Words of the full templates started on deepest plateaus with k_1 <= n/2L,
// counted arithmetically; single and doubled variants.
BigCount count_plateau(const GluingSpec& spec, const SetFamily& family, std::int64_t n);

struct SamplingPlan {
  double x_step = 1.0 / 3.0;
  double x_phase = 1.0 / 6.0;
  // Deepest plateaus are seeded for k_1 up to this bound; 0 means n.
  std::int64_t k1_cap = 0;
  bool gap_seeds = true;
  std::size_t random_fill = 0;
  // Extra starts coded by direct iteration over [-horizon, horizon].
  std::vector<ChartPoint> points;
  std::int64_t horizon = 0;
};

BigCount count_sample(const System& sys, const SetFamily& family, std::int64_t n,
                      const SamplingPlan& plan, std::uint64_t seed);

struct UpperBoundTerms {
  BigCount partial;
  BigCount full;
  BigCount total;
};

UpperBoundTerms upper_bound_terms(const GluingSpec& spec, std::int64_t n);
BigCount count_upper_bound(const GluingSpec& spec, std::int64_t n);
// floor of sum_{1 <= k <= n/2L} (k-1)^(alpha-1).
BigCount count_lower_bound(const GluingSpec& spec, std::int64_t n);

std::int64_t max_hits(const System& sys, const Region& region);
// Largest number of visits of one orbit to the union of the family.
std::int64_t max_hits(const System& sys, const SetFamily& family);

// Every orbit class of the unit translation, one representative each.
DiscreteSystem translation_oracle(const SetFamily& family);

// Times m in [-horizon, horizon] with A^m(u) meeting v for the linear map.
std::vector<std::int64_t> linear_transitions(const Box& u, const Box& v,
                                             std::int64_t horizon);
bool covered(const Box& target, const std::vector<Box>& boxes);

// Exact for windows up to horizon + 1. At most two members, each visited
// at most once per orbit.
DiscreteSystem linear_oracle(const SetFamily& family, std::int64_t horizon);

}  // namespace we
