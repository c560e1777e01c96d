#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "we/real.hpp"
#include "we/word_counter.hpp"

namespace we {

constexpr int kInfinity = -1;

// Letters are member indices, or kInfinity for the complement.
struct CodingWord {
  std::vector<int> letters;
  auto operator<=>(const CodingWord&) const = default;
};

std::string to_string(const CodingWord& w, const std::vector<std::string>& names);

// An orbit known only through its finitely many visits to the members.
//
// A metric orbit also carries a finite trajectory on the line: positions[i]
// is the point at time first_time + i, and only windows inside that span
// count as represented points.
struct LabeledOrbit {
  std::map<std::int64_t, std::uint64_t> hits;
  std::vector<double> positions;
  std::int64_t first_time = 0;

  bool metric() const { return !positions.empty(); }
  std::vector<Hit> hit_list() const;
  bool operator==(const LabeledOrbit&) const = default;
};

struct DiscreteSystem {
  std::vector<std::string> names;
  std::vector<LabeledOrbit> orbits;

  bool has_metric() const;
  bool operator==(const DiscreteSystem&) const = default;
};

void validate(const DiscreteSystem& sys);

std::set<CodingWord> enumerate_words(const DiscreteSystem& sys, std::int64_t n);

// Window-start range [lo, hi] of a metric orbit for length n (empty if lo > hi).
std::pair<std::int64_t, std::int64_t> window_starts(const LabeledOrbit& o, std::int64_t n);

DiscreteSystem random_system(std::uint64_t seed, std::size_t orbit_count,
                             std::size_t letters, std::int64_t horizon);

// Orbits on the line. Letter l is the ball of radius 1/2 around
// zone_center(l); each orbit enters the radius-1 ball around a center at most
// once, elsewhere it stays outside every such ball. Trajectory lengths sum to
// at most `points`.
DiscreteSystem random_metric_system(std::uint64_t seed, std::size_t zones, std::size_t points);
double zone_center(std::size_t l);

struct SeparatedCount {
  std::size_t value = 0;
  bool exact = true;
};

SeparatedCount separated_count(const DiscreteSystem& sys, std::int64_t n, double eps);

// Same system with the letters renamed; `map[i]` is the new letter of old
// letter i, or -1 to drop it. Times left without letters disappear.
DiscreteSystem relabel(const DiscreteSystem& sys, const std::vector<int>& map,
                       std::vector<std::string> names);

std::int64_t max_hits(const DiscreteSystem& sys, std::uint64_t letters);

}  // namespace we
