#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "we/coding.hpp"

namespace we {

enum class VerdictKind { singular_up_to, non_singular_with_bound };

std::string to_string(VerdictKind k);
VerdictKind verdict_from_string(const std::string& s);

// times[i] is when the orbit of start visits member i. Discrete systems name
// the orbit by index instead of a start point.
struct Witness {
  ChartPoint start;
  std::int64_t orbit = -1;
  std::vector<std::int64_t> times;
  bool operator==(const Witness&) const = default;
};

struct SingularityVerdict {
  VerdictKind kind = VerdictKind::non_singular_with_bound;
  std::int64_t bound = 0;
  std::int64_t horizon = 0;
  std::optional<Witness> witness;
  // Largest k_1 examined on glued systems, 0 otherwise.
  std::int64_t searched_k1 = 0;
  bool operator==(const SingularityVerdict&) const = default;
};

// Looks for an orbit visiting every member with pairwise time gaps > gap,
// all visits within [-horizon, horizon] of the start.
SingularityVerdict check_mutual_singularity(const System& sys, const SetFamily& family,
                                            std::int64_t gap, std::int64_t horizon);
SingularityVerdict check_mutual_singularity(const DiscreteSystem& sys, std::int64_t gap,
                                            std::int64_t horizon);

// {m in [-horizon, horizon] : f^m(u) meets v}.
std::vector<std::int64_t> transition_set(const System& sys, const Region& u, const Region& v,
                                         std::int64_t horizon);
bool is_integer_interval(const std::vector<std::int64_t>& times);

}  // namespace we
