#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "we/plane.hpp"

namespace we {

struct Box {
  double x_lo = 0;
  double x_hi = 0;
  double y_lo = 0;
  double y_hi = 0;
  bool operator==(const Box&) const = default;
};

struct Region {
  int chart = 1;
  Box box;
  bool operator==(const Region&) const = default;
};

struct Member {
  std::string name;
  Region region;
  bool operator==(const Member&) const = default;
};

// Letters are member indices; the complement letter is implicit.
struct SetFamily {
  std::vector<Member> members;

  std::size_t size() const { return members.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::string> names() const;
  bool operator==(const SetFamily&) const = default;
};

constexpr std::size_t kMaxLetters = 64;

SetFamily make_family(std::vector<Member> members);
// U_i = [-2/3, 2/3]^2 in chart i, named "U1".."UL".
SetFamily standard_family(int L);
bool is_standard_family(const SetFamily& family, int L);
// Y1 on the positive y-axis and Y2 on the positive x-axis.
SetFamily axes_family();

void validate_family(const System& sys, const SetFamily& family);

bool contains(const Box& box, Real x, Real y);
bool contains(const System& sys, const Region& region, const ChartPoint& p);

}  // namespace we
