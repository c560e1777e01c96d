#pragma once

#include <cstdint>
#include <variant>

#include "we/gluing.hpp"
#include "we/real.hpp"

namespace we {

// A point of the glued plane in the coordinates of one chart (1-based).
struct ChartPoint {
  int chart = 1;
  Real x = 0;
  Real y = 0;
  bool operator==(const ChartPoint&) const = default;
};

ChartPoint to_chart(const GluingSpec& spec, const ChartPoint& p, int k);
ChartPoint step(const GluingSpec& spec, const ChartPoint& p, std::int64_t n);

// Unit translation of a single plane.
struct TranslationMap {};
// The glued map: x -> x + 1 in every chart.
struct GluedMap {
  GluingSpec spec;
};
// (x, y) -> (2x, y/2).
struct LinearMap {};

using System = std::variant<TranslationMap, GluedMap, LinearMap>;

System build_translation();
System build_glued(const GluingSpec& spec);
System build_linear_example();

int chart_count(const System& sys);
void check_point(const System& sys, const ChartPoint& p);
ChartPoint iterate(const System& sys, const ChartPoint& p, std::int64_t n);

}  // namespace we
