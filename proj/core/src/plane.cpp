#include "we/plane.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace we {

ChartPoint to_chart(const GluingSpec& spec, const ChartPoint& p, int k) {
  if (p.chart < 1 || p.chart > spec.L) throw InvalidArgument("chart out of range");
  if (k < 1 || k > spec.L) throw InvalidArgument("target chart out of range");
  if (k == p.chart) return p;
  if (!(p.y > 0))
    throw InvalidArgument("a point with y <= 0 exists only in chart " +
                          std::to_string(p.chart));
  ChartPoint q = p;
  if (k > p.chart) {
    for (int j = p.chart; j < k; ++j) q.x += phi_eval(spec, j, p.y);
  } else {
    for (int j = p.chart - 1; j >= k; --j) q.x -= phi_eval(spec, j, p.y);
  }
  q.chart = k;
  return q;
}

ChartPoint step(const GluingSpec& spec, const ChartPoint& p, std::int64_t n) {
  if (p.chart < 1 || p.chart > spec.L) throw InvalidArgument("chart out of range");
  ChartPoint q = p;
  q.x += static_cast<Real>(n);
  return q;
}

System build_translation() { return TranslationMap{}; }
System build_glued(const GluingSpec& spec) { return GluedMap{spec}; }
System build_linear_example() { return LinearMap{}; }

int chart_count(const System& sys) {
  if (auto g = std::get_if<GluedMap>(&sys)) return g->spec.L;
  return 1;
}

void check_point(const System& sys, const ChartPoint& p) {
  if (p.chart < 1 || p.chart > chart_count(sys)) throw InvalidArgument("chart out of range");
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidArgument("non-finite point");
}

ChartPoint iterate(const System& sys, const ChartPoint& p, std::int64_t n) {
  check_point(sys, p);
  if (std::holds_alternative<LinearMap>(sys)) {
    if (n > std::numeric_limits<int>::max() / 2 || n < std::numeric_limits<int>::min() / 2)
      throw InvalidArgument("iterate count out of range");
    return {p.chart, std::ldexp(p.x, static_cast<int>(n)),
            std::ldexp(p.y, static_cast<int>(-n))};
  }
  ChartPoint q = p;
  q.x += static_cast<Real>(n);
  return q;
}

}  // namespace we
