#include "we/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace we {

std::string to_string(FitMethod m) { return m == FitMethod::regress ? "regress" : "ratio"; }

FitMethod fit_method_from_string(const std::string& s) {
  if (s == "regress") return FitMethod::regress;
  if (s == "ratio") return FitMethod::ratio;
  throw InvalidArgument("unknown fit method: " + s);
}

ExponentEstimate fit_exponent(const GrowthSeries& series, FitMethod method,
                              std::int64_t n_min, std::int64_t n_max) {
  std::vector<double> lx, ly;
  std::map<std::int64_t, double> by_n;
  ExponentEstimate est;
  est.method = method;
  for (const auto& r : series.rows) {
    if ((n_min > 0 && r.n < n_min) || (n_max > 0 && r.n > n_max)) continue;
    if (r.count < 1) throw InvalidArgument("zero count at n = " + std::to_string(r.n));
    if (lx.empty()) est.n_min = r.n;
    est.n_max = r.n;
    lx.push_back(std::log(static_cast<double>(r.n)));
    ly.push_back(log_count(r.count));
    by_n[r.n] = ly.back();
  }
  if (lx.size() < 3) throw InvalidArgument("need at least 3 rows in the fit window");

  if (method == FitMethod::regress) {
    const double k = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      mx += lx[i];
      my += ly[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxx += (lx[i] - mx) * (lx[i] - mx);
      sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0) throw InvalidArgument("fit window has a single n");
    est.exponent = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      double r = ly[i] - (my + est.exponent * (lx[i] - mx));
      ss += r * r;
    }
    est.residual = std::sqrt(ss / k);
    return est;
  }

  std::vector<double> ratios;
  for (const auto& [n, l] : by_n) {
    auto it = by_n.find(2 * n);
    if (it != by_n.end()) ratios.push_back((it->second - l) / std::log(2.0));
  }
  if (ratios.empty()) throw InvalidArgument("no doubling pairs in the fit window");
  double mean = 0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double ss = 0;
  for (double r : ratios) ss += (r - mean) * (r - mean);
  est.exponent = mean;
  est.residual = std::sqrt(ss / static_cast<double>(ratios.size()));
  return est;
}

SetFamily neighborhood_family(const std::vector<ChartPoint>& points, double size) {
  if (!(size > 0)) throw InvalidArgument("box size must be positive");
  std::vector<Member> ms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
    ms.push_back({"P" + std::to_string(i + 1), {p.chart, {x - size, x + size, y - size, y + size}}});
  }
  return make_family(std::move(ms));
}

std::vector<LocalEntropyRow> local_entropy_series(const System& sys,
                                                  const std::vector<ChartPoint>& points,
                                                  const std::vector<double>& sizes,
                                                  const std::vector<std::int64_t>& n_grid,
                                                  FitMethod method) {
  if (points.empty()) throw InvalidArgument("no points");
  if (sizes.empty()) throw InvalidArgument("no sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (!(sizes[i] > 0) || (i && !(sizes[i] < sizes[i - 1])))
      throw InvalidArgument("sizes must be positive and strictly decreasing");
  for (const auto& p : points) check_point(sys, p);

  std::vector<LocalEntropyRow> out;
  for (double s : sizes) {
    SetFamily family = neighborhood_family(points, s);
    validate_family(sys, family);
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        const Region& a = family.members[i].region;
        const Region& b = family.members[j].region;
        bool apart = a.chart != b.chart || a.box.x_hi < b.box.x_lo || b.box.x_hi < a.box.x_lo ||
                     a.box.y_hi < b.box.y_lo || b.box.y_hi < a.box.y_lo;
        if (!apart) throw InvalidArgument("neighborhood boxes overlap; size too large");
      }
    LocalEntropyRow row;
    row.size = s;
    std::int64_t n_top = n_grid.empty() ? 1 : n_grid.back();
    std::optional<DiscreteSystem> oracle;
    if (std::holds_alternative<TranslationMap>(sys)) oracle = translation_oracle(family);
    if (std::holds_alternative<LinearMap>(sys)) oracle = linear_oracle(family, n_top);
    SamplingPlan plan;
    plan.x_step = std::min(plan.x_step, s);
    plan.x_phase = plan.x_step / 2;
    for (std::int64_t n : n_grid) {
      BigCount c = oracle ? count_exact(*oracle, n) : count_sample(sys, family, n, plan, 0);
      row.series.append({n, c, oracle ? Strategy::exact : Strategy::sample});
    }
    row.estimate = fit_exponent(row.series, method);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace we
