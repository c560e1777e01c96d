#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "we/coding.hpp"

namespace we {

enum class FitMethod { regress, ratio };

std::string to_string(FitMethod m);
FitMethod fit_method_from_string(const std::string& s);

struct ExponentEstimate {
  double exponent = 0;
  FitMethod method = FitMethod::regress;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  double residual = 0;
  bool operator==(const ExponentEstimate&) const = default;
};

// Rows with n in [n_min, n_max]; a zero bound means unbounded on that side.
ExponentEstimate fit_exponent(const GrowthSeries& series, FitMethod method,
                              std::int64_t n_min = 0, std::int64_t n_max = 0);

struct LocalEntropyRow {
  double size = 0;
  ExponentEstimate estimate;
  GrowthSeries series;
};

// Boxes of half-width `size` around the points, named P1, P2, ...
SetFamily neighborhood_family(const std::vector<ChartPoint>& points, double size);

std::vector<LocalEntropyRow> local_entropy_series(const System& sys,
                                                  const std::vector<ChartPoint>& points,
                                                  const std::vector<double>& sizes,
                                                  const std::vector<std::int64_t>& n_grid,
                                                  FitMethod method = FitMethod::regress);

}  // namespace we
