#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "we/entropy.hpp"

namespace we {
namespace {

GrowthSeries series_of(std::initializer_list<std::pair<std::int64_t, double>> rows) {
  GrowthSeries s;
  for (auto [n, c] : rows) s.append({n, BigCount(static_cast<long long>(c)), Strategy::exact});
  return s;
}

TEST(FitExponent, Examples) {
  auto sq = series_of({{10, 100}, {100, 1e4}, {1000, 1e6}});
  EXPECT_NEAR(fit_exponent(sq, FitMethod::regress).exponent, 2.0, 1e-12);
  auto lin = series_of({{4, 4}, {8, 8}, {16, 16}, {32, 32}});
  EXPECT_NEAR(fit_exponent(lin, FitMethod::regress).exponent, 1.0, 1e-12);
  EXPECT_NEAR(fit_exponent(lin, FitMethod::ratio).exponent, 1.0, 1e-12);
  EXPECT_NEAR(fit_exponent(lin, FitMethod::regress).residual, 0.0, 1e-12);
}

TEST(FitExponent, RecoversPowerLaws) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> p(0.5, 4.0), c(1.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double e = p(rng), k = c(rng);
    GrowthSeries s;
    for (std::int64_t n = 16; n <= 16384; n *= 2) {
      // Scaled up so that rounding to an integer stays below the tolerance.
      long double v = k * std::pow(static_cast<long double>(n), static_cast<long double>(e)) * 1e12L;
      s.append({n, BigCount(std::floor(v)), Strategy::exact});
    }
    EXPECT_NEAR(fit_exponent(s, FitMethod::regress).exponent, e, 1e-9) << trial;
    EXPECT_NEAR(fit_exponent(s, FitMethod::ratio).exponent, e, 1e-9) << trial;
  }
}

TEST(FitExponent, WindowSelectsRows) {
  auto s = series_of({{2, 2}, {4, 16}, {8, 64}, {16, 256}, {32, 1024}});
  auto e = fit_exponent(s, FitMethod::regress, 4, 32);
  EXPECT_EQ(e.n_min, 4);
  EXPECT_EQ(e.n_max, 32);
  EXPECT_NEAR(e.exponent, 2.0, 1e-12);
  EXPECT_GT(std::fabs(fit_exponent(s, FitMethod::regress).exponent - 2.0), 1e-3);
}

TEST(FitExponent, NestedWindowsAgreeOnPowerLaw) {
  GrowthSeries s;
  for (std::int64_t n = 8; n <= 4096; n *= 2) s.append({n, BigCount(n) * n * n * 7, Strategy::exact});
  for (std::int64_t lo = 8; lo <= 512; lo *= 2)
    EXPECT_NEAR(fit_exponent(s, FitMethod::regress, lo, 4096).exponent, 3.0, 1e-9);
}

TEST(FitExponent, Errors) {
  auto two = series_of({{2, 4}, {4, 16}});
  EXPECT_THROW(fit_exponent(two, FitMethod::regress), InvalidArgument);
  auto odd = series_of({{3, 9}, {5, 25}, {7, 49}});
  EXPECT_THROW(fit_exponent(odd, FitMethod::ratio), InvalidArgument);
  EXPECT_THROW(fit_method_from_string("least-squares"), InvalidArgument);
  EXPECT_EQ(fit_method_from_string(to_string(FitMethod::ratio)), FitMethod::ratio);
}

TEST(FitExponent, PlateauCountsNearAlpha) {
  auto spec = build_gluing(3, 3.0, 2048);
  GrowthSeries s;
  for (std::int64_t n = 128; n <= 8192; n *= 2)
    s.append({n, count_plateau(spec, standard_family(3), n), Strategy::plateau});
  EXPECT_NEAR(fit_exponent(s, FitMethod::regress).exponent, 3.0, 0.15);
}

TEST(NeighborhoodFamily, Boxes) {
  auto f = neighborhood_family({{1, 0, 0}, {2, 1, -1}}, 0.25);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.members[0].name, "P1");
  EXPECT_EQ(f.members[1].name, "P2");
  EXPECT_EQ(f.members[1].region.chart, 2);
  EXPECT_EQ(f.members[1].region.box, (Box{0.75, 1.25, -1.25, -0.75}));
  EXPECT_THROW(neighborhood_family({{1, 0, 0}}, 0), InvalidArgument);
}

std::vector<std::int64_t> grid(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> g;
  for (std::int64_t n = lo; n <= hi; n *= 2) g.push_back(n);
  return g;
}

TEST(LocalEntropy, TranslationIsOne) {
  auto rows = local_entropy_series(build_translation(), {{1, 0, 0}}, {0.5, 0.25, 0.1}, grid(8, 512));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_NEAR(r.estimate.exponent, 1.0, 0.05) << r.size;
}

TEST(LocalEntropy, LinearAxesPointsGiveTwo) {
  auto rows = local_entropy_series(build_linear_example(), {{1, 0, 1}, {1, 1, 0}}, {0.25},
                                   grid(32, 1024));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].estimate.exponent, 2.0, 0.1);
}

TEST(LocalEntropy, GluedBoundaryPointsNearAlpha) {
  auto sys = build_glued(build_gluing(3, 3.0, 512));
  auto rows = local_entropy_series(sys, {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}, {1.0 / 3}, grid(32, 256));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].estimate.exponent, 3.0, 0.4);
}

TEST(LocalEntropy, ShrinkingBoxesDoNotRaiseTheEstimate) {
  auto rows = local_entropy_series(build_linear_example(), {{1, 0, 1}, {1, 1, 0}},
                                   {0.25, 0.125}, grid(32, 512));
  EXPECT_LE(rows[1].estimate.exponent, rows[0].estimate.exponent + 0.1);
}

TEST(LocalEntropy, Errors) {
  auto t = build_translation();
  EXPECT_THROW(local_entropy_series(t, {}, {0.1}, grid(8, 64)), InvalidArgument);
  EXPECT_THROW(local_entropy_series(t, {{1, 0, 0}}, {}, grid(8, 64)), InvalidArgument);
  EXPECT_THROW(local_entropy_series(t, {{1, 0, 0}}, {0.1, 0.2}, grid(8, 64)), InvalidArgument);
  EXPECT_THROW(local_entropy_series(t, {{1, 0, 0}, {1, 0.1, 0}}, {0.2}, grid(8, 64)),
               InvalidArgument);
  EXPECT_THROW(local_entropy_series(t, {{2, 0, 0}}, {0.1}, grid(8, 64)), InvalidArgument);
}

}  // namespace
}  // namespace we
