#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"
#include "we/coding.hpp"

namespace we {
namespace {

using test::Word;

SetFamily one_box(double lo, double hi) {
  return make_family({{"Y", {1, {lo, hi, lo, hi}}}});
}

CodingWord word(std::initializer_list<int> l) { return CodingWord{std::vector<int>(l)}; }

// Words of the full templates, built letter by letter. Each position holds
// the set of letters so that colliding doubled hits stay distinguishable.
std::size_t template_words(int L, double alpha, std::int64_t n) {
  std::set<std::vector<std::uint64_t>> words;
  for (std::int64_t k1 = 1; k1 <= n / (2 * L); ++k1)
    for (const auto& idx : test::ref_deepest(L, alpha, k1)) {
      std::vector<std::int64_t> at{0};
      for (auto k : idx) at.push_back(at.back() + k);
      for (int dbl = 0; dbl <= 1; ++dbl)
        for (std::int64_t a = 0; a + at.back() + dbl < n; ++a) {
          std::vector<std::uint64_t> w(static_cast<std::size_t>(n), 0);
          for (int l = 0; l < L; ++l)
            for (int d = 0; d <= dbl; ++d) w[static_cast<std::size_t>(a + at[l] + d)] |= 1u << l;
          words.insert(w);
        }
    }
  return words.size();
}

TEST(CodeOrbit, TranslationBox) {
  System t = build_translation();
  SetFamily f = one_box(-2.0 / 3, 2.0 / 3);
  EXPECT_EQ(code_orbit(t, {1, -1.5L, 0}, 4, f), word({kInfinity, 0, 0, kInfinity}));
}

TEST(CodeOrbit, GluedTemplate) {
  GluingSpec s = build_gluing(3, 3.0, 8);
  System g = build_glued(s);
  Real y = test::ref_plateau(3, 3.0, {2, 3}).mid();
  CodingWord w = code_orbit(g, {1, 0, y}, 8, standard_family(3));
  EXPECT_EQ(w, word({0, kInfinity, 1, kInfinity, kInfinity, 2, kInfinity, kInfinity}));
  // Same word from direct membership tests.
  std::set<Word> brute;
  test::brute_words(g, standard_family(3), {1, 0, y}, 8, 0, 7, brute);
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(*brute.begin(), w.letters);
}

TEST(CodeOrbit, EmptyFamilyAndErrors) {
  System t = build_translation();
  EXPECT_EQ(code_orbit(t, {1, 0, 0}, 3, SetFamily{}), word({kInfinity, kInfinity, kInfinity}));
  EXPECT_THROW(code_orbit(t, {1, 0, 0}, 0, SetFamily{}), InvalidArgument);
  GluingSpec s = build_gluing(3, 3.0, 4);
  Real deep = test::ref_plateau(3, 3.0, {10}).mid();
  EXPECT_THROW(code_orbit(build_glued(s), {1, 0, deep}, 8, standard_family(3)), LayoutExceeded);
}

TEST(CodeOrbit, LowestIndexWinsOnOverlap) {
  System t = build_translation();
  SetFamily f = make_family({{"A", {1, {0, 1, 0, 1}}}, {"B", {1, {0.5, 1.5, 0, 1}}}});
  EXPECT_EQ(code_orbit(t, {1, 0.75L, 0.5L}, 2, f), word({0, kInfinity}));
  EXPECT_EQ(code_orbit(t, {1, 0.25L, 0.5L}, 2, f), word({0, 1}));
}

TEST(CountExact, SingleHit) {
  DiscreteSystem d;
  d.names = {"Y"};
  d.orbits.push_back({});
  d.orbits[0].hits[0] = 1;
  EXPECT_EQ(count_exact(d, 3), 4);
  EXPECT_EQ(count_exact(d, 1), 2);
  EXPECT_THROW(count_exact(d, 0), InvalidArgument);
}

TEST(CountExact, TranslationFiveIsTen) {
  EXPECT_EQ(count_exact(translation_oracle(one_box(-2.0 / 3, 2.0 / 3)), 5), 10);
}

// Orbit offsets on a fine grid, coded by direct membership tests.
TEST(CountExact, TranslationMatchesBruteForce) {
  System t = build_translation();
  for (auto [lo, hi] : std::vector<std::pair<double, double>>{
           {-2.0 / 3, 2.0 / 3}, {0, 0.5}, {-1.3, 1.4}, {0.1, 2.2}}) {
    SetFamily f = one_box(lo, hi);
    DiscreteSystem oracle = translation_oracle(f);
    for (std::int64_t n = 1; n <= 10; ++n) {
      std::set<Word> brute;
      for (int j = 0; j < 997; ++j) {
        Real x = -1 + static_cast<Real>(j) / 997;
        test::brute_words(t, f, {1, x, (lo + hi) / 2}, n, -n - 4, n + 4, brute);
      }
      EXPECT_EQ(count_exact(oracle, n), BigCount(brute.size())) << lo << " " << hi << " n=" << n;
    }
  }
}

TEST(CountExact, TwoTranslationBoxes) {
  System t = build_translation();
  SetFamily f = make_family({{"A", {1, {-0.5, 0.4, -0.5, 0.5}}}, {"B", {1, {2.2, 3.6, -0.5, 0.5}}}});
  DiscreteSystem oracle = translation_oracle(f);
  for (std::int64_t n = 1; n <= 9; ++n) {
    std::set<Word> brute;
    for (int j = 0; j < 1009; ++j)
      test::brute_words(t, f, {1, -1 + static_cast<Real>(j) / 1009, 0}, n, -n - 6, n + 6, brute);
    EXPECT_EQ(count_exact(oracle, n), BigCount(brute.size())) << "n=" << n;
  }
}

TEST(CountExact, LinearExampleLowerBound) {
  SetFamily f = axes_family();
  auto times = linear_transitions(f.members[0].region.box, f.members[1].region.box, 64);
  ASSERT_FALSE(times.empty());
  const std::int64_t lag = times.front();
  EXPECT_EQ(lag, 2);
  DiscreteSystem oracle = linear_oracle(f, 64);
  for (std::int64_t n : {8, 16, 32, 64}) {
    BigCount sum = 0;
    for (std::int64_t k = lag - 1; k <= n - 2; ++k) sum += n - k - 1;
    EXPECT_GE(count_exact(oracle, n), sum) << n;
  }
}

// Direct iteration of starts spread over both boxes never finds a word the
// oracle misses.
TEST(CountExact, LinearOracleCoversIteratedOrbits) {
  System a = build_linear_example();
  SetFamily f = axes_family();
  const std::int64_t n = 12;
  DiscreteSystem oracle = linear_oracle(f, n);
  std::set<CodingWord> known = enumerate_words(oracle, n);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.25, 0.25), v(0.75, 1.25);
  for (int i = 0; i < 4000; ++i) {
    ChartPoint p = i % 2 ? ChartPoint{1, u(rng), v(rng)} : ChartPoint{1, v(rng), u(rng)};
    std::set<Word> w;
    test::brute_words(a, f, p, n, -n - 2, n + 2, w);
    for (const auto& x : w) ASSERT_TRUE(known.count(CodingWord{x})) << i;
  }
  EXPECT_EQ(count_exact(oracle, n), BigCount(known.size()));
}

TEST(CountPlateau, LowerBoundSumAtSixty) {
  GluingSpec s = build_gluing(3, 3.0, 64);
  EXPECT_EQ(count_lower_bound(s, 60), 285);
  EXPECT_GE(count_plateau(s, standard_family(3), 60), 285);
}

TEST(CountPlateau, MatchesExplicitTemplates) {
  for (auto [L, a] : std::vector<std::pair<int, double>>{{2, 2.0}, {3, 3.0}, {3, 2.5}, {4, 4.0}, {4, 3.5}}) {
    GluingSpec s = build_gluing(L, a, 64);
    for (std::int64_t n : {2 * L, 2 * L + 1, 24, 37, 48, 60}) {
      EXPECT_EQ(count_plateau(s, standard_family(L), n), BigCount(template_words(L, a, n)))
          << "L=" << L << " a=" << a << " n=" << n;
    }
  }
}

TEST(CountPlateau, FrozenValues) {
  GluingSpec s3 = build_gluing(3, 3.0, 64);
  EXPECT_EQ(count_plateau(s3, standard_family(3), 60), 5535);
  EXPECT_EQ(count_plateau(s3, standard_family(3), 128), 46550);
  EXPECT_EQ(count_plateau(s3, standard_family(3), 5), 0);
}

TEST(CountPlateau, NonDecreasingAndErrors) {
  GluingSpec s = build_gluing(4, 3.5, 200);
  BigCount prev = 0;
  for (std::int64_t n = 1; n <= 1600; n += 7) {
    BigCount c = count_plateau(s, standard_family(4), n);
    EXPECT_GE(c, prev);
    prev = c;
  }
  EXPECT_THROW(count_plateau(s, standard_family(3), 64), InvalidArgument);
  EXPECT_THROW(count_plateau(s, standard_family(4), 1608), LayoutExceeded);
}

TEST(UpperBound, FullTermExample) {
  GluingSpec s = build_gluing(3, 3.0, 16);
  ASSERT_EQ(s.alpha_prime, 1.0);
  UpperBoundTerms t = upper_bound_terms(s, 10);
  EXPECT_EQ(t.full, 950);
  EXPECT_EQ(t.partial, 5 * 4 * 100);
  EXPECT_EQ(t.total, t.partial + t.full + 1);
  for (int L = 2; L <= 4; ++L)
    EXPECT_GE(count_upper_bound(build_gluing(L, L, 4), 1), L + 1);
}

TEST(CountSample, TranslationFiveIsTen) {
  System t = build_translation();
  SetFamily f = one_box(-2.0 / 3, 2.0 / 3);
  EXPECT_EQ(count_sample(t, f, 5, SamplingPlan{}, 0), 10);
  for (std::int64_t n = 1; n <= 20; ++n)
    EXPECT_EQ(count_sample(t, f, n, SamplingPlan{}, 0), count_exact(translation_oracle(f), n));
}

TEST(CountSample, EmptyFamily) {
  GluingSpec s = build_gluing(3, 3.0, 64);
  EXPECT_EQ(count_sample(build_glued(s), SetFamily{}, 16, SamplingPlan{}, 0), 1);
  EXPECT_EQ(count_sample(build_translation(), SetFamily{}, 16, SamplingPlan{}, 0), 1);
}

TEST(CountSample, RejectsCoarseGrid) {
  SamplingPlan p;
  p.x_step = 0.5;
  EXPECT_THROW(count_sample(build_translation(), one_box(0, 0.5), 4, p, 0), InvalidArgument);
}

TEST(CountSample, SandwichedBetweenPlateauAndUpperBound) {
  for (auto [L, a] : std::vector<std::pair<int, double>>{{2, 2.0}, {3, 3.0}, {3, 2.5}, {4, 3.5}}) {
    GluingSpec s = build_gluing(L, a, 256);
    System g = build_glued(s);
    for (std::int64_t n : {8, 16, 32, 64}) {
      BigCount p = count_plateau(s, standard_family(L), n);
      BigCount c = count_sample(g, standard_family(L), n, SamplingPlan{}, 0);
      EXPECT_LE(p, c) << L << " " << a << " " << n;
      // The full-template term ignores doubled letters, so with two charts
      // the expression is not a finite-n bound.
      if (L >= 3) EXPECT_LE(c, count_upper_bound(s, n)) << L << " " << a << " " << n;
      else EXPECT_GT(c, count_upper_bound(s, n));
    }
  }
  GluingSpec s = build_gluing(3, 3.0, 256);
  EXPECT_GE(count_sample(build_glued(s), standard_family(3), 64, SamplingPlan{}, 0),
            count_plateau(s, standard_family(3), 64));
}

// Plateau midpoints on the three phases, coded by direct membership tests:
// the sampler must see every one of these words.
TEST(CountSample, ContainsBruteForcePlateauWords) {
  for (auto [L, a] : std::vector<std::pair<int, double>>{{3, 3.0}, {3, 2.5}}) {
    GluingSpec s = build_gluing(L, a, 64);
    System g = build_glued(s);
    SetFamily f = standard_family(L);
    for (std::int64_t n : {6, 10, 16}) {
      std::set<Word> brute;
      for (std::int64_t k1 = 1; k1 <= n; ++k1)
        for (const auto& idx : test::ref_deepest(L, a, k1)) {
          Real y = test::ref_plateau(L, a, idx).mid();
          std::int64_t span = 0;
          for (auto k : idx) span += k;
          for (Real phase : {1.0L / 6, 0.5L, 5.0L / 6})
            test::brute_words(g, f, {1, phase, y}, n, -n - 2, span + n + 2, brute);
        }
      EXPECT_LE(BigCount(brute.size()), count_sample(g, f, n, SamplingPlan{}, 0)) << n;
    }
  }
}

// Random starts anywhere in the plane give a lower bound that respects the
// upper bound.
TEST(CountSample, RandomStartsStayBelowUpperBound) {
  GluingSpec s = build_gluing(3, 3.0, 64);
  System g = build_glued(s);
  SetFamily f = standard_family(3);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> x(0, 1), y(-0.7, 0.7);
  const std::int64_t n = 12;
  std::set<Word> brute;
  for (int i = 0; i < 3000; ++i) {
    Real yy = y(rng);
    if (yy > 0 && yy < layout_floor(s)) continue;
    std::uniform_int_distribution<int> chart(1, 3);
    test::brute_words(g, f, {chart(rng), x(rng), yy}, n, -40, 200, brute);
  }
  EXPECT_LE(BigCount(brute.size()), count_upper_bound(s, n));
}

TEST(CountSample, RandomFillIsMonotoneAndSeeded) {
  GluingSpec s = build_gluing(3, 3.0, 256);
  System g = build_glued(s);
  SetFamily f = standard_family(3);
  SamplingPlan base, filled;
  filled.random_fill = 200;
  BigCount b = count_sample(g, f, 32, base, 7);
  BigCount c7 = count_sample(g, f, 32, filled, 7);
  BigCount c8 = count_sample(g, f, 32, filled, 8);
  EXPECT_GE(c7, b);
  EXPECT_GE(c8, b);
  EXPECT_EQ(c7, count_sample(g, f, 32, filled, 7));
  EXPECT_EQ(b, count_sample(g, f, 32, base, 99));
  SamplingPlan no_gaps = base;
  no_gaps.gap_seeds = false;
  EXPECT_LE(count_sample(g, f, 32, no_gaps, 0), b);
  SamplingPlan capped = base;
  capped.k1_cap = 4;
  EXPECT_LE(count_sample(g, f, 32, capped, 0), b);
}

TEST(CountSample, ExtraPointsOnly) {
  System a = build_linear_example();
  SamplingPlan p;
  p.x_step = 0.25;
  p.points = {{1, 0.1L, 1.0L}};
  p.horizon = 20;
  SetFamily f = axes_family();
  BigCount c = count_sample(a, f, 8, p, 0);
  std::set<Word> brute;
  test::brute_words(a, f, {1, 0.1L, 1.0L}, 8, -28, 28, brute);
  EXPECT_EQ(c, BigCount(brute.size()));
  EXPECT_THROW(count_sample(a, f, 8, SamplingPlan{}, 0), InvalidArgument);
}

TEST(CountSample, IndependentOfThreadCount) {
  GluingSpec s = build_gluing(3, 3.0, 256);
  System g = build_glued(s);
  setenv("WE_THREADS", "1", 1);
  BigCount one = count_sample(g, standard_family(3), 48, SamplingPlan{}, 0);
  BigCount one_exact = count_exact(random_system(3, 30, 3, 40), 20);
  setenv("WE_THREADS", "4", 1);
  EXPECT_EQ(count_sample(g, standard_family(3), 48, SamplingPlan{}, 0), one);
  EXPECT_EQ(count_exact(random_system(3, 30, 3, 40), 20), one_exact);
  unsetenv("WE_THREADS");
}

TEST(MaxHits, Boxes) {
  System t = build_translation();
  EXPECT_EQ(max_hits(t, Region{1, {-2.0 / 3, 2.0 / 3, -2.0 / 3, 2.0 / 3}}), 2);
  EXPECT_EQ(max_hits(t, Region{1, {0, 0.5, 0, 0.5}}), 1);
  EXPECT_THROW(max_hits(build_linear_example(), Region{1, {-1, 1, -1, 1}}), InvalidArgument);
}

TEST(MaxHits, StandardUnionUnderGlued) {
  for (int L = 2; L <= 4; ++L) {
    GluingSpec s = build_gluing(L, L, 64);
    System g = build_glued(s);
    SetFamily f = standard_family(L);
    EXPECT_EQ(max_hits(g, f), 2 * L);
    // Sampled orbits never exceed it, and doubled plateau orbits reach it.
    std::mt19937_64 rng(L);
    std::uniform_real_distribution<double> y(1e-3, 0.7), x(0, 1);
    std::int64_t best = 0;
    auto hits = [&](ChartPoint p) {
      std::int64_t c = 0;
      for (std::int64_t t = -20; t <= 400; ++t) {
        ChartPoint q = iterate(g, p, t);
        bool in = false;
        for (const auto& m : f.members) in = in || contains(g, m.region, q);
        c += in;
      }
      return c;
    };
    for (int i = 0; i < 300; ++i) best = std::max(best, hits({1, x(rng), y(rng)}));
    EXPECT_LE(best, 2 * L);
    auto idx = test::ref_deepest(L, L, 5).front();
    EXPECT_EQ(hits({1, 0.5L, test::ref_plateau(L, L, idx).mid()}), 2 * L);
  }
}

// Each letter of a glued word with the standard boxes occupies at most two
// consecutive places.
TEST(Doubling, LettersAppearAtMostTwiceInARow) {
  GluingSpec s = build_gluing(3, 3.0, 64);
  System g = build_glued(s);
  SetFamily f = standard_family(3);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> y(1e-3, 0.7), x(0, 1);
  for (int i = 0; i < 500; ++i) {
    std::set<Word> ws;
    test::brute_words(g, f, {1, x(rng), y(rng)}, 40, -10, 200, ws);
    for (const auto& w : ws)
      for (int l = 0; l < 3; ++l) {
        std::vector<std::size_t> at;
        for (std::size_t k = 0; k < w.size(); ++k)
          if (w[k] == l) at.push_back(k);
        ASSERT_LE(at.size(), 2u);
        if (at.size() == 2) ASSERT_EQ(at[1], at[0] + 1);
      }
  }
}

TEST(GrowthSeries, Invariants) {
  GrowthSeries s;
  s.append({4, 10, Strategy::exact});
  EXPECT_THROW(s.append({4, 12, Strategy::exact}), InvalidArgument);
  EXPECT_THROW(s.append({3, 12, Strategy::exact}), InvalidArgument);
  EXPECT_THROW(s.append({8, 0, Strategy::exact}), InvalidArgument);
  s.append({8, 20, Strategy::exact});
  EXPECT_EQ(s.rows.size(), 2u);
}

TEST(GrowthSeries, ExactAndPlateauCountsNonDecreasing) {
  DiscreteSystem d = random_system(9, 8, 3, 20);
  BigCount prev = 0;
  for (std::int64_t n = 1; n <= 60; ++n) {
    BigCount c = count_exact(d, n);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(Strategy, Names) {
  for (Strategy s : {Strategy::exact, Strategy::plateau, Strategy::sample, Strategy::bound_lower,
                     Strategy::bound_upper})
    EXPECT_EQ(strategy_from_string(to_string(s)), s);
  EXPECT_EQ(to_string(Strategy::bound_lower), "bound-lower");
  EXPECT_THROW(strategy_from_string("exhaustive"), InvalidArgument);
}

}  // namespace
}  // namespace we
