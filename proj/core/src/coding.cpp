#include "we/coding.hpp"

#include "seeds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

namespace we {
namespace {

using namespace detail;

void check_family(const System& sys, const SetFamily& family) {
  validate_family(sys, family);
}

std::int64_t linear_span(double lo, double hi) {
  if (lo <= 0 && hi >= 0) return -1;
  Real a = std::min(std::fabs(static_cast<Real>(lo)), std::fabs(static_cast<Real>(hi)));
  Real b = std::max(std::fabs(static_cast<Real>(lo)), std::fabs(static_cast<Real>(hi)));
  std::int64_t c = 1;
  while (std::ldexp(a, static_cast<int>(c)) <= b) ++c;
  return c;
}

}  // namespace

CodingWord code_orbit(const System& sys, const ChartPoint& start, std::int64_t n,
                      const SetFamily& family) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  check_point(sys, start);
  check_family(sys, family);
  CodingWord w;
  w.letters.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    ChartPoint p = iterate(sys, start, k);
    int letter = kInfinity;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (contains(sys, family.members[i].region, p)) {
        letter = static_cast<int>(i);
        break;
      }
    }
    w.letters.push_back(letter);
  }
  return w;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exact: return "exact";
    case Strategy::plateau: return "plateau";
    case Strategy::sample: return "sample";
    case Strategy::bound_lower: return "bound-lower";
    case Strategy::bound_upper: return "bound-upper";
  }
  return "exact";
}

Strategy strategy_from_string(const std::string& s) {
  for (Strategy v : {Strategy::exact, Strategy::plateau, Strategy::sample,
                     Strategy::bound_lower, Strategy::bound_upper})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown strategy: " + s);
}

void GrowthSeries::append(GrowthRow row) {
  if (row.n < 1) throw InvalidArgument("n must be positive");
  if (!rows.empty() && row.n <= rows.back().n)
    throw InvalidArgument("n must be strictly increasing");
  if (row.count < 1)
    throw InvalidArgument("count must be at least 1 (n = " + std::to_string(row.n) + ")");
  rows.push_back(std::move(row));
}

BigCount count_exact(const DiscreteSystem& sys, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  validate(sys);
  std::vector<std::vector<Hit>> lists;
  for (const auto& o : sys.orbits) lists.push_back(o.hit_list());
  return count_partitioned(n, [&](WordCounter& c) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      auto [a0, a1] = window_starts(sys.orbits[i], n);
      c.add(lists[i], a0, a1);
    }
  });
}

BigCount count_plateau(const GluingSpec& spec, const SetFamily& family, std::int64_t n) {
  if (!is_standard_family(family, spec.L))
    throw InvalidArgument("count_plateau needs the standard family");
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const std::int64_t top = n / (2 * spec.L);
  if (top > spec.k_max)
    throw LayoutExceeded("n = " + std::to_string(n) + " needs k_1 up to " + std::to_string(top) +
                         " but k_max = " + std::to_string(spec.k_max));
  BigCount total = 0;
  for (std::int64_t k = 1; k <= top; ++k) {
    BigCount tuples = 1;
    BigCount span_sum = k;
    if (spec.L >= 3) {
      const std::int64_t q = floor_pow(k, spec.alpha_prime);
      const BigCount a = k + 1;
      const BigCount b = q + 1;
      const BigCount sum_a = BigCount(k + 1) * (3 * k) / 2;
      const BigCount sum_b = BigCount(q + 1) * (2 * k + q) / 2;
      BigCount mid = 1;
      for (int j = 0; j < spec.L - 3; ++j) mid *= a;
      tuples = mid * b;
      span_sum = tuples * k + (spec.L - 3) * (tuples / a) * sum_a + (tuples / b) * sum_b;
    }
    // Single hits give n - s offsets, doubled hits n - s - 1.
    total += tuples * (2 * n - 1) - 2 * span_sum;
  }
  return total;
}

BigCount count_sample(const System& sys, const SetFamily& family, std::int64_t n,
                      const SamplingPlan& plan, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  check_family(sys, family);
  if (!(plan.x_step > 0) || !(plan.x_phase >= 0) || plan.x_phase >= 1)
    throw InvalidArgument("bad sampling grid");
  for (const auto& m : family.members)
    if (plan.x_step > (m.region.box.x_hi - m.region.box.x_lo) / 2)
      throw InvalidArgument("x-step exceeds half the width of member " + m.name);
  for (const auto& p : plan.points) check_point(sys, p);

  std::vector<Real> phases;
  for (Real f = plan.x_phase; f < 1; f += plan.x_step) phases.push_back(f);

  const auto* glued = std::get_if<GluedMap>(&sys);
  const bool linear = std::holds_alternative<LinearMap>(sys);
  if (linear && plan.points.empty())
    throw InvalidArgument("the linear map has no default sampling plan; give explicit points");

  std::int64_t cap = plan.k1_cap > 0 ? plan.k1_cap : n;
  if (glued && cap > glued->spec.k_max)
    throw LayoutExceeded("sampling n = " + std::to_string(n) + " needs k_1 up to " +
                         std::to_string(cap) + " but k_max = " +
                         std::to_string(glued->spec.k_max));

  std::vector<Real> fill;
  if (glued && plan.random_fill) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(1, cap);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < plan.random_fill; ++i) {
      Interval b = block_interval(pick(rng));
      fill.push_back(b.lo + (b.hi - b.lo) * static_cast<Real>(u(rng)));
    }
  }
  const std::int64_t horizon = plan.horizon > 0 ? plan.horizon : 4 * n;

  return count_partitioned(n, [&](WordCounter& counter) {
    std::vector<Hit> shapes[8];
    std::vector<Hit> hits;
    auto feed = [&](const Seed& s) {
      std::size_t kept = 0;
      for (Real f : phases) {
        orbit_hits(family, s, f, hits);
        bool dup = false;
        for (std::size_t i = 0; i < kept && !dup; ++i) dup = same_shape(shapes[i], hits);
        if (dup) continue;
        if (kept < 8) shapes[kept++] = hits;
        counter.add(hits);
      }
    };
    if (glued) {
      plateau_seeds(glued->spec, cap, plan.gap_seeds, feed);
      side_seeds(glued->spec, family, feed);
      for (Real y : fill) feed(phi_seed(glued->spec, y));
    } else if (!linear) {
      translation_seeds(family, feed);
    }
    for (const auto& p : plan.points) {
      std::vector<Hit> h;
      for (std::int64_t k = -horizon; k <= horizon; ++k) {
        ChartPoint q = iterate(sys, p, k);
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < family.size(); ++i)
          if (contains(sys, family.members[i].region, q)) m |= std::uint64_t{1} << i;
        if (m) h.push_back({k, m});
      }
      counter.add(h, -horizon, horizon - n + 1);
    }
  });
}

UpperBoundTerms upper_bound_terms(const GluingSpec& spec, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const int L = spec.L;
  BigCount nn = n;
  BigCount pairs = L * (L + 1) / 2 - 1;
  BigCount partial = pairs * pow(BigCount(2), static_cast<unsigned>(L - 1)) *
                     pow(nn, static_cast<unsigned>(L - 1));
  BigCount s = 2 * nn;
  for (std::int64_t k = 1; k <= n; ++k) {
    Real v = std::pow(static_cast<Real>(k + 2), static_cast<Real>(spec.alpha_prime));
    Real near = std::round(v);
    if (std::fabs(v - near) <= 1e-12L * v) v = near;
    s += BigCount(static_cast<std::int64_t>(std::ceil(v)));
  }
  BigCount full = pow(nn, static_cast<unsigned>(L - 2)) * s;
  return {partial, full, partial + full + 1};
}

BigCount count_upper_bound(const GluingSpec& spec, std::int64_t n) {
  return upper_bound_terms(spec, n).total;
}

BigCount count_lower_bound(const GluingSpec& spec, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const std::int64_t top = n / (2 * spec.L);
  const double e = spec.alpha - 1;
  if (e == std::floor(e)) {
    BigCount s = 0;
    for (std::int64_t k = 2; k <= top; ++k) s += pow(BigCount(k - 1), static_cast<unsigned>(e));
    return s;
  }
  Real s = 0;
  for (std::int64_t k = 2; k <= top; ++k) s += std::pow(static_cast<Real>(k - 1), static_cast<Real>(e));
  return BigCount(static_cast<std::int64_t>(std::floor(s)));
}

std::int64_t max_hits(const System& sys, const Region& region) {
  validate_family(sys, make_family({{"Y", region}}));
  const Box& b = region.box;
  if (std::holds_alternative<LinearMap>(sys)) {
    std::int64_t cx = linear_span(b.x_lo, b.x_hi);
    std::int64_t cy = linear_span(b.y_lo, b.y_hi);
    if (cx < 0) return cy;
    if (cy < 0) return cx;
    return std::min(cx, cy);
  }
  return static_cast<std::int64_t>(std::floor(b.x_hi - b.x_lo)) + 1;
}

std::int64_t max_hits(const System& sys, const SetFamily& family) {
  check_family(sys, family);
  const std::uint64_t all = family.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << family.size()) - 1;
  if (std::holds_alternative<TranslationMap>(sys))
    return max_hits(translation_oracle(family), all);
  if (std::holds_alternative<LinearMap>(sys))
    return max_hits(linear_oracle(family, 256), all);
  const GluingSpec& spec = std::get<GluedMap>(sys).spec;
  std::int64_t best = 0;
  std::vector<Hit> hits;
  auto feed = [&](const Seed& s) {
    for (Real f : breakpoint_phases(family, s)) {
      orbit_hits(family, s, f, hits);
      best = std::max(best, static_cast<std::int64_t>(hits.size()));
    }
  };
  plateau_seeds(spec, std::min<std::int64_t>(spec.k_max, 64), true, feed);
  side_seeds(spec, family, feed);
  return best;
}

DiscreteSystem translation_oracle(const SetFamily& family) {
  const System sys = build_translation();
  check_family(sys, family);
  DiscreteSystem out;
  out.names = family.names();
  std::vector<Hit> hits;
  translation_seeds(family, [&](const Seed& s) {
    for (Real f : breakpoint_phases(family, s)) {
      orbit_hits(family, s, f, hits);
      LabeledOrbit o;
      for (const Hit& h : hits) o.hits[h.time] = h.mask;
      if (std::find(out.orbits.begin(), out.orbits.end(), o) == out.orbits.end())
        out.orbits.push_back(std::move(o));
    }
  });
  return out;
}

std::vector<std::int64_t> linear_transitions(const Box& u, const Box& v, std::int64_t horizon) {
  if (horizon < 0 || horizon > kMaxKMax) throw InvalidArgument("horizon out of range");
  std::vector<std::int64_t> out;
  for (std::int64_t m = -horizon; m <= horizon; ++m) {
    int e = static_cast<int>(m);
    Real xl = std::ldexp(static_cast<Real>(u.x_lo), e), xh = std::ldexp(static_cast<Real>(u.x_hi), e);
    Real yl = std::ldexp(static_cast<Real>(u.y_lo), -e), yh = std::ldexp(static_cast<Real>(u.y_hi), -e);
    if (xl <= v.x_hi && v.x_lo <= xh && yl <= v.y_hi && v.y_lo <= yh) out.push_back(m);
  }
  return out;
}

namespace {

struct RBox {
  Real x_lo, x_hi, y_lo, y_hi;
};

bool covered_exact(const RBox& t, const std::vector<RBox>& boxes) {
  std::vector<Real> xs{t.x_lo, t.x_hi};
  for (const auto& b : boxes) {
    if (b.x_lo > t.x_lo && b.x_lo < t.x_hi) xs.push_back(b.x_lo);
    if (b.x_hi > t.x_lo && b.x_hi < t.x_hi) xs.push_back(b.x_hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Real> probes;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    probes.push_back(xs[i]);
    if (i + 1 < xs.size()) probes.push_back(xs[i] + (xs[i + 1] - xs[i]) / 2);
  }
  std::vector<std::pair<Real, Real>> spans;
  for (Real x : probes) {
    spans.clear();
    for (const auto& b : boxes)
      if (b.x_lo <= x && x <= b.x_hi) spans.emplace_back(b.y_lo, b.y_hi);
    std::sort(spans.begin(), spans.end());
    Real reach = t.y_lo;
    bool started = false;
    for (const auto& [lo, hi] : spans) {
      if (lo > reach) break;
      if (hi >= reach) {
        reach = hi;
        started = true;
      }
    }
    if (!started || reach < t.y_hi) return false;
  }
  return true;
}

}  // namespace

bool covered(const Box& target, const std::vector<Box>& boxes) {
  std::vector<RBox> rb;
  for (const auto& b : boxes) rb.push_back({b.x_lo, b.x_hi, b.y_lo, b.y_hi});
  return covered_exact({target.x_lo, target.x_hi, target.y_lo, target.y_hi}, rb);
}

DiscreteSystem linear_oracle(const SetFamily& family, std::int64_t horizon) {
  const System sys = build_linear_example();
  check_family(sys, family);
  if (family.size() > 2) throw InvalidArgument("the linear oracle takes at most two members");
  for (const auto& m : family.members) {
    if (m.region.chart != 1) throw InvalidArgument("the linear map has one chart");
    if (max_hits(sys, m.region) != 1)
      throw InvalidArgument("member " + m.name + " can be visited more than once");
  }
  DiscreteSystem out;
  out.names = family.names();
  if (family.size() == 0) {
    out.orbits.emplace_back();
    return out;
  }
  const Box& a = family.members[0].region.box;
  if (family.size() == 1) {
    out.orbits.push_back(LabeledOrbit{{{0, 1}}, {}, 0});
    return out;
  }
  const Box& b = family.members[1].region.box;
  auto t = linear_transitions(a, b, horizon);
  std::vector<RBox> into_a, into_b;
  for (std::int64_t m : t) {
    LabeledOrbit o;
    o.hits[0] |= 1;
    o.hits[m] |= 2;
    out.orbits.push_back(std::move(o));
    int e = static_cast<int>(m);
    // A^-m(b) meets a, and A^m(a) meets b.
    RBox pre{std::ldexp(static_cast<Real>(b.x_lo), -e), std::ldexp(static_cast<Real>(b.x_hi), -e),
             std::ldexp(static_cast<Real>(b.y_lo), e), std::ldexp(static_cast<Real>(b.y_hi), e)};
    RBox img{std::ldexp(static_cast<Real>(a.x_lo), e), std::ldexp(static_cast<Real>(a.x_hi), e),
             std::ldexp(static_cast<Real>(a.y_lo), -e), std::ldexp(static_cast<Real>(a.y_hi), -e)};
    into_a.push_back(pre);
    into_b.push_back(img);
  }
  if (!covered_exact({a.x_lo, a.x_hi, a.y_lo, a.y_hi}, into_a))
    out.orbits.push_back(LabeledOrbit{{{0, 1}}, {}, 0});
  if (!covered_exact({b.x_lo, b.x_hi, b.y_lo, b.y_hi}, into_b))
    out.orbits.push_back(LabeledOrbit{{{0, 2}}, {}, 0});
  return out;
}

}  // namespace we
