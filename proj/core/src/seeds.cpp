#include "seeds.hpp"

#include <algorithm>
#include <cmath>

namespace we::detail {

const Real kTwoThirds = 2.0L / 3.0L;
const Real kEdge = 1e-12L;

Real frac(Real v) { return v - std::floor(v); }

void orbit_hits(const SetFamily& family, const Seed& seed, Real phase,
                std::vector<Hit>& out) {
  thread_local std::vector<Hit> raw;
  raw.clear();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Region& r = family.members[i].region;
    if (!(seed.y > 0) && r.chart != seed.chart) continue;
    if (seed.y < r.box.y_lo || seed.y > r.box.y_hi) continue;
    Real x = phase + seed.shift[static_cast<std::size_t>(r.chart - 1)];
    // Boxes are closed; an edge landing within rounding of a lattice point counts.
    auto k0 = static_cast<std::int64_t>(std::ceil(r.box.x_lo - x - kEdge));
    auto k1 = static_cast<std::int64_t>(std::floor(r.box.x_hi - x + kEdge));
    for (std::int64_t k = k0; k <= k1; ++k) raw.push_back({k, std::uint64_t{1} << i});
  }
  std::sort(raw.begin(), raw.end(), [](const Hit& a, const Hit& b) { return a.time < b.time; });
  out.clear();
  for (const Hit& h : raw) {
    if (!out.empty() && out.back().time == h.time)
      out.back().mask |= h.mask;
    else
      out.push_back(h);
  }
}

bool same_shape(const std::vector<Hit>& a, const std::vector<Hit>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].mask != b[i].mask || a[i].time - a[0].time != b[i].time - b[0].time) return false;
  return true;
}

Seed plateau_seed(const PlateauIndex& idx, Real y) {
  Seed s;
  s.y = y;
  s.shift.push_back(0);
  for (auto k : idx) s.shift.push_back(s.shift.back() - static_cast<Real>(k));
  return s;
}

Seed phi_seed(const GluingSpec& spec, Real y) {
  Seed s;
  s.y = y;
  s.shift.push_back(0);
  for (int j = 1; j < spec.L; ++j) s.shift.push_back(s.shift.back() + phi_eval(spec, j, y));
  return s;
}

// Points on the y-axis where membership can change, with the cells between.
std::vector<Real> y_cells(std::vector<Real> bounds, Real lo, Real hi) {
  std::vector<Real> b;
  for (Real v : bounds)
    if (v >= lo && v <= hi) b.push_back(v);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<Real> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.push_back(b[i]);
    if (i + 1 < b.size()) out.push_back(b[i] + (b[i + 1] - b[i]) / 2);
  }
  return out;
}

// Starts outside the plateau tree: y <= 0 in each chart and y above 2/3.
void side_seeds(const GluingSpec& spec, const SetFamily& family,
                const std::function<void(const Seed&)>& emit) {
  for (int c = 1; c <= spec.L; ++c) {
    std::vector<Real> bounds{0};
    Real lowest = 0;
    for (const auto& m : family.members) {
      if (m.region.chart != c) continue;
      bounds.push_back(m.region.box.y_lo);
      bounds.push_back(m.region.box.y_hi);
      lowest = std::min<Real>(lowest, m.region.box.y_lo);
    }
    Seed s;
    s.chart = c;
    s.shift.assign(static_cast<std::size_t>(spec.L), 0);
    s.y = lowest - 1;
    emit(s);
    for (Real y : y_cells(bounds, -INFINITY, 0)) {
      s.y = y;
      emit(s);
    }
  }
  std::vector<Real> bounds{kTwoThirds};
  Real highest = kTwoThirds;
  for (const auto& m : family.members) {
    bounds.push_back(m.region.box.y_lo);
    bounds.push_back(m.region.box.y_hi);
    highest = std::max<Real>(highest, m.region.box.y_hi);
  }
  std::vector<Real> ys = y_cells(bounds, kTwoThirds, INFINITY);
  if (!ys.empty()) ys.erase(ys.begin());
  ys.push_back(highest + 1);
  for (Real y : ys) emit(phi_seed(spec, y));
}

// Deepest plateau midpoints up to cap, optionally with the gaps above them.
// Gaps between siblings sit halfway between two plateau values.
void plateau_seeds(const GluingSpec& spec, std::int64_t cap, bool gaps,
                   const std::function<void(const Seed&)>& emit) {
  const int deepest = spec.L - 1;
  Seed seed;
  seed.shift.assign(static_cast<std::size_t>(spec.L), 0);
  std::vector<std::int64_t> values(static_cast<std::size_t>(spec.L), 0);
  for (std::int64_t k1 = cap; k1 >= 1; --k1) {
    std::function<void(int, const Interval&)> rec = [&](int level, const Interval& iv) {
      auto at = static_cast<std::size_t>(level);
      const std::int64_t hi = spec.value_hi(level, k1);
      const std::int64_t m = spec.value_count(level, k1);
      for (std::int64_t s = 0; s < m; ++s) {
        const std::int64_t v = hi - s;
        Interval p = level == 1 ? iv : child_plateau(iv, m, s);
        seed.shift[at] = seed.shift[at - 1] - static_cast<Real>(v);
        values[at - 1] = v;
        if (level < deepest) {
          rec(level + 1, p);
          continue;
        }
        seed.y = p.mid();
        emit(seed);
        if (!gaps) continue;
        if (s + 1 < m) {
          Interval q = child_plateau(iv, m, s + 1);
          seed.y = p.hi + (q.lo - p.hi) / 2;
          seed.shift[at] = seed.shift[at - 1] - (static_cast<Real>(v) - 0.5L);
          emit(seed);
        } else {
          PlateauIndex idx(values.begin(), values.begin() + deepest);
          auto up = next_plateau(spec, idx);
          Real top = up ? plateau_interval(spec, *up).lo : kTwoThirds;
          Seed g = phi_seed(spec, p.hi + (top - p.hi) / 2);
          emit(g);
        }
      }
    };
    Interval b = block_interval(k1);
    Real w = b.hi - b.lo;
    rec(1, Interval{b.lo + w / 3, b.lo + 2 * w / 3});
  }
}

void translation_seeds(const SetFamily& family, const std::function<void(const Seed&)>& emit) {
  std::vector<Real> bounds;
  Real lo = 0, hi = 0;
  for (const auto& m : family.members) {
    bounds.push_back(m.region.box.y_lo);
    bounds.push_back(m.region.box.y_hi);
    lo = std::min<Real>(lo, m.region.box.y_lo);
    hi = std::max<Real>(hi, m.region.box.y_hi);
  }
  Seed s;
  s.shift = {0};
  s.y = lo - 1;
  emit(s);
  for (Real y : y_cells(bounds, -INFINITY, INFINITY)) {
    s.y = y;
    emit(s);
  }
  s.y = hi + 1;
  emit(s);
}

// Phases where some member's hit set can change, plus the cells between.
std::vector<Real> breakpoint_phases(const SetFamily& family, const Seed& seed) {
  std::vector<Real> b;
  for (const auto& m : family.members) {
    if (static_cast<std::size_t>(m.region.chart) > seed.shift.size()) continue;
    Real s = seed.shift[static_cast<std::size_t>(m.region.chart - 1)];
    b.push_back(frac(m.region.box.x_lo - s));
    b.push_back(frac(m.region.box.x_hi - s));
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<Real> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.push_back(b[i]);
    Real next = i + 1 < b.size() ? b[i + 1] : b[0] + 1;
    out.push_back(frac(b[i] + (next - b[i]) / 2));
  }
  if (out.empty()) out.push_back(0.5L);
  return out;
}

}  // namespace we::detail
