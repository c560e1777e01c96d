#include "we/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seeds.hpp"

namespace we {
namespace {

using namespace detail;

struct Span {
  std::int64_t lo;
  std::int64_t hi;
};

// Picks one time per span with all pairwise gaps above `gap`.
bool assign(const std::vector<Span>& spans, std::int64_t gap, std::vector<std::int64_t>& times,
            std::size_t at = 0) {
  if (at == spans.size()) return true;
  for (std::int64_t t = spans[at].lo; t <= spans[at].hi; ++t) {
    bool ok = true;
    for (std::size_t j = 0; j < at && ok; ++j) ok = std::llabs(times[j] - t) > gap;
    if (!ok) continue;
    times[at] = t;
    if (assign(spans, gap, times, at + 1)) return true;
  }
  return false;
}

class Search {
 public:
  Search(const SetFamily& family, std::int64_t gap, std::int64_t horizon)
      : family_(family), gap_(gap), horizon_(horizon) {}

  // Members in charts up to `known` are decided by seed; the rest are ignored.
  std::optional<Witness> try_seed(const Seed& seed, int known, Real y) const {
    for (Real f : phases(seed, known)) {
      std::vector<Span> spans;
      std::vector<std::size_t> which;
      bool dead = false;
      for (std::size_t i = 0; i < family_.size() && !dead; ++i) {
        const Region& r = family_.members[i].region;
        if (r.chart > known) continue;
        if (!(y > 0) && r.chart != seed.chart) {
          dead = true;
          break;
        }
        Real x = f + seed.shift[static_cast<std::size_t>(r.chart - 1)];
        auto lo = static_cast<std::int64_t>(std::ceil(r.box.x_lo - x - kEdge));
        auto hi = static_cast<std::int64_t>(std::floor(r.box.x_hi - x + kEdge));
        lo = std::max(lo, -horizon_);
        hi = std::min(hi, horizon_);
        if (lo > hi) dead = true;
        spans.push_back({lo, hi});
        which.push_back(i);
      }
      if (dead) continue;
      std::vector<std::int64_t> t(spans.size());
      if (!assign(spans, gap_, t)) continue;
      Witness w;
      w.start = {seed.chart, f, y};
      w.times.assign(family_.size(), 0);
      for (std::size_t j = 0; j < which.size(); ++j) w.times[which[j]] = t[j];
      return w;
    }
    return std::nullopt;
  }

 private:
  std::vector<Real> phases(const Seed& seed, int known) const {
    SetFamily part;
    for (const auto& m : family_.members)
      if (m.region.chart <= known) part.members.push_back(m);
    return breakpoint_phases(part, seed);
  }

  const SetFamily& family_;
  std::int64_t gap_;
  std::int64_t horizon_;
};

struct YRange {
  Real lo = -INFINITY;
  Real hi = INFINITY;
};

YRange common_y(const SetFamily& family) {
  YRange r;
  for (const auto& m : family.members) {
    r.lo = std::max<Real>(r.lo, m.region.box.y_lo);
    r.hi = std::min<Real>(r.hi, m.region.box.y_hi);
  }
  return r;
}

SingularityVerdict verdict(std::int64_t gap, std::int64_t horizon, std::optional<Witness> w) {
  SingularityVerdict v;
  v.kind = w ? VerdictKind::singular_up_to : VerdictKind::non_singular_with_bound;
  v.bound = gap;
  v.horizon = horizon;
  v.witness = std::move(w);
  return v;
}

SingularityVerdict search_glued(const GluingSpec& spec, const SetFamily& family,
                                std::int64_t gap, std::int64_t horizon) {
  const Search search(family, gap, horizon);
  const YRange yr = common_y(family);
  const int L = spec.L;
  SingularityVerdict out = verdict(gap, horizon, std::nullopt);
  if (yr.lo > yr.hi) return out;

  auto leaf_y = [&](const Interval& iv) -> std::optional<Real> {
    Real lo = std::max<Real>(iv.lo, yr.lo), hi = std::min<Real>(iv.hi, yr.hi);
    if (lo > hi) return std::nullopt;
    return lo + (hi - lo) / 2;
  };
  auto eval_phi_leaf = [&](Real y) -> std::optional<Witness> {
    if (y < yr.lo || y > yr.hi) return std::nullopt;
    return search.try_seed(phi_seed(spec, y), L, y);
  };

  // Starts with y <= 0 live in a single chart.
  std::optional<Witness> found;
  side_seeds(spec, family, [&](const Seed& s) {
    if (found || s.y < yr.lo || s.y > yr.hi) return;
    found = search.try_seed(s, L, s.y);
  });
  if (found) return verdict(gap, horizon, found);

  // Chart 1 alone already rules out every start with y > 0.
  {
    Seed root;
    root.shift = {0};
    if (!(yr.hi > 0) || !search.try_seed(root, 1, 1)) return out;
  }

  std::function<std::optional<Witness>(PlateauIndex&)> visit =
      [&](PlateauIndex& idx) -> std::optional<Witness> {
    Interval iv = plateau_interval(spec, idx);
    auto y = leaf_y(iv);
    if (!y) return std::nullopt;
    const int level = static_cast<int>(idx.size());
    Seed s = plateau_seed(idx, *y);
    if (level == L - 1) return search.try_seed(s, L, *y);
    if (!search.try_seed(s, level + 1, *y)) return std::nullopt;
    const int next = level + 1;
    for (std::int64_t v = spec.value_lo(next, idx[0]); v <= spec.value_hi(next, idx[0]); ++v) {
      idx.push_back(v);
      auto w = visit(idx);
      if (!w) {
        Interval c = plateau_interval(spec, idx);
        auto up = next_plateau(spec, idx);
        Real top = up ? plateau_interval(spec, *up).lo : kTwoThirds;
        w = eval_phi_leaf(c.hi + (top - c.hi) / 2);
      }
      idx.pop_back();
      if (w) return w;
    }
    return std::nullopt;
  };

  for (std::int64_t k1 = 1; k1 <= horizon; ++k1) {
    Interval block = block_interval(k1);
    if (block.hi < yr.lo) break;
    if (block.lo > yr.hi) continue;
    if (k1 > spec.k_max)
      throw LayoutExceeded("search reaches k_1 = " + std::to_string(k1) +
                           " beyond k_max = " + std::to_string(spec.k_max));
    out.searched_k1 = k1;
    PlateauIndex idx{k1};
    auto w = visit(idx);
    if (!w) {
      Interval c = plateau_interval(spec, idx);
      Real top = k1 > 1 ? plateau_interval(spec, {k1 - 1}).lo : kTwoThirds;
      w = eval_phi_leaf(c.hi + (top - c.hi) / 2);
    }
    if (w) {
      out.kind = VerdictKind::singular_up_to;
      out.witness = w;
      return out;
    }
  }
  // Above the whole layout the shears are constant.
  side_seeds(spec, family, [&](const Seed& s) {
    if (found || !(s.y > kTwoThirds) || s.y < yr.lo || s.y > yr.hi) return;
    found = search.try_seed(s, L, s.y);
  });
  if (found) {
    out.kind = VerdictKind::singular_up_to;
    out.witness = found;
  }
  return out;
}

SingularityVerdict search_translation(const SetFamily& family, std::int64_t gap,
                                      std::int64_t horizon) {
  const Search search(family, gap, horizon);
  const YRange yr = common_y(family);
  std::optional<Witness> found;
  translation_seeds(family, [&](const Seed& s) {
    if (!found && s.y >= yr.lo && s.y <= yr.hi) found = search.try_seed(s, 1, s.y);
  });
  return verdict(gap, horizon, found);
}

SingularityVerdict search_linear(const SetFamily& family, std::int64_t gap,
                                 std::int64_t horizon) {
  if (family.size() != 2) throw InvalidArgument("the linear search takes exactly two members");
  const Box& u = family.members[0].region.box;
  const Box& v = family.members[1].region.box;
  auto t = linear_transitions(u, v, horizon);
  std::optional<std::int64_t> best;
  for (std::int64_t m : t)
    if (std::llabs(m) > gap && (!best || std::llabs(m) < std::llabs(*best) ||
                                (std::llabs(m) == std::llabs(*best) && m > *best)))
      best = m;
  if (!best) return verdict(gap, horizon, std::nullopt);
  int e = static_cast<int>(*best);
  Real xl = std::max<Real>(u.x_lo, std::ldexp(static_cast<Real>(v.x_lo), -e));
  Real xh = std::min<Real>(u.x_hi, std::ldexp(static_cast<Real>(v.x_hi), -e));
  Real yl = std::max<Real>(u.y_lo, std::ldexp(static_cast<Real>(v.y_lo), e));
  Real yh = std::min<Real>(u.y_hi, std::ldexp(static_cast<Real>(v.y_hi), e));
  Witness w;
  w.start = {1, xl + (xh - xl) / 2, yl + (yh - yl) / 2};
  w.times = {0, *best};
  return verdict(gap, horizon, w);
}

}  // namespace

std::string to_string(VerdictKind k) {
  return k == VerdictKind::singular_up_to ? "singular-up-to" : "non-singular-with-bound";
}

VerdictKind verdict_from_string(const std::string& s) {
  if (s == "singular-up-to") return VerdictKind::singular_up_to;
  if (s == "non-singular-with-bound") return VerdictKind::non_singular_with_bound;
  throw InvalidArgument("unknown verdict: " + s);
}

SingularityVerdict check_mutual_singularity(const System& sys, const SetFamily& family,
                                            std::int64_t gap, std::int64_t horizon) {
  validate_family(sys, family);
  if (gap < 1) throw InvalidArgument("gap must be at least 1");
  if (family.size() == 0) throw InvalidArgument("empty family");
  const auto L = static_cast<std::int64_t>(family.size());
  if (horizon < gap * (L + 1))
    throw InvalidArgument("horizon must be at least gap * (members + 1)");
  if (auto g = std::get_if<GluedMap>(&sys)) return search_glued(g->spec, family, gap, horizon);
  if (std::holds_alternative<TranslationMap>(sys))
    return search_translation(family, gap, horizon);
  return search_linear(family, gap, horizon);
}

SingularityVerdict check_mutual_singularity(const DiscreteSystem& sys, std::int64_t gap,
                                            std::int64_t horizon) {
  validate(sys);
  if (gap < 1) throw InvalidArgument("gap must be at least 1");
  const auto L = static_cast<std::int64_t>(sys.names.size());
  if (L == 0) throw InvalidArgument("empty family");
  if (horizon < gap * (L + 1))
    throw InvalidArgument("horizon must be at least gap * (members + 1)");
  for (std::size_t o = 0; o < sys.orbits.size(); ++o) {
    std::vector<std::vector<std::int64_t>> cand(sys.names.size());
    for (const auto& [t, m] : sys.orbits[o].hits)
      if (std::llabs(t) <= horizon)
        for (std::size_t l = 0; l < cand.size(); ++l)
          if (m >> l & 1) cand[l].push_back(t);
    std::vector<std::int64_t> times(cand.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t at) {
      if (at == cand.size()) return true;
      for (std::int64_t t : cand[at]) {
        bool ok = true;
        for (std::size_t j = 0; j < at && ok; ++j) ok = std::llabs(times[j] - t) > gap;
        if (!ok) continue;
        times[at] = t;
        if (rec(at + 1)) return true;
      }
      return false;
    };
    if (rec(0)) {
      Witness w;
      w.orbit = static_cast<std::int64_t>(o);
      w.times = times;
      return verdict(gap, horizon, w);
    }
  }
  return verdict(gap, horizon, std::nullopt);
}

std::vector<std::int64_t> transition_set(const System& sys, const Region& u, const Region& v,
                                         std::int64_t horizon) {
  validate_family(sys, make_family({{"U", u}, {"V", v}}));
  if (std::holds_alternative<LinearMap>(sys)) return linear_transitions(u.box, v.box, horizon);
  if (std::holds_alternative<GluedMap>(sys))
    throw InvalidArgument("transition sets are only computed for single-chart systems");
  std::vector<std::int64_t> out;
  if (u.box.y_hi < v.box.y_lo || v.box.y_hi < u.box.y_lo) return out;
  for (std::int64_t m = -horizon; m <= horizon; ++m)
    if (u.box.x_lo + m <= v.box.x_hi && v.box.x_lo <= u.box.x_hi + m) out.push_back(m);
  return out;
}

bool is_integer_interval(const std::vector<std::int64_t>& times) {
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] != times[i - 1] + 1) return false;
  return true;
}

}  // namespace we
