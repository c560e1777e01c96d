#include "we/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace we {
namespace {

const Real kTwoThirds = 2.0L / 3.0L;

Interval level_one(std::int64_t k1) {
  Interval b = block_interval(k1);
  Real w = b.hi - b.lo;
  return {b.lo + w / 3, b.lo + 2 * w / 3};
}

}  // namespace

std::int64_t floor_pow(std::int64_t k, double a) {
  Real r = std::pow(static_cast<Real>(k), static_cast<Real>(a));
  Real near = std::round(r);
  if (std::fabs(r - near) <= 1e-12L * std::max<Real>(1, r)) return static_cast<std::int64_t>(near);
  return static_cast<std::int64_t>(std::floor(r));
}

std::int64_t GluingSpec::value_lo(int level, std::int64_t k1) const {
  if (level < 1 || level > L - 1) throw InvalidArgument("level out of range");
  return k1;
}

std::int64_t GluingSpec::value_hi(int level, std::int64_t k1) const {
  if (level < 1 || level > L - 1) throw InvalidArgument("level out of range");
  if (level == 1) return k1;
  if (level < L - 1) return 2 * k1;
  return k1 + floor_pow(k1, alpha_prime);
}

GluingSpec build_gluing(int L, double alpha, std::int64_t k_max,
                        std::int64_t layout_detail) {
  if (L < 2) throw InvalidArgument("L must be at least 2");
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  if (L == 2 && alpha != 2.0) throw InvalidArgument("L = 2 requires alpha = 2");
  if (L >= 3 && !(alpha > L - 1 && alpha <= L))
    throw InvalidArgument("alpha must lie in (" + std::to_string(L - 1) + ", " +
                          std::to_string(L) + "]");
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
  if (k_max > kMaxKMax)
    throw InvalidArgument("k_max above " + std::to_string(kMaxKMax) +
                          " is not representable");
  if (layout_detail < 0) throw InvalidArgument("layout_detail must be non-negative");

  GluingSpec spec;
  spec.L = L;
  spec.alpha = alpha;
  spec.alpha_prime = alpha - L + 1;
  spec.k_max = k_max;
  spec.layout_detail = layout_detail;

  // Deepest plateaus must stay well above the rounding of y itself.
  Real rel = 1.0L / 3;
  for (int level = 2; level <= L - 1; ++level) rel /= 3.0L * spec.value_count(level, k_max);
  if (rel < 1e-13L)
    throw InvalidArgument("k_max too large for L = " + std::to_string(L) +
                          ": deepest plateaus fall below working precision");
  return spec;
}

Interval child_plateau(const Interval& parent, std::int64_t m, std::int64_t s) {
  Real sub = (parent.hi - parent.lo) / m;
  Real start = parent.lo + sub * s;
  return {start + sub / 3, start + 2 * sub / 3};
}

Interval block_interval(std::int64_t k1) {
  return {std::ldexp(kTwoThirds, static_cast<int>(-k1)),
          std::ldexp(kTwoThirds, static_cast<int>(1 - k1))};
}

bool valid_index(const GluingSpec& spec, const PlateauIndex& index) {
  if (index.empty() || static_cast<int>(index.size()) > spec.L - 1) return false;
  if (index[0] < 1 || index[0] > kMaxKMax) return false;
  for (std::size_t j = 1; j < index.size(); ++j) {
    int level = static_cast<int>(j) + 1;
    if (index[j] < spec.value_lo(level, index[0]) ||
        index[j] > spec.value_hi(level, index[0]))
      return false;
  }
  return true;
}

Interval plateau_interval(const GluingSpec& spec, const PlateauIndex& index) {
  if (!valid_index(spec, index)) throw InvalidArgument("invalid plateau index");
  std::int64_t k1 = index[0];
  Interval cur = level_one(k1);
  for (std::size_t j = 1; j < index.size(); ++j) {
    int level = static_cast<int>(j) + 1;
    cur = child_plateau(cur, spec.value_count(level, k1),
                         spec.value_hi(level, k1) - index[j]);
  }
  return cur;
}

std::optional<PlateauIndex> previous_plateau(const GluingSpec& spec,
                                             const PlateauIndex& index) {
  if (index.size() == 1) return PlateauIndex{index[0] + 1};
  int level = static_cast<int>(index.size());
  if (index.back() < spec.value_hi(level, index[0])) {
    PlateauIndex p = index;
    ++p.back();
    return p;
  }
  PlateauIndex parent(index.begin(), index.end() - 1);
  auto p = previous_plateau(spec, parent);
  if (!p) return std::nullopt;
  p->push_back(spec.value_lo(level, (*p)[0]));
  return p;
}

std::optional<PlateauIndex> next_plateau(const GluingSpec& spec,
                                         const PlateauIndex& index) {
  if (index.size() == 1) {
    if (index[0] == 1) return std::nullopt;
    return PlateauIndex{index[0] - 1};
  }
  int level = static_cast<int>(index.size());
  if (index.back() > spec.value_lo(level, index[0])) {
    PlateauIndex p = index;
    --p.back();
    return p;
  }
  PlateauIndex parent(index.begin(), index.end() - 1);
  auto p = next_plateau(spec, parent);
  if (!p) return std::nullopt;
  p->push_back(spec.value_hi(level, (*p)[0]));
  return p;
}

Real layout_floor(const GluingSpec& spec) { return block_interval(spec.k_max).lo; }

Real phi_eval(const GluingSpec& spec, int level, Real y) {
  if (level < 1 || level > spec.L - 1) throw InvalidArgument("level out of range");
  if (!(y > 0)) throw InvalidArgument("phi is only defined for y > 0");
  if (y > kTwoThirds) return -1;

  int e = 0;
  std::frexp(y * 1.5L, &e);
  std::int64_t k1 = 1 - e;
  while (y <= block_interval(k1).lo) ++k1;
  while (k1 > 1 && y > block_interval(k1).hi) --k1;
  if (k1 > spec.k_max)
    throw LayoutExceeded("y lies below the materialized layout (k_1 = " +
                         std::to_string(k1) + " > k_max = " +
                         std::to_string(spec.k_max) + ")");

  PlateauIndex idx;
  Interval cur;
  std::optional<PlateauIndex> lower, upper;
  bool gap = false;
  for (int i = 1; i <= level; ++i) {
    PlateauIndex cand = idx;
    Interval plateau;
    if (i == 1) {
      cand = {k1};
      plateau = level_one(k1);
    } else {
      std::int64_t m = spec.value_count(i, k1);
      Real sub = (cur.hi - cur.lo) / m;
      auto s = static_cast<std::int64_t>(std::floor((y - cur.lo) / sub));
      s = std::clamp<std::int64_t>(s, 0, m - 1);
      plateau = child_plateau(cur, m, s);
      cand.push_back(spec.value_hi(i, k1) - s);
    }
    if (y < plateau.lo) {
      lower = previous_plateau(spec, cand);
      upper = cand;
      gap = true;
      break;
    }
    if (y > plateau.hi) {
      lower = cand;
      upper = next_plateau(spec, cand);
      gap = true;
      break;
    }
    idx = cand;
    cur = plateau;
  }
  if (!gap) return static_cast<Real>(-idx.back());

  while (static_cast<int>(lower->size()) < level) {
    int l = static_cast<int>(lower->size()) + 1;
    lower->push_back(spec.value_lo(l, (*lower)[0]));
  }
  if (!upper) return static_cast<Real>(-lower->back());
  while (static_cast<int>(upper->size()) < level) {
    int l = static_cast<int>(upper->size()) + 1;
    upper->push_back(spec.value_hi(l, (*upper)[0]));
  }
  Real ya = plateau_interval(spec, *lower).hi;
  Real yb = plateau_interval(spec, *upper).lo;
  Real va = -static_cast<Real>(lower->back());
  Real vb = -static_cast<Real>(upper->back());
  Real u = std::clamp<Real>((y - ya) / (yb - ya), 0, 1);
  return va + (vb - va) * u;
}

void for_each_plateau(const GluingSpec& spec, int level, std::int64_t k1,
                      const std::function<void(const PlateauIndex&)>& fn) {
  if (level < 1 || level > spec.L - 1) throw InvalidArgument("level out of range");
  PlateauIndex idx{k1};
  std::function<void(int)> rec = [&](int l) {
    if (l > level) {
      fn(idx);
      return;
    }
    for (std::int64_t v = spec.value_hi(l, k1); v >= spec.value_lo(l, k1); --v) {
      idx.push_back(v);
      rec(l + 1);
      idx.pop_back();
    }
  };
  rec(2);
}

std::vector<LayoutEntry> layout_entries(const GluingSpec& spec) {
  std::vector<LayoutEntry> out;
  for (std::int64_t k1 = 1; k1 <= spec.k_max; ++k1) {
    int deepest = k1 <= spec.layout_detail ? spec.L - 1 : 1;
    for (int level = 1; level <= deepest; ++level) {
      for_each_plateau(spec, level, k1, [&](const PlateauIndex& idx) {
        Interval iv = plateau_interval(spec, idx);
        out.push_back({idx, iv.lo, iv.hi, -idx.back()});
      });
    }
  }
  return out;
}

}  // namespace we
