#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "we/coding.hpp"

namespace we::test {

// Layout recomputed from the stated rules, independent of the library.
struct RefInterval {
  long double lo, hi;
  long double mid() const { return (lo + hi) / 2; }
};

inline std::int64_t ref_floor_pow(std::int64_t k, double a) {
  long double v = std::pow(static_cast<long double>(k), static_cast<long double>(a));
  auto q = static_cast<std::int64_t>(std::floor(v + 1e-9L));
  while (q > 0 && std::pow(static_cast<long double>(q), 1.0L / a) > k + 1e-12L) --q;
  return q;
}

// Values k_level allowed inside block k1, as [lo, hi].
inline std::pair<std::int64_t, std::int64_t> ref_values(int L, double alpha, int level,
                                                        std::int64_t k1) {
  if (level == 1) return {k1, k1};
  if (level < L - 1) return {k1, 2 * k1};
  return {k1, k1 + ref_floor_pow(k1, alpha - L + 1)};
}

inline RefInterval ref_plateau(int L, double alpha, const std::vector<std::int64_t>& idx) {
  const std::int64_t k1 = idx[0];
  long double top = std::ldexp(2.0L / 3.0L, static_cast<int>(-(k1 - 1)));
  long double bot = top / 2;
  long double w = (top - bot) / 3;
  RefInterval cur{bot + w, bot + 2 * w};
  for (std::size_t j = 1; j < idx.size(); ++j) {
    auto [lo, hi] = ref_values(L, alpha, static_cast<int>(j + 1), k1);
    const std::int64_t m = hi - lo + 1;
    const std::int64_t slot = hi - idx[j];
    long double sub = (cur.hi - cur.lo) / m;
    long double b = cur.lo + sub * slot;
    cur = {b + sub / 3, b + 2 * sub / 3};
  }
  return cur;
}

// Every deepest multi-index with the given k1.
inline std::vector<std::vector<std::int64_t>> ref_deepest(int L, double alpha, std::int64_t k1) {
  std::vector<std::vector<std::int64_t>> out{{k1}};
  for (int level = 2; level <= L - 1; ++level) {
    auto [lo, hi] = ref_values(L, alpha, level, k1);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : out)
      for (std::int64_t v = lo; v <= hi; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

using Word = std::vector<int>;

// All codings of all length-n windows of the orbit of start, by direct
// membership tests on iterates in [t_lo, t_hi].
inline void brute_words(const System& sys, const SetFamily& fam, const ChartPoint& start,
                        std::int64_t n, std::int64_t t_lo, std::int64_t t_hi,
                        std::set<Word>& out) {
  std::vector<std::vector<int>> opts;
  for (std::int64_t t = t_lo; t <= t_hi; ++t) {
    ChartPoint p = iterate(sys, start, t);
    std::vector<int> o;
    for (std::size_t m = 0; m < fam.size(); ++m)
      if (contains(sys, fam.members[m].region, p)) o.push_back(static_cast<int>(m));
    if (o.empty()) o.push_back(kInfinity);
    opts.push_back(o);
  }
  for (std::size_t a = 0; a + static_cast<std::size_t>(n) <= opts.size(); ++a) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
      Word w;
      for (std::size_t k = 0; k < pick.size(); ++k) w.push_back(opts[a + k][pick[k]]);
      out.insert(w);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == opts[a + k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
}

}  // namespace we::test
