#include "we/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "we/coding.hpp"
#include "we/singularity.hpp"

namespace we {

namespace {

constexpr std::uint64_t bit(std::size_t l) { return std::uint64_t{1} << l; }

std::uint64_t letter_set(const CodingWord& w) {
  std::uint64_t s = 0;
  for (int l : w.letters)
    if (l != kInfinity) s |= bit(static_cast<std::size_t>(l));
  return s;
}

// Keeps the letters in `keep`, renumbered in order.
DiscreteSystem restrict_to(const DiscreteSystem& sys, std::uint64_t keep) {
  std::vector<int> map;
  std::vector<std::string> names;
  for (std::size_t l = 0; l < sys.names.size(); ++l) {
    if (keep >> l & 1) {
      map.push_back(static_cast<int>(names.size()));
      names.push_back(sys.names[l]);
    } else {
      map.push_back(-1);
    }
  }
  return relabel(sys, map, std::move(names));
}

std::uint64_t all_letters(const DiscreteSystem& sys) {
  return sys.names.size() == 64 ? ~std::uint64_t{0} : bit(sys.names.size()) - 1;
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  void check(bool ok, const std::string& name, std::int64_t n, const DiscreteSystem& sys,
             const std::string& detail) {
    ++r_.checks;
    if (!ok) r_.failures.push_back({name, n, detail, sys});
  }

 private:
  SuiteReport& r_;
};

std::string le(const BigCount& a, const BigCount& b) {
  return to_string(a) + " > " + to_string(b);
}

// Coarse family whose members contain the fine ones: fine letters are mapped
// onto fewer letters and each coarse member gets extra points of its own.
DiscreteSystem coarsen(const DiscreteSystem& fine, std::mt19937_64& rng, std::int64_t horizon) {
  const std::size_t k = fine.names.size();
  const std::size_t c = std::uniform_int_distribution<std::size_t>(1, k)(rng);
  std::vector<int> map(k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c; ++i) names.push_back("F" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i)
    map[i] = static_cast<int>(i < c ? i : std::uniform_int_distribution<std::size_t>(0, c - 1)(rng));
  DiscreteSystem coarse = relabel(fine, map, names);
  DiscreteSystem extra = random_system(rng(), fine.orbits.size(), c, horizon);
  for (std::size_t o = 0; o < coarse.orbits.size(); ++o)
    for (const auto& [t, m] : extra.orbits[o].hits)
      if (std::bernoulli_distribution(0.3)(rng)) coarse.orbits[o].hits[t] |= m;
  return coarse;
}

// Keeps only the first visit of each orbit to the union of letters 0 and 1.
DiscreteSystem wander_first_two(DiscreteSystem sys) {
  for (auto& o : sys.orbits) {
    bool seen = false;
    for (auto it = o.hits.begin(); it != o.hits.end();) {
      if (it->second & 3) {
        if (seen) it->second &= ~std::uint64_t{3};
        seen = true;
      }
      it = it->second ? std::next(it) : o.hits.erase(it);
    }
  }
  return sys;
}

// Drops the hits of letter y that would share a time with another letter
// before or after moving them by s, then returns (base, moved).
std::pair<DiscreteSystem, DiscreteSystem> shift_letter(DiscreteSystem sys, std::size_t y,
                                                      std::int64_t s) {
  const std::uint64_t yb = bit(y);
  for (auto& o : sys.orbits) {
    auto others = [&](std::int64_t t) {
      auto it = o.hits.find(t);
      return it == o.hits.end() ? std::uint64_t{0} : it->second & ~yb;
    };
    for (auto& [t, m] : o.hits)
      if ((m & yb) && (others(t) || others(t + s))) m &= ~yb;
    std::erase_if(o.hits, [](const auto& kv) { return kv.second == 0; });
  }
  DiscreteSystem moved = sys;
  for (auto& o : moved.orbits) {
    std::map<std::int64_t, std::uint64_t> h;
    for (const auto& [t, m] : o.hits) {
      if (m & ~yb) h[t] |= m & ~yb;
      if (m & yb) h[t + s] |= yb;
    }
    o.hits = std::move(h);
  }
  return {std::move(sys), std::move(moved)};
}

// Pairwise disjoint letters visited at most once per orbit, and no orbit
// visiting every letter with all pairwise gaps above m.
DiscreteSystem non_singular(DiscreteSystem sys, std::int64_t m) {
  const std::size_t L = sys.names.size();
  for (auto& o : sys.orbits) {
    std::uint64_t seen = 0;
    std::map<std::int64_t, std::uint64_t> h;
    for (const auto& [t, mask] : o.hits) {
      std::uint64_t left = mask & ~seen;
      if (!left) continue;
      std::uint64_t one = left & (~left + 1);
      seen |= one;
      h[t] = one;
    }
    if (std::popcount(seen) == static_cast<int>(L)) {
      bool spread = true;
      for (auto a = h.begin(); a != h.end() && spread; ++a)
        for (auto b = std::next(a); b != h.end() && spread; ++b)
          spread = b->first - a->first > m;
      if (spread) h.erase(std::prev(h.end()));
    }
    o.hits = std::move(h);
  }
  return sys;
}

void singular_reduction(Recorder& rec, const DiscreteSystem& sys, std::int64_t M,
                        std::int64_t n) {
  const std::size_t L = sys.names.size();
  const std::uint64_t full = all_letters(sys);
  const auto words = enumerate_words(sys, n);
  std::map<std::uint64_t, BigCount> by_set;
  std::map<std::pair<std::size_t, std::size_t>, BigCount> close;
  for (const auto& w : words) {
    std::uint64_t s = letter_set(w);
    if (s != full) {
      by_set[s] += 1;
      continue;
    }
    std::vector<std::int64_t> pos(L);
    for (std::size_t k = 0; k < w.letters.size(); ++k)
      if (w.letters[k] != kInfinity) pos[static_cast<std::size_t>(w.letters[k])] = static_cast<std::int64_t>(k);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j)
        if (i != j && std::llabs(pos[i] - pos[j]) <= M) close[{i, j}] += 1;
  }
  BigCount best = 0;
  for (const auto& [s, c] : by_set) best = std::max(best, c);
  for (const auto& [p, c] : close) best = std::max(best, c);
  const BigCount C = (BigCount(1) << L) - 1 + BigCount(L * (L - 1) / 2);
  BigCount total = words.size();
  rec.check(total <= C * best, "singular-reduction-C", n, sys,
            le(total, BigCount(C * best)));

  for (const auto& [s, c] : by_set) {
    BigCount sub = count_exact(restrict_to(sys, s), n);
    rec.check(c <= sub, "singular-reduction-subfamily", n, sys, le(c, sub));
  }
  for (const auto& [p, c] : close) {
    BigCount rest = count_exact(restrict_to(sys, full & ~bit(p.first)), n);
    BigCount bound = 2 * M * rest;
    rec.check(c <= bound, "singular-reduction-2M", n, sys, le(c, bound));
  }
}

}  // namespace

SuiteReport lemma_suite(std::uint64_t seed, std::size_t systems, std::int64_t n_max) {
  SuiteReport r;
  r.suite = "lemmas";
  r.systems = systems;
  Recorder rec(r);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < systems; ++i) {
    const std::size_t orbits = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t letters = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::int64_t horizon = std::uniform_int_distribution<std::int64_t>(4, 12)(rng);
    const DiscreteSystem sys = random_system(rng(), orbits, letters, horizon);

    const DiscreteSystem coarse = coarsen(sys, rng, horizon);
    const DiscreteSystem unite = relabel(sys, std::vector<int>(letters, 0), {"U"});
    const DiscreteSystem wand = wander_first_two(sys);
    const DiscreteSystem drop1 = restrict_to(wand, all_letters(wand) & ~bit(0));
    const DiscreteSystem drop2 = restrict_to(wand, all_letters(wand) & ~bit(1));

    std::int64_t s = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
    if (std::bernoulli_distribution(0.5)(rng)) s = -s;
    const std::size_t y = std::uniform_int_distribution<std::size_t>(0, letters - 1)(rng);
    const auto [base, moved] = shift_letter(sys, y, s);

    const std::int64_t M = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    const DiscreteSystem ns = non_singular(sys, M);
    const std::int64_t ns_horizon = std::max<std::int64_t>(horizon, M * (letters + 1));
    rec.check(check_mutual_singularity(ns, M, ns_horizon).kind ==
                  VerdictKind::non_singular_with_bound,
              "singular-reduction-setup", 0, ns, "constructed system is singular");

    const std::int64_t M_union = max_hits(coarse, all_letters(coarse));
    const BigCount refine_c = boost::multiprecision::pow(BigCount(letters + 1),
                                                         static_cast<unsigned>(M_union));

    for (std::int64_t n = 1; n <= n_max; ++n) {
      const BigCount a = count_exact(sys, n);
      rec.check(a == BigCount(enumerate_words(sys, n).size()), "enumerate-vs-count", n, sys,
                "enumerated " + std::to_string(enumerate_words(sys, n).size()) + ", counted " +
                    to_string(a));

      const BigCount ac = count_exact(coarse, n);
      rec.check(a <= refine_c * ac, "monotonicity", n, sys, le(a, BigCount(refine_c * ac)));

      const BigCount au = count_exact(unite, n);
      rec.check(au <= a, "additivity", n, sys, le(au, a));

      const BigCount aw = count_exact(wand, n);
      const BigCount split = count_exact(drop1, n) + count_exact(drop2, n);
      rec.check(aw <= split, "wandering-additivity", n, wand, le(aw, split));

      const BigCount am = count_exact(moved, n);
      const BigCount along = count_exact(base, n + (s < 0 ? -s : s));
      rec.check(am <= along, "iterate-shift", n, base, le(am, along));

      singular_reduction(rec, ns, M, n);
    }
  }
  return r;
}

SuiteReport sandwich_suite(std::uint64_t seed, std::size_t systems) {
  SuiteReport r;
  r.suite = "sandwich";
  r.systems = systems;
  Recorder rec(r);
  std::mt19937_64 rng(seed);
  // Members sit 1/2 inside their radius-1 wandering balls; the grid cells
  // are narrower than the second scale.
  const double eps_inner = 0.45;
  const double cell = 0.45;
  const double eps_cover = 0.5;
  for (std::size_t i = 0; i < systems; ++i) {
    const std::size_t zones = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const DiscreteSystem sys = random_metric_system(rng(), zones, 12);

    double lo = 0, hi = 0;
    bool first = true;
    std::size_t longest = 0;
    for (const auto& o : sys.orbits) {
      longest = std::max(longest, o.positions.size());
      for (double p : o.positions) {
        lo = first ? p : std::min(lo, p);
        hi = first ? p : std::max(hi, p);
        first = false;
      }
    }
    const auto cells = static_cast<std::size_t>(std::floor((hi - lo) / cell)) + 1;
    DiscreteSystem grid;
    for (std::size_t c = 0; c + 1 < cells; ++c) grid.names.push_back("C" + std::to_string(c + 1));
    for (const auto& o : sys.orbits) {
      LabeledOrbit g;
      g.first_time = o.first_time;
      g.positions = o.positions;
      for (std::size_t k = 0; k < o.positions.size(); ++k) {
        auto c = static_cast<std::size_t>(std::floor((o.positions[k] - lo) / cell));
        if (c + 1 < cells) g.hits[o.first_time + static_cast<std::int64_t>(k)] = bit(c);
      }
      grid.orbits.push_back(std::move(g));
    }

    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(longest); ++n) {
      const SeparatedCount s_in = separated_count(sys, n, eps_inner);
      rec.check(s_in.exact, "separated-exact", n, sys, "separated count was not exact");
      std::map<std::uint64_t, std::size_t> by_set;
      for (const auto& w : enumerate_words(sys, n)) ++by_set[letter_set(w)];
      for (const auto& [set, c] : by_set)
        rec.check(c <= s_in.value, "words-below-separated", n, sys,
                  std::to_string(c) + " > " + std::to_string(s_in.value));

      const SeparatedCount s_out = separated_count(sys, n, eps_cover);
      const BigCount cover = count_exact(grid, n);
      rec.check(BigCount(s_out.value) <= cover, "separated-below-cover", n, grid,
                std::to_string(s_out.value) + " > " + to_string(cover));
    }
  }
  return r;
}

std::vector<std::string> suite_names() { return {"lemmas", "sandwich"}; }

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t systems) {
  if (name == "lemmas") return lemma_suite(seed, systems ? systems : 200);
  if (name == "sandwich") return sandwich_suite(seed, systems ? systems : 50);
  throw InvalidArgument("unknown suite: " + name);
}

}  // namespace we
