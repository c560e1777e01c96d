#include "we/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace we {

std::string to_string(const CodingWord& w, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ", ";
    int l = w.letters[i];
    s += l == kInfinity ? std::string("inf") : names.at(static_cast<std::size_t>(l));
  }
  return s + ")";
}

std::vector<Hit> LabeledOrbit::hit_list() const {
  std::vector<Hit> out;
  out.reserve(hits.size());
  for (const auto& [t, m] : hits)
    if (m) out.push_back({t, m});
  return out;
}

bool DiscreteSystem::has_metric() const {
  return !orbits.empty() && std::all_of(orbits.begin(), orbits.end(),
                                        [](const LabeledOrbit& o) { return o.metric(); });
}

void validate(const DiscreteSystem& sys) {
  if (sys.names.size() > 64) throw InvalidArgument("too many letters");
  const std::uint64_t allowed =
      sys.names.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sys.names.size()) - 1;
  for (const auto& o : sys.orbits) {
    for (const auto& [t, m] : o.hits) {
      if (m & ~allowed) throw InvalidArgument("hit references an unknown letter");
      if (o.metric()) {
        auto last = o.first_time + static_cast<std::int64_t>(o.positions.size()) - 1;
        if (t < o.first_time || t > last)
          throw InvalidArgument("metric orbit has a hit outside its trajectory");
      }
    }
  }
}

std::pair<std::int64_t, std::int64_t> window_starts(const LabeledOrbit& o, std::int64_t n) {
  if (!o.metric()) return {-kNoBound, kNoBound};
  return {o.first_time, o.first_time + static_cast<std::int64_t>(o.positions.size()) - n};
}

std::set<CodingWord> enumerate_words(const DiscreteSystem& sys, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  validate(sys);
  std::set<CodingWord> out;
  for (const auto& o : sys.orbits) {
    std::int64_t a0, a1;
    if (o.metric()) {
      std::tie(a0, a1) = window_starts(o, n);
    } else if (o.hits.empty()) {
      a0 = a1 = 0;
    } else {
      a0 = o.hits.begin()->first - n;
      a1 = o.hits.rbegin()->first;
    }
    for (std::int64_t a = a0; a <= a1; ++a) {
      std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
      for (std::int64_t k = 0; k < n; ++k) {
        auto it = o.hits.find(a + k);
        std::uint64_t m = it == o.hits.end() ? 0 : it->second;
        if (!m) options[k].push_back(kInfinity);
        for (int l = 0; l < 64; ++l)
          if (m >> l & 1) options[k].push_back(l);
      }
      std::vector<std::size_t> pick(options.size(), 0);
      while (true) {
        CodingWord w;
        for (std::size_t k = 0; k < options.size(); ++k) w.letters.push_back(options[k][pick[k]]);
        out.insert(std::move(w));
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  }
  return out;
}

DiscreteSystem random_system(std::uint64_t seed, std::size_t orbit_count,
                             std::size_t letters, std::int64_t horizon) {
  if (orbit_count < 1 || letters < 1 || horizon < 1)
    throw InvalidArgument("random_system parameters must be positive");
  if (letters > 64) throw InvalidArgument("too many letters");
  std::mt19937_64 rng(seed);
  DiscreteSystem sys;
  for (std::size_t i = 0; i < letters; ++i) sys.names.push_back("Y" + std::to_string(i + 1));
  std::uniform_int_distribution<std::int64_t> time(-horizon, horizon);
  std::uniform_int_distribution<std::size_t> letter(0, letters - 1);
  std::uniform_int_distribution<std::size_t> count(0, 2 * letters);
  std::bernoulli_distribution extra(0.25);
  for (std::size_t i = 0; i < orbit_count; ++i) {
    LabeledOrbit o;
    std::size_t h = count(rng);
    for (std::size_t j = 0; j < h; ++j) {
      std::uint64_t m = std::uint64_t{1} << letter(rng);
      if (extra(rng)) m |= std::uint64_t{1} << letter(rng);
      o.hits[time(rng)] |= m;
    }
    sys.orbits.push_back(std::move(o));
  }
  return sys;
}

double zone_center(std::size_t l) { return 2.0 + 4.0 * static_cast<double>(l); }

DiscreteSystem random_metric_system(std::uint64_t seed, std::size_t zones, std::size_t points) {
  if (zones < 1 || points < 1) throw InvalidArgument("random_metric_system parameters must be positive");
  if (zones > 64) throw InvalidArgument("too many letters");
  std::mt19937_64 rng(seed);
  DiscreteSystem sys;
  for (std::size_t i = 0; i < zones; ++i) sys.names.push_back("Y" + std::to_string(i + 1));
  std::uniform_real_distribution<double> inner(-0.5, 0.5);
  std::uniform_real_distribution<double> ring(std::nextafter(0.5, 1.0), 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> gap(0, zones);
  std::size_t left = points;
  std::int64_t t0 = 0;
  while (left > 0) {
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(left, 6))(rng);
    left -= len;
    LabeledOrbit o;
    o.first_time = t0;
    t0 += 3;
    // Outside points sit in the gaps between the radius-1 balls.
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t g = gap(rng);
      double base = g == 0 ? -1.0 : zone_center(g - 1) + 1.1;
      o.positions.push_back(base + (g == 0 ? 1.9 : 1.8) * unit(rng));
    }
    for (std::size_t l = 0; l < zones; ++l) {
      if (!coin(rng)) continue;
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
      auto t = o.first_time + static_cast<std::int64_t>(k);
      bool taken = false;
      for (std::size_t m = 0; m < l; ++m) {
        double d = o.positions[k] - zone_center(m);
        if (std::fabs(d) <= 1.0) taken = true;
      }
      if (taken) continue;
      if (coin(rng)) {
        o.positions[k] = zone_center(l) + inner(rng);
        o.hits[t] = std::uint64_t{1} << l;
      } else {
        o.positions[k] = zone_center(l) + (coin(rng) ? 1 : -1) * ring(rng);
      }
    }
    sys.orbits.push_back(std::move(o));
  }
  return sys;
}

namespace {

struct Clique {
  const std::vector<std::uint32_t>& adj;
  std::size_t best = 0;

  void run(std::uint32_t cand, std::size_t size) {
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    while (cand) {
      if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      run(cand & adj[static_cast<std::size_t>(v)], size + 1);
    }
  }
};

}  // namespace

SeparatedCount separated_count(const DiscreteSystem& sys, std::int64_t n, double eps) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (!(eps > 0)) throw InvalidArgument("eps must be positive");
  if (!sys.has_metric()) throw InvalidArgument("system carries no metric");
  validate(sys);

  struct Point {
    const LabeledOrbit* orbit;
    std::int64_t start;
  };
  std::vector<Point> pts;
  for (const auto& o : sys.orbits) {
    auto [a0, a1] = window_starts(o, n);
    for (std::int64_t a = a0; a <= a1; ++a) pts.push_back({&o, a - o.first_time});
  }
  auto separated = [&](const Point& p, const Point& q) {
    for (std::int64_t k = 0; k < n; ++k) {
      double d = p.orbit->positions[static_cast<std::size_t>(p.start + k)] -
                 q.orbit->positions[static_cast<std::size_t>(q.start + k)];
      if (std::fabs(d) > eps) return true;
    }
    return false;
  };

  if (pts.size() <= 20) {
    std::vector<std::uint32_t> adj(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && separated(pts[i], pts[j])) adj[i] |= 1u << j;
    Clique c{adj};
    std::uint32_t all = pts.size() == 32 ? ~0u : (1u << pts.size()) - 1;
    c.run(all, 0);
    return {c.best, true};
  }
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](std::size_t j) { return separated(pts[i], pts[j]); });
    if (ok) chosen.push_back(i);
  }
  return {chosen.size(), false};
}

DiscreteSystem relabel(const DiscreteSystem& sys, const std::vector<int>& map,
                       std::vector<std::string> names) {
  if (map.size() != sys.names.size()) throw InvalidArgument("relabel map has the wrong size");
  for (int v : map)
    if (v >= static_cast<int>(names.size())) throw InvalidArgument("relabel target out of range");
  DiscreteSystem out;
  out.names = std::move(names);
  for (const auto& o : sys.orbits) {
    LabeledOrbit r;
    r.positions = o.positions;
    r.first_time = o.first_time;
    for (const auto& [t, m] : o.hits) {
      std::uint64_t nm = 0;
      for (std::size_t l = 0; l < map.size(); ++l)
        if ((m >> l & 1) && map[l] >= 0) nm |= std::uint64_t{1} << map[l];
      if (nm) r.hits[t] = nm;
    }
    out.orbits.push_back(std::move(r));
  }
  return out;
}

std::int64_t max_hits(const DiscreteSystem& sys, std::uint64_t letters) {
  std::int64_t best = 0;
  for (const auto& o : sys.orbits) {
    std::int64_t c = 0;
    for (const auto& [t, m] : o.hits)
      if (m & letters) ++c;
    best = std::max(best, c);
  }
  return best;
}

}  // namespace we
