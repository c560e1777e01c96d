#include "we/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace we {
namespace {

using nlohmann::json;

constexpr int kVersion = 1;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("unexpected JSON layout: ") + e.what());
  }
}

void check_version(const json& j) {
  if (j.contains("version") && j.at("version").get<int>() != kVersion)
    throw InvalidArgument("unsupported document version");
}

json point_json(const ChartPoint& p) {
  return {{"chart", p.chart}, {"x", to_hex(p.x)}, {"y", to_hex(p.y)}};
}

ChartPoint point_from(const json& j) {
  return {j.at("chart").get<int>(), from_hex(j.at("x").get<std::string>()),
          from_hex(j.at("y").get<std::string>())};
}

}  // namespace

std::string to_json(const GluingSpec& spec) {
  json layout = json::array();
  for (const auto& e : layout_entries(spec))
    layout.push_back(
        {{"index", e.index}, {"lo", to_hex(e.lo)}, {"hi", to_hex(e.hi)}, {"value", -e.value}});
  json j = {{"version", kVersion},      {"L", spec.L},
            {"alpha", spec.alpha},      {"alpha_prime", spec.alpha_prime},
            {"k_max", spec.k_max},      {"layout_detail", spec.layout_detail},
            {"layout", std::move(layout)}};
  return j.dump(1) + "\n";
}

GluingSpec gluing_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    check_version(j);
    GluingSpec spec = build_gluing(j.at("L").get<int>(), j.at("alpha").get<double>(),
                                   j.at("k_max").get<std::int64_t>(),
                                   j.value("layout_detail", std::int64_t{16}));
    if (j.contains("layout")) {
      const json& stored = j.at("layout");
      auto expect = layout_entries(spec);
      if (stored.size() != expect.size()) throw InvalidArgument("layout table has the wrong size");
      for (std::size_t i = 0; i < expect.size(); ++i) {
        const json& e = stored[i];
        if (e.at("index").get<PlateauIndex>() != expect[i].index ||
            from_hex(e.at("lo").get<std::string>()) != expect[i].lo ||
            from_hex(e.at("hi").get<std::string>()) != expect[i].hi ||
            e.at("value").get<std::int64_t>() != -expect[i].value)
          throw InvalidArgument("layout entry " + std::to_string(i) +
                                " does not match the parameters");
      }
    }
    return spec;
  });
}

std::string to_json(const SetFamily& family) {
  json members = json::array();
  for (const auto& m : family.members) {
    const Box& b = m.region.box;
    members.push_back(
        {{"name", m.name}, {"chart", m.region.chart}, {"box", {b.x_lo, b.x_hi, b.y_lo, b.y_hi}}});
  }
  return json{{"members", std::move(members)}}.dump(1) + "\n";
}

SetFamily family_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    std::vector<Member> ms;
    for (const auto& m : j.at("members")) {
      auto b = m.at("box").get<std::vector<double>>();
      if (b.size() != 4) throw InvalidArgument("box needs four numbers");
      ms.push_back({m.at("name").get<std::string>(),
                    {m.value("chart", 1), {b[0], b[1], b[2], b[3]}}});
    }
    return make_family(std::move(ms));
  });
}

std::string to_json(const DiscreteSystem& sys) {
  json orbits = json::array();
  for (const auto& o : sys.orbits) {
    json hits = json::object();
    for (const auto& [t, m] : o.hits) {
      json names = json::array();
      for (std::size_t l = 0; l < sys.names.size(); ++l)
        if (m >> l & 1) names.push_back(sys.names[l]);
      hits[std::to_string(t)] = std::move(names);
    }
    json jo = {{"hits", std::move(hits)}};
    if (o.metric()) jo["trajectory"] = {{"first_time", o.first_time}, {"positions", o.positions}};
    orbits.push_back(std::move(jo));
  }
  json j = {{"version", kVersion}, {"names", sys.names}, {"orbits", std::move(orbits)}};
  if (sys.has_metric()) j["metric"] = "line";
  return j.dump(1) + "\n";
}

DiscreteSystem system_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    check_version(j);
    DiscreteSystem sys;
    sys.names = j.at("names").get<std::vector<std::string>>();
    for (const auto& jo : j.at("orbits")) {
      LabeledOrbit o;
      for (const auto& [key, names] : jo.at("hits").items()) {
        std::size_t used = 0;
        std::int64_t t = 0;
        try {
          t = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || key.empty()) throw InvalidArgument("bad hit time: " + key);
        std::uint64_t m = 0;
        for (const auto& name : names) {
          auto it = std::find(sys.names.begin(), sys.names.end(), name.get<std::string>());
          if (it == sys.names.end()) throw InvalidArgument("unknown letter in hits");
          m |= std::uint64_t{1} << (it - sys.names.begin());
        }
        if (m) o.hits[t] = m;
      }
      if (jo.contains("trajectory")) {
        o.first_time = jo.at("trajectory").at("first_time").get<std::int64_t>();
        o.positions = jo.at("trajectory").at("positions").get<std::vector<double>>();
      }
      sys.orbits.push_back(std::move(o));
    }
    validate(sys);
    return sys;
  });
}

std::string to_csv(const GrowthSeries& series) {
  std::string out = "n,count,strategy\n";
  for (const auto& r : series.rows)
    out += std::to_string(r.n) + "," + to_string(r.count) + "," + to_string(r.strategy) + "\n";
  return out;
}

GrowthSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,count,strategy")
    throw InvalidArgument("expected header n,count,strategy");
  GrowthSeries s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto a = line.find(','), b = line.rfind(',');
    if (a == std::string::npos || a == b) throw InvalidArgument("bad CSV row: " + line);
    std::string ns = line.substr(0, a);
    if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("bad n in row: " + line);
    s.append({std::stoll(ns), count_from_string(line.substr(a + 1, b - a - 1)),
              strategy_from_string(line.substr(b + 1))});
  }
  return s;
}

std::string to_json(const ExponentEstimate& est) {
  json j = {{"exponent", est.exponent}, {"method", to_string(est.method)},
            {"n_min", est.n_min},       {"n_max", est.n_max},
            {"residual", est.residual}};
  return j.dump(1) + "\n";
}

ExponentEstimate estimate_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    ExponentEstimate e;
    e.exponent = j.at("exponent").get<double>();
    e.method = fit_method_from_string(j.at("method").get<std::string>());
    e.n_min = j.at("n_min").get<std::int64_t>();
    e.n_max = j.at("n_max").get<std::int64_t>();
    e.residual = j.at("residual").get<double>();
    return e;
  });
}

std::string to_json(const SingularityVerdict& v) {
  json j = {{"verdict", to_string(v.kind)},
            {"bound", v.bound},
            {"horizon", v.horizon},
            {"searched_k1", v.searched_k1},
            {"witness", nullptr}};
  if (v.witness) {
    json w = {{"times", v.witness->times}};
    if (v.witness->orbit >= 0)
      w["orbit"] = v.witness->orbit;
    else
      w["start"] = point_json(v.witness->start);
    j["witness"] = std::move(w);
  }
  return j.dump(1) + "\n";
}

SingularityVerdict verdict_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    SingularityVerdict v;
    v.kind = verdict_from_string(j.at("verdict").get<std::string>());
    v.bound = j.at("bound").get<std::int64_t>();
    v.horizon = j.at("horizon").get<std::int64_t>();
    v.searched_k1 = j.value("searched_k1", std::int64_t{0});
    const json& w = j.at("witness");
    if (!w.is_null()) {
      Witness out;
      out.times = w.at("times").get<std::vector<std::int64_t>>();
      if (w.contains("orbit")) out.orbit = w.at("orbit").get<std::int64_t>();
      if (w.contains("start")) out.start = point_from(w.at("start"));
      v.witness = std::move(out);
    }
    return v;
  });
}

DocumentKind document_kind(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) return DocumentKind::unknown;
  if (j.contains("alpha")) return DocumentKind::gluing;
  if (j.contains("orbits")) return DocumentKind::system;
  if (j.contains("members")) return DocumentKind::family;
  return DocumentKind::unknown;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("failed writing " + path);
}

}  // namespace we
