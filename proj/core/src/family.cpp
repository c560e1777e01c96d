#include "we/family.hpp"

#include <cmath>
#include <set>

namespace we {

std::optional<std::size_t> SetFamily::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> SetFamily::names() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.name);
  return out;
}

SetFamily make_family(std::vector<Member> members) {
  if (members.size() > kMaxLetters) throw InvalidArgument("too many family members");
  std::set<std::string> seen;
  for (const auto& m : members) {
    if (m.name.empty() || m.name == "inf") throw InvalidArgument("bad member name '" + m.name + "'");
    if (!seen.insert(m.name).second) throw InvalidArgument("duplicate member name " + m.name);
    const Box& b = m.region.box;
    if (!std::isfinite(b.x_lo) || !std::isfinite(b.x_hi) || !std::isfinite(b.y_lo) ||
        !std::isfinite(b.y_hi) || b.x_lo > b.x_hi || b.y_lo > b.y_hi)
      throw InvalidArgument("bad box for member " + m.name);
    if (m.region.chart < 1) throw InvalidArgument("bad chart for member " + m.name);
  }
  return SetFamily{std::move(members)};
}

SetFamily standard_family(int L) {
  if (L < 1) throw InvalidArgument("L must be positive");
  const double w = 2.0 / 3.0;
  std::vector<Member> ms;
  for (int i = 1; i <= L; ++i) ms.push_back({"U" + std::to_string(i), {i, {-w, w, -w, w}}});
  return make_family(std::move(ms));
}

bool is_standard_family(const SetFamily& family, int L) {
  if (static_cast<int>(family.size()) != L) return false;
  const SetFamily ref = standard_family(L);
  for (int i = 0; i < L; ++i)
    if (family.members[i].region != ref.members[i].region) return false;
  return true;
}

SetFamily axes_family() {
  return make_family({{"Y1", {1, {-0.25, 0.25, 0.75, 1.25}}},
                      {"Y2", {1, {0.75, 1.25, -0.25, 0.25}}}});
}

void validate_family(const System& sys, const SetFamily& family) {
  for (const auto& m : family.members) {
    if (m.region.chart > chart_count(sys))
      throw InvalidArgument("member " + m.name + " uses chart " +
                            std::to_string(m.region.chart) + " which the system lacks");
    if (std::holds_alternative<LinearMap>(sys)) {
      const Box& b = m.region.box;
      if (b.x_lo <= 0 && b.x_hi >= 0 && b.y_lo <= 0 && b.y_hi >= 0)
        throw InvalidArgument("member " + m.name + " contains the fixed point (0, 0)");
    }
  }
}

bool contains(const Box& box, Real x, Real y) {
  return box.x_lo <= x && x <= box.x_hi && box.y_lo <= y && y <= box.y_hi;
}

bool contains(const System& sys, const Region& region, const ChartPoint& p) {
  if (auto g = std::get_if<GluedMap>(&sys)) {
    if (p.chart != region.chart && !(p.y > 0)) return false;
    ChartPoint q = to_chart(g->spec, p, region.chart);
    return contains(region.box, q.x, q.y);
  }
  return p.chart == region.chart && contains(region.box, p.x, p.y);
}

}  // namespace we
