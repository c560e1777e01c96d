#pragma once

#include <functional>
#include <vector>

#include "we/family.hpp"
#include "we/gluing.hpp"
#include "we/word_counter.hpp"

namespace we::detail {

extern const Real kTwoThirds;
extern const Real kEdge;

// A start of an orbit of a translation-like system: the chart-1 abscissa is
// the phase, shift[r] converts it to chart r + 1.
struct Seed {
  int chart = 1;
  Real y = 0;
  std::vector<Real> shift;
};

Real frac(Real v);
void orbit_hits(const SetFamily& family, const Seed& seed, Real phase, std::vector<Hit>& out);
bool same_shape(const std::vector<Hit>& a, const std::vector<Hit>& b);
Seed plateau_seed(const PlateauIndex& idx, Real y);
Seed phi_seed(const GluingSpec& spec, Real y);
std::vector<Real> y_cells(std::vector<Real> bounds, Real lo, Real hi);
void side_seeds(const GluingSpec& spec, const SetFamily& family,
                const std::function<void(const Seed&)>& emit);
void plateau_seeds(const GluingSpec& spec, std::int64_t cap, bool gaps,
                   const std::function<void(const Seed&)>& emit);
void translation_seeds(const SetFamily& family, const std::function<void(const Seed&)>& emit);
std::vector<Real> breakpoint_phases(const SetFamily& family, const Seed& seed);

}  // namespace we::detail
