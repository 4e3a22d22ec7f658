#pragma once
// Canonical principalization of the center ideal (pullbacks of the target
// germ's coordinates) over all X germs targeting a given Y germ: blow up the
// finitely many non-principal points, repeating until the ideal is locally
// principal everywhere.

#include "toro/model.hpp"

namespace toro {

struct IrrationalCenter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GcdResiduals {
  Poly2 d;        // gcd of the pullback numerators
  Poly2 h1, h2;   // coprime residuals
};
GcdResiduals center_residuals(const XGerm& g);

// The ideal (pull1, pull2) is principal at the chart origin iff the gcd
// residuals do not both vanish there.
bool is_principal_at(const XGerm& g);

struct PointOfInterest {
  int xgerm = -1;
  bool origin = true;
  int axis = 0;  // non-origin: boundary axis carrying the point
  Rat c = 0;     // non-origin: coordinate on the free axis
};

// Non-principal points over all active germs targeting `y_center`, in
// canonical order (germ id; origin first, then axis 1, axis 2 with roots
// ascending). Points on chart overlaps are reported once, in the chart where
// the component's coordinate is canonical; points already carrying a germ are
// skipped. Throws IrrationalCenter when a non-principal point has an
// irrational coordinate.
std::vector<PointOfInterest> nonprincipal_points(const State& s, int y_center);

// Blow up non-principal points until none remain; returns the number of
// blowups performed. Throws NonTermination if the loop does not finish.
int canonical_principalize(State& s, int y_center);

}  // namespace toro
