#include "toro/principalize.hpp"

#include "toro/blowup.hpp"

namespace toro {

GcdResiduals center_residuals(const XGerm& g) {
  const Poly2& n1 = g.pull1.num();
  const Poly2& n2 = g.pull2.num();
  if (n1.is_zero() || n2.is_zero())
    throw std::runtime_error("center_residuals: zero pullback numerator");
  GcdResiduals r;
  r.d = gcd2(n1, n2);
  auto q1 = try_divide(n1, r.d);
  auto q2 = try_divide(n2, r.d);
  if (!q1 || !q2)
    throw std::runtime_error("internal: gcd does not divide its arguments");
  r.h1 = *q1;
  r.h2 = *q2;
  return r;
}

bool is_principal_at(const XGerm& g) {
  GcdResiduals r = center_residuals(g);
  return eval_origin(r.h1) != 0 || eval_origin(r.h2) != 0;
}

std::vector<PointOfInterest> nonprincipal_points(const State& s, int y_center) {
  std::vector<PointOfInterest> pts;
  std::set<std::pair<int, Rat>> seen;
  for (int id : s.active_xids()) {
    const XGerm& g = s.xgerms[id];
    if (g.target != y_center) continue;
    GcdResiduals r = center_residuals(g);
    if (eval_origin(r.h1) == 0 && eval_origin(r.h2) == 0)
      pts.push_back(PointOfInterest{id, true, 0, 0});
    for (int axis = 1; axis <= 2; axis++) {
      if (!g.boundary[axis - 1]) continue;
      // On the overlap of sibling blowup charts the exceptional coordinate is
      // canonical in the First chart; the Second chart skips it.
      if (g.birth_exc_axis == axis && g.parent &&
          g.parent->kind == ChartRel::Second)
        continue;
      UniPoly u1 = restrict_axis(r.h1, axis);
      UniPoly u2 = restrict_axis(r.h2, axis);
      UniPoly gu;
      if (u1.is_zero() && u2.is_zero())
        throw std::runtime_error("internal: coprime residuals both vanish on an axis");
      if (u1.is_zero())
        gu = u2;
      else if (u2.is_zero())
        gu = u1;
      else
        gu = uni_gcd(u1, u2);
      if (gu.degree() < 1) continue;
      RationalRoots rr = rational_roots(gu);
      if (rr.has_irrational_factor)
        throw IrrationalCenter(
            "non-principal point with irrational coordinate on axis " +
            std::to_string(axis) + " of germ " + std::to_string(id));
      int comp = *g.boundary[axis - 1];
      for (const Rat& c : rr.roots) {
        if (c == 0) continue;  // the chart origin, reported separately
        Rat canon = c + g.axis_shift[axis - 1];
        if (canon == 0) continue;  // origin of the canonical chart
        if (s.germed_points.count({comp, canon}) || seen.count({comp, canon}))
          continue;
        seen.insert({comp, canon});
        pts.push_back(PointOfInterest{id, false, axis, c});
      }
    }
  }
  return pts;
}

int canonical_principalize(State& s, int y_center) {
  int total = 0;
  for (int pass = 0; pass < 512; pass++) {
    std::vector<PointOfInterest> pts = nonprincipal_points(s, y_center);
    if (pts.empty()) return total;
    for (const PointOfInterest& p : pts) {
      if (p.origin) {
        blowup_x(s, p.xgerm);
      } else {
        int rid = recenter_exceptional(s, p.xgerm, p.axis, p.c);
        blowup_x(s, rid);
      }
      total++;
    }
  }
  throw NonTermination("canonical principalization did not terminate");
}

}  // namespace toro
