#include "toro/model.hpp"

#include <algorithm>

namespace toro {

int State::new_component(Side side, bool exceptional) {
  int ord = 0;
  for (auto& c : components)
    if (c.side == side && c.exceptional == exceptional) ord++;
  ord++;
  std::string name;
  if (side == Side::SourceX)
    name = exceptional ? "Ep" + std::to_string(ord) : "G" + std::to_string(ord);
  else
    name = exceptional ? "Eq" + std::to_string(ord) : "H" + std::to_string(ord);
  components.push_back(ComponentInfo{side, exceptional, ord, name});
  return (int)components.size() - 1;
}

std::vector<int> State::active_xids() const {
  std::vector<int> v;
  for (auto& g : xgerms)
    if (g.active) v.push_back(g.id);
  return v;
}

void State::record(const std::string& kind, Json payload) {
  events.push_back(TraceEvent{(int)events.size(), kind, std::move(payload)});
}

Json State::divisor_json(const WeilDivisor& d) const {
  Json j = Json::object();
  for (auto& [cid, coeff] : d) j[comp_name(cid)] = coeff;
  return j;
}

Frac2 jacobian(const XGerm& g) {
  return frac_partial_derivative(g.pull1, 1) * frac_partial_derivative(g.pull2, 2) -
         frac_partial_derivative(g.pull1, 2) * frac_partial_derivative(g.pull2, 1);
}

Validation validate_germ(const State& s, const XGerm& g) {
  auto fail = [](int clause, const std::string& msg) {
    return Validation{false, clause, msg};
  };

  // (i) regularity of the pullbacks at the center
  if (!g.pull1.regular_at_origin())
    return fail(1, "condition (i): denominator of the first pullback vanishes at the origin");
  if (!g.pull2.regular_at_origin())
    return fail(1, "condition (i): denominator of the second pullback vanishes at the origin");

  const YGerm& t = s.ygerms[g.target];

  // (iv) dominance — checked before (ii)/(iii) since those need J != 0 data
  Frac2 J = jacobian(g);
  if (J.is_zero())
    return fail(4, "condition (a): Jacobian vanishes identically, the germ is not dominant");

  // (ii) boundary matching: pullback of the product of target boundary
  // coordinates vanishes exactly on the declared X axes
  Frac2 prod{Poly2{Rat(1)}};
  for (int ax = 0; ax < 2; ax++) {
    if (!t.boundary[ax]) continue;
    const Frac2& p = ax == 0 ? g.pull1 : g.pull2;
    if (p.is_zero())
      return fail(4, "condition (a): a boundary coordinate pulls back to zero");
    if (p.value_at_origin() != 0)
      return fail(2, std::string("condition (b): pullback of boundary coordinate y") +
                         std::to_string(ax + 1) + " does not vanish at the center");
    prod = prod * p;
  }
  if (!prod.is_zero()) {
    auto sp = monomial_split(prod.num());
    long v1 = sp.e1 - axis_valuation(prod.den(), 1).v;
    long v2 = sp.e2 - axis_valuation(prod.den(), 2).v;
    if (v1 < 0 || v2 < 0)
      return fail(2, "condition (b): boundary pullback has a pole along an axis");
    if ((v1 > 0) != (bool)g.boundary[0])
      return fail(2, v1 > 0 ? "condition (b): boundary pullback vanishes on undeclared axis x1"
                            : "condition (b): boundary pullback does not vanish on declared axis x1");
    if ((v2 > 0) != (bool)g.boundary[1])
      return fail(2, v2 > 0 ? "condition (b): boundary pullback vanishes on undeclared axis x2"
                            : "condition (b): boundary pullback does not vanish on declared axis x2");
    if (eval_origin(sp.residual) == 0)
      return fail(2, "condition (b): residual of the boundary pullback vanishes at the origin");
  } else if (t.boundary_count() > 0) {
    return fail(4, "condition (a): boundary pullback vanishes identically");
  }

  // (iii) smoothness off the boundary: J = (monomial in boundary axes) * unit
  auto sj = monomial_split(J.num());
  long j1 = sj.e1 - axis_valuation(J.den(), 1).v;
  long j2 = sj.e2 - axis_valuation(J.den(), 2).v;
  if (j1 > 0 && !g.boundary[0])
    return fail(3, "condition (c): Jacobian residual " + J.num().str() +
                       " vanishes along the non-boundary axis x1");
  if (j2 > 0 && !g.boundary[1])
    return fail(3, "condition (c): Jacobian residual " + J.num().str() +
                       " vanishes along the non-boundary axis x2");
  if (eval_origin(sj.residual) == 0)
    return fail(3, "condition (c): Jacobian residual vanishes at the origin, violating smoothness off the boundary");

  return Validation{};
}

SortedKey sorted_key(const WeilDivisor& d) {
  SortedKey k;
  for (auto& [cid, c] : d)
    if (c != 0) k.push_back(c);
  std::sort(k.begin(), k.end(), std::greater<long>());
  return k;
}

Cmp compare_divisors(const WeilDivisor& a, const WeilDivisor& b) {
  SortedKey ka = sorted_key(a), kb = sorted_key(b);
  size_t n = std::max(ka.size(), kb.size());
  ka.resize(n, 0);
  kb.resize(n, 0);
  if (ka < kb) return Cmp::Less;
  if (kb < ka) return Cmp::Greater;
  return Cmp::Equal;
}

XGerm recentered_copy(const XGerm& g, int exc_axis, const Rat& c) {
  if (c == 0) throw std::runtime_error("recenter with c = 0 (already a chart origin)");
  int shift = exc_axis == 1 ? 2 : 1;
  XGerm r = g;
  r.pull1 = frac_shift_axis(g.pull1, shift, c);
  r.pull2 = frac_shift_axis(g.pull2, shift, c);
  r.boundary[0].reset();
  r.boundary[1].reset();
  r.boundary[exc_axis - 1] = g.boundary[exc_axis - 1];
  r.birth_exc_axis.reset();
  r.axis_shift[exc_axis - 1] = g.axis_shift[exc_axis - 1] + c;
  r.axis_shift[shift - 1] = 0;
  return r;
}

Rat identify_overlap_point(const State& s, const XGerm& first_chart,
                           const XGerm& second_chart, const Rat& c) {
  if (c == 0)
    throw std::runtime_error("identify_overlap_point: c = 0 is a chart origin");
  if (!first_chart.parent || !second_chart.parent ||
      first_chart.parent->parent != second_chart.parent->parent ||
      first_chart.parent->kind != ChartRel::First ||
      second_chart.parent->kind != ChartRel::Second)
    throw std::runtime_error("identify_overlap_point: germs are not sibling blowup charts");
  Rat inv = 1 / c;
  XGerm a = recentered_copy(first_chart, 1, c);
  XGerm b = recentered_copy(second_chart, 2, inv);
  Validation va = validate_germ(s, a), vb = validate_germ(s, b);
  if (va.ok != vb.ok || (!va.ok && va.clause != vb.clause))
    throw std::runtime_error("identify_overlap_point: recentered charts disagree on validation");
  return inv;
}

}  // namespace toro
