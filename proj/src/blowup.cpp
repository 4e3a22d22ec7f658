#include "toro/blowup.hpp"

namespace toro {

BlowupCharts blowup_y(State& s, int ygerm_id) {
  YGerm t = s.ygerms[ygerm_id];
  if (t.blown) throw std::runtime_error("internal: Y germ already blown up");
  s.ygerms[ygerm_id].blown = true;
  int ecomp = s.new_component(Side::TargetY, true);

  YGerm first;
  first.id = (int)s.ygerms.size();
  first.boundary[0] = ecomp;
  first.boundary[1] = t.boundary[1];
  first.parent = ChartRel{ygerm_id, ChartRel::First};
  first.depth = t.depth + 1;
  s.ygerms.push_back(first);

  YGerm second;
  second.id = (int)s.ygerms.size();
  second.boundary[0] = t.boundary[0];
  second.boundary[1] = ecomp;
  second.parent = ChartRel{ygerm_id, ChartRel::Second};
  second.depth = t.depth + 1;
  s.ygerms.push_back(second);

  s.record("YBlowup", Json{{"center_germ", ygerm_id},
                           {"center_type", t.boundary[0] && t.boundary[1] ? "2q" : "1q"},
                           {"charts", Json::array({first.id, second.id})},
                           {"component", s.comp_name(ecomp)}});
  return BlowupCharts{first.id, second.id, ecomp};
}

BlowupCharts blowup_x(State& s, int xgerm_id) {
  XGerm g = s.xgerms[xgerm_id];
  if (!g.active) throw std::runtime_error("internal: blowup of inactive X germ");
  s.xgerms[xgerm_id].active = false;
  int ecomp = s.new_component(Side::SourceX, true);

  XGerm first;
  first.id = (int)s.xgerms.size();
  first.target = g.target;
  first.pull1 = frac_substitute_blowup(g.pull1, Chart::First);
  first.pull2 = frac_substitute_blowup(g.pull2, Chart::First);
  first.boundary[0] = ecomp;
  first.boundary[1] = g.boundary[1];
  first.parent = ChartRel{xgerm_id, ChartRel::First};
  first.depth = g.depth + 1;
  first.birth_exc_axis = 1;
  first.active = true;
  first.axis_shift[0] = 0;
  first.axis_shift[1] = g.axis_shift[1];
  s.xgerms.push_back(first);
  if (first.boundary[1])
    s.germed_points.insert({*first.boundary[1], first.axis_shift[1]});

  XGerm second;
  second.id = (int)s.xgerms.size();
  second.target = g.target;
  second.pull1 = frac_substitute_blowup(g.pull1, Chart::Second);
  second.pull2 = frac_substitute_blowup(g.pull2, Chart::Second);
  second.boundary[0] = g.boundary[0];
  second.boundary[1] = ecomp;
  second.parent = ChartRel{xgerm_id, ChartRel::Second};
  second.depth = g.depth + 1;
  second.birth_exc_axis = 2;
  second.active = true;
  second.axis_shift[0] = g.axis_shift[0];
  second.axis_shift[1] = 0;
  s.xgerms.push_back(second);
  if (second.boundary[0])
    s.germed_points.insert({*second.boundary[0], second.axis_shift[0]});

  s.record("XBlowup", Json{{"germ", xgerm_id},
                           {"charts", Json::array({first.id, second.id})},
                           {"component", s.comp_name(ecomp)}});
  return BlowupCharts{first.id, second.id, ecomp};
}

int recenter_exceptional(State& s, int xgerm_id, int exc_axis, const Rat& c) {
  XGerm& parent = s.xgerms[xgerm_id];
  if (!parent.boundary[exc_axis - 1])
    throw std::runtime_error("internal: recenter axis carries no boundary component");
  XGerm child = recentered_copy(parent, exc_axis, c);
  child.id = (int)s.xgerms.size();
  child.parent = ChartRel{xgerm_id, ChartRel::Recenter, exc_axis == 1 ? 2 : 1, c};
  child.depth = parent.depth + 1;
  child.active = true;
  s.germed_points.insert(
      {*parent.boundary[exc_axis - 1], parent.axis_shift[exc_axis - 1] + c});
  s.xgerms.push_back(child);
  s.record("Recenter", Json{{"side", "X"},
                            {"parent", xgerm_id},
                            {"axis", exc_axis == 1 ? 2 : 1},
                            {"c", rat_str(c)},
                            {"new_germ", child.id}});
  return child.id;
}

int find_or_create_y_recenter(State& s, int parent_y, int shift_axis,
                              const Rat& c) {
  for (auto& y : s.ygerms)
    if (y.parent && y.parent->kind == ChartRel::Recenter &&
        y.parent->parent == parent_y && y.parent->axis == shift_axis &&
        y.parent->c == c)
      return y.id;
  const YGerm& p = s.ygerms[parent_y];
  int keep = shift_axis == 1 ? 2 : 1;
  if (!p.boundary[keep - 1])
    throw std::runtime_error("internal: Y recenter keeps no boundary axis");
  YGerm y;
  y.id = (int)s.ygerms.size();
  y.boundary[keep - 1] = p.boundary[keep - 1];
  y.parent = ChartRel{parent_y, ChartRel::Recenter, shift_axis, c};
  y.depth = p.depth + 1;
  s.ygerms.push_back(y);
  s.record("Recenter", Json{{"side", "Y"},
                            {"parent", parent_y},
                            {"axis", shift_axis},
                            {"c", rat_str(c)},
                            {"new_germ", y.id}});
  return y.id;
}

void settle_target(State& s, XGerm& g) {
  for (int guard = 0; guard < 4; guard++) {
    if (!g.pull1.regular_at_origin() || !g.pull2.regular_at_origin())
      throw std::runtime_error("internal: settle_target on non-regular pulls");
    Rat v1 = g.pull1.value_at_origin();
    Rat v2 = g.pull2.value_at_origin();
    if (v1 == 0 && v2 == 0) return;
    if (v1 != 0 && v2 != 0)
      throw std::runtime_error("internal: germ center maps off the target boundary");
    const YGerm& t = s.ygerms[g.target];
    int j = v1 != 0 ? 1 : 2;  // free coordinate (nonzero value)
    int i = 3 - j;            // axis whose divisor contains the image
    if (!t.boundary[i - 1])
      throw std::runtime_error("internal: germ image on a non-boundary axis of the target");
    Rat c = j == 1 ? v1 : v2;

    if (t.parent && t.parent->kind == ChartRel::Second && i == 2) {
      // Point on the exceptional axis of a Second chart: hop to the First
      // sibling (canonical representation of chart-overlap points), where the
      // image becomes (0, 1/c).
      int yfirst = -1;
      for (auto& y : s.ygerms)
        if (y.parent && y.parent->parent == t.parent->parent &&
            y.parent->kind == ChartRel::First)
          yfirst = y.id;
      if (yfirst < 0) throw std::runtime_error("internal: missing First sibling chart");
      // T coords (s, y2) with s = y1/y2; First coords (y1, y2/y1) = (s*y2, 1/s)
      Frac2 ps = g.pull1, py2 = g.pull2;
      g.pull1 = ps * py2;
      g.pull2 = Frac2{Poly2{Rat(1)}} / ps;
      g.target = yfirst;
      continue;
    }

    // Generic recenter; fold a Recenter parent along the same axis so that
    // each surface point has exactly one Y germ.
    int base = g.target;
    Rat total = c;
    if (t.parent && t.parent->kind == ChartRel::Recenter && t.parent->axis == j) {
      base = t.parent->parent;
      total = t.parent->c + c;
    }
    int ry = find_or_create_y_recenter(s, base, j, total);
    if (j == 1)
      g.pull1 = g.pull1 - Frac2{Poly2{c}};
    else
      g.pull2 = g.pull2 - Frac2{Poly2{c}};
    g.target = ry;
    return;
  }
  throw std::runtime_error("internal: settle_target did not converge");
}

namespace {

long origin_order(const Frac2& f) {
  long o = -1;
  for (auto& [m, c] : f.num().terms()) {
    long d = m.e1 + m.e2;
    if (o < 0 || d < o) o = d;
  }
  return o < 0 ? 1000000 : o;
}

}  // namespace

void retarget(State& s, int xgerm_id, const BlowupCharts& charts) {
  XGerm& g = s.xgerms[xgerm_id];
  bool prefer_second = origin_order(g.pull1) >= origin_order(g.pull2);
  ChartRel::Kind order[2] = {prefer_second ? ChartRel::Second : ChartRel::First,
                             prefer_second ? ChartRel::First : ChartRel::Second};
  for (ChartRel::Kind kind : order) {
    Frac2 np1, np2;
    int chart_germ;
    if (kind == ChartRel::Second) {
      if (g.pull2.is_zero()) continue;
      np1 = g.pull1 / g.pull2;
      np2 = g.pull2;
      chart_germ = charts.chart_second;
    } else {
      if (g.pull1.is_zero()) continue;
      np1 = g.pull1;
      np2 = g.pull2 / g.pull1;
      chart_germ = charts.chart_first;
    }
    if (!np1.regular_at_origin() || !np2.regular_at_origin()) continue;
    g.pull1 = np1;
    g.pull2 = np2;
    g.target = chart_germ;
    settle_target(s, g);
    Validation v = validate_germ(s, g);
    if (!v.ok)
      throw ValidationFailure("retargeted germ invalid: " + v.message);
    s.record("Retarget",
             Json{{"germ", g.id},
                  {"chart", kind == ChartRel::Second ? "Second" : "First"},
                  {"target", g.target}});
    return;
  }
  throw std::runtime_error(
      "internal: retarget failed in both charts (principalization incomplete)");
}

}  // namespace toro
