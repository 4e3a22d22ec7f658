#include "toro/toroidalize.hpp"

#include <algorithm>

namespace toro {

namespace {

// Residual of p along the given axis: p divided by the largest monomial power
// of that axis coordinate, restricted to the axis.
UniPoly axis_residual(const Poly2& p, int axis) {
  long v = axis_valuation(p, axis).v;
  Poly2 mono = Poly2::term(Rat(1), axis == 1 ? (int)v : 0, axis == 1 ? 0 : (int)v);
  auto q = try_divide(p, mono);
  if (!q) throw std::runtime_error("internal: axis valuation does not divide");
  return restrict_axis(*q, axis);
}

// Spawn germs at the rational zeros of the r_log residual on the freshly
// created exceptional component `comp`.
void scan_residual_points(State& s, int comp) {
  for (int id : s.active_xids()) {
    const XGerm g = s.xgerms[id];  // copy: recentering reallocates the pool
    for (int axis = 1; axis <= 2; axis++) {
      if (!g.boundary[axis - 1] || *g.boundary[axis - 1] != comp) continue;
      if (g.birth_exc_axis == axis && g.parent &&
          g.parent->kind == ChartRel::Second)
        continue;
      Frac2 r = log_jacobian(s, g);
      UniPoly u = axis_residual(r.num(), axis);
      if (u.degree() < 1) continue;
      RationalRoots rr = rational_roots(u);
      if (rr.has_irrational_factor)
        throw IrrationalCenter(
            "residual point with irrational coordinate on " + s.comp_name(comp));
      for (const Rat& c : rr.roots) {
        if (c == 0) continue;
        Rat canon = c + g.axis_shift[axis - 1];
        if (canon == 0 || s.germed_points.count({comp, canon})) continue;
        int rid = recenter_exceptional(s, id, axis, c);
        settle_target(s, s.xgerms[rid]);
        Validation v = validate_germ(s, s.xgerms[rid]);
        if (!v.ok)
          throw ValidationFailure("residual point germ on " + s.comp_name(comp) +
                                  " is invalid: " + v.message);
      }
    }
  }
}

}  // namespace

StepReport algorithm_step(State& s) {
  StepReport rep;
  rep.r_before = ramification_divisor(s);
  s.record("RamificationComputed",
           Json{{"step", s.step}, {"divisor", s.divisor_json(rep.r_before)}});
  if (rep.r_before.empty()) {
    rep.r_after = rep.r_before;
    return rep;
  }

  std::set<int> centers;
  for (int id : s.active_xids()) {
    const XGerm& g = s.xgerms[id];
    for (int axis = 1; axis <= 2; axis++) {
      if (!g.boundary[axis - 1]) continue;
      if (!rep.r_before.count(*g.boundary[axis - 1])) continue;
      if (!component_image(g, axis).onto_point)
        throw std::runtime_error(
            "internal: ramification component is not contracted to a point");
      centers.insert(g.target);
    }
  }

  for (int q : centers) {
    rep.centers.push_back(q);
    rep.center_types.push_back(s.ygerms[q].boundary_count() == 2 ? "2q" : "1q");
    for (int id : s.active_xids()) {
      const XGerm& g = s.xgerms[id];
      if (g.target != q) continue;
      SubcaseData sd = classify_subcase(s, g);
      rep.subcases.push_back(subcase_name(sd.subcase));
      Json j = sd.json(s);
      j["germ"] = id;
      s.record("SubcaseClassified", j);
    }
    int comp_before = (int)s.components.size();
    BlowupCharts charts = blowup_y(s, q);
    rep.x_blowups += canonical_principalize(s, q);
    std::vector<int> targeting;
    for (int id : s.active_xids())
      if (s.xgerms[id].target == q) targeting.push_back(id);
    for (int id : targeting) retarget(s, id, charts);
    for (int cid = comp_before; cid < (int)s.components.size(); cid++) {
      if (s.components[cid].side != Side::SourceX) continue;
      rep.new_components.push_back(cid);
      scan_residual_points(s, cid);
    }
  }

  rep.r_after = ramification_divisor(s);
  s.step++;
  return rep;
}

MonitorVerdict monitor_check(const WeilDivisor& prev, const WeilDivisor& next,
                             const std::vector<std::string>& center_types) {
  MonitorVerdict v;
  Cmp cmp = compare_divisors(next, prev);
  if (cmp == Cmp::Greater) {
    v.ok = false;
    v.violations.push_back("(o): ramification divisor increased");
  }
  bool has_1q = std::find(center_types.begin(), center_types.end(), "1q") !=
                center_types.end();
  if (has_1q && cmp != Cmp::Less) {
    v.ok = false;
    v.violations.push_back("(ii): no strict decrease on a step with a 1q center");
  }
  return v;
}

namespace {

// Clause (i) bound: largest entry sum of a degenerate valuation matrix among
// the non-toroidal active germs; -1 when there is none.
long all2q_step_bound(const State& s) {
  long bound = -1;
  for (int id : s.active_xids()) {
    const XGerm& g = s.xgerms[id];
    if (toroidal_at(s, g)) continue;
    auto m = valuation_matrix(g);
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0) continue;
    bound = std::max(bound, m[0][0] + m[0][1] + m[1][0] + m[1][1]);
  }
  return bound;
}

}  // namespace

RunResult run(State& s, int max_steps) {
  RunResult res;
  res.all2q_bound = all2q_step_bound(s);
  long bound = res.all2q_bound;

  auto finish = [&](int step) {
    for (int id : s.active_xids())
      if (!toroidal_at(s, s.xgerms[id]))
        throw std::runtime_error(
            "internal: empty ramification divisor on a non-toroidal germ");
    res.done = true;
    s.record("Done", Json{{"steps", step}});
  };

  long consecutive_2q = 0;
  for (int step = 0; step < max_steps; step++) {
    StepReport rep = algorithm_step(s);
    if (rep.centers.empty()) {
      finish(step);
      return res;
    }

    MonitorVerdict mv = monitor_check(rep.r_before, rep.r_after, rep.center_types);
    std::vector<std::string> msgs = mv.violations;
    bool has_1q = std::find(rep.center_types.begin(), rep.center_types.end(),
                            "1q") != rep.center_types.end();
    if (has_1q) {
      // a 1q step closes the current all-2q run; the clause (i) bound is
      // recomputed from the new state
      consecutive_2q = 0;
      bound = all2q_step_bound(s);
    } else {
      consecutive_2q++;
      if (bound >= 0 && consecutive_2q > bound)
        msgs.push_back("(i): run of all-2q steps exceeded the degenerate-matrix bound");
    }
    s.record("MonitorCheck", Json{{"step", s.step - 1},
                                  {"ok", msgs.empty()},
                                  {"messages", msgs}});
    if (!msgs.empty()) {
      res.monitor_ok = false;
      for (auto& m : msgs)
        res.monitor_messages.push_back("step " + std::to_string(s.step - 1) +
                                       ": " + m);
    }
    res.steps.push_back(std::move(rep));
  }
  // Accept a run that reaches the toroidal state exactly at the limit.
  StepReport last = algorithm_step(s);
  if (last.centers.empty()) {
    finish(max_steps);
    return res;
  }
  throw NonTermination("toroidalization did not finish within the step limit");
}

}  // namespace toro
