#include "toro/ramification.hpp"

namespace toro {

Frac2 log_jacobian(const State& s, const XGerm& g) {
  Validation v = validate_germ(s, g);
  if (!v.ok) throw std::runtime_error("log_jacobian on invalid germ: " + v.message);
  Frac2 r = jacobian(g);
  for (int ax = 0; ax < 2; ax++)
    if (g.boundary[ax]) r = r * Frac2{Poly2::var(ax + 1)};
  const YGerm& t = s.ygerms[g.target];
  for (int ax = 0; ax < 2; ax++)
    if (t.boundary[ax]) r = r / (ax == 0 ? g.pull1 : g.pull2);
  return r;
}

bool toroidal_at(const State& s, const XGerm& g) {
  Frac2 r = log_jacobian(s, g);
  auto sn = monomial_split(r.num());
  if (sn.e1 - axis_valuation(r.den(), 1).v != 0) return false;
  if (sn.e2 - axis_valuation(r.den(), 2).v != 0) return false;
  return eval_origin(sn.residual) != 0;
}

long component_coefficient(const State& s, const XGerm& g, int axis) {
  if (!g.boundary[axis - 1])
    throw std::runtime_error("component_coefficient: axis is not a boundary axis");
  Frac2 r = log_jacobian(s, g);
  ExtInt v = frac_axis_valuation(r, axis);
  if (v.inf) throw std::runtime_error("component_coefficient: r_log vanishes identically");
  return v.v;
}

WeilDivisor ramification_divisor(const State& s) {
  std::map<int, long> coeffs;
  for (int id : s.active_xids()) {
    const XGerm& g = s.xgerms[id];
    for (int axis = 1; axis <= 2; axis++) {
      if (!g.boundary[axis - 1]) continue;
      int cid = *g.boundary[axis - 1];
      long c = component_coefficient(s, g, axis);
      if (c < 0)
        throw std::runtime_error("internal: negative ramification coefficient on " +
                                 s.comp_name(cid));
      auto it = coeffs.find(cid);
      if (it == coeffs.end())
        coeffs[cid] = c;
      else if (it->second != c)
        throw std::runtime_error("internal: cross-chart coefficient disagreement on " +
                                 s.comp_name(cid));
    }
  }
  WeilDivisor d;
  for (auto& [cid, c] : coeffs)
    if (c > 0) d[cid] = c;
  return d;
}

ComponentImage component_image(const XGerm& g, int axis) {
  if (!g.boundary[axis - 1])
    throw std::runtime_error("component_image: axis is not a boundary axis");
  bool z1 = restrict_axis(g.pull1.num(), axis).is_zero();
  bool z2 = restrict_axis(g.pull2.num(), axis).is_zero();
  if (z1 && z2) return ComponentImage{true, 0};
  if (z1) return ComponentImage{false, 1};
  if (z2) return ComponentImage{false, 2};
  throw std::runtime_error("internal: boundary component maps onto neither a point nor a component");
}

const char* subcase_name(Subcase c) {
  switch (c) {
    case Subcase::S2p2q0: return "S2p2q0";
    case Subcase::S2p2q1: return "S2p2q1";
    case Subcase::S2p2q2: return "S2p2q2";
    case Subcase::S1p2q1: return "S1p2q1";
    case Subcase::S1p1q0: return "S1p1q0";
    case Subcase::S1p1q1: return "S1p1q1";
    case Subcase::S2p1q1: return "S2p1q1";
    case Subcase::S2p1q2: return "S2p1q2";
  }
  return "?";
}

std::array<std::array<long, 2>, 2> valuation_matrix(const XGerm& g) {
  auto val = [&](const Frac2& f, int axis) {
    ExtInt v = frac_axis_valuation(f, axis);
    if (v.inf) throw std::runtime_error("valuation_matrix: zero pullback");
    return v.v;
  };
  return {{{val(g.pull1, 1), val(g.pull1, 2)},
           {val(g.pull2, 1), val(g.pull2, 2)}}};
}

static Json extint_json(const ExtInt& e) {
  if (e.inf) return Json("inf");
  return Json(e.v);
}

Json SubcaseData::json(const State&) const {
  Json j;
  j["subcase"] = subcase_name(subcase);
  j["a"] = a;
  j["b"] = b;
  j["i_o"] = extint_json(i_o);
  j["j_o"] = extint_json(j_o);
  j["i_s"] = extint_json(i_s);
  j["j_s"] = extint_json(j_s);
  j["det"] = det;
  return j;
}

SubcaseData classify_subcase(const State& s, const XGerm& g) {
  Validation v = validate_germ(s, g);
  if (!v.ok) throw SubcaseError("classify_subcase on invalid germ: " + v.message);
  const YGerm& t = s.ygerms[g.target];
  int np = g.boundary_count();
  int nq = t.boundary_count();
  if (np == 0 || nq == 0)
    throw SubcaseError("classify_subcase: germ has no boundary to classify");

  int onto = 0;
  for (int axis = 1; axis <= 2; axis++)
    if (g.boundary[axis - 1] && component_image(g, axis).onto_point) onto++;

  SubcaseData d{};
  auto m = valuation_matrix(g);

  if (nq == 2) {
    d.a = m[0][0];
    d.b = m[0][1];
    d.i_o = ExtInt::of(m[1][0]);
    d.j_o = ExtInt::of(m[1][1]);
    d.i_s = ExtInt::infinity();
    d.j_s = ExtInt::infinity();
    d.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (np == 2) {
      d.subcase = onto == 0 ? Subcase::S2p2q0
                : onto == 1 ? Subcase::S2p2q1
                            : Subcase::S2p2q2;
    } else {
      if (onto == 0)
        throw SubcaseError("internal: impossible subcase 1p2q0 on a validated germ");
      d.subcase = Subcase::S1p2q1;
    }
    return d;
  }

  // nq == 1: read a, b from the boundary-coordinate pullback and the term
  // invariants from the free-coordinate pullback.
  int bd_axis = t.boundary[0] ? 1 : 2;
  const Frac2& p_bd = bd_axis == 1 ? g.pull1 : g.pull2;
  const Frac2& p_free = bd_axis == 1 ? g.pull2 : g.pull1;
  d.a = frac_axis_valuation(p_bd, 1).v;
  d.b = frac_axis_valuation(p_bd, 2).v;

  d.i_o = ExtInt::infinity();
  d.j_o = ExtInt::infinity();
  d.i_s = ExtInt::infinity();
  d.j_s = ExtInt::infinity();
  bool have_col = false;
  for (auto& [mn, c] : p_free.num().terms()) {
    long i = mn.e1, j = mn.e2;
    if (d.a * j == d.b * i) {
      if (!have_col || i < d.i_s.v || (i == d.i_s.v && j < d.j_s.v)) {
        d.i_s = ExtInt::of(i);
        d.j_s = ExtInt::of(j);
      }
      have_col = true;
    } else {
      d.i_o = min(d.i_o, ExtInt::of(i));
      d.j_o = min(d.j_o, ExtInt::of(j));
    }
  }
  if (have_col) {
    // collinear exponent vectors are proportional to (a,b); the componentwise
    // minimum must be attained by one term
    for (auto& [mn, c] : p_free.num().terms()) {
      long i = mn.e1, j = mn.e2;
      if (d.a * j == d.b * i && (i < d.i_s.v || j < d.j_s.v))
        throw SubcaseError("internal: collinear term set is not totally ordered");
    }
  }

  if (np == 2) {
    if (onto == 0)
      throw SubcaseError("internal: impossible subcase 2p1q0 on a validated germ");
    d.subcase = onto == 1 ? Subcase::S2p1q1 : Subcase::S2p1q2;
    if (d.subcase == Subcase::S2p1q2 && !d.i_o.inf &&
        d.a * d.j_o.v == d.b * d.i_o.v)
      throw SubcaseError("internal: (i_o, j_o) not attained jointly in 2p1q2");
  } else {
    d.subcase = onto == 0 ? Subcase::S1p1q0 : Subcase::S1p1q1;
  }
  return d;
}

}  // namespace toro
