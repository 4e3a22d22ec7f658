#pragma once
// r_log / R_log computation, toroidality test, component images, and the
// subcase classifier.

#include <array>

#include "toro/model.hpp"

namespace toro {

// r_log = J * (product of boundary-X axis coordinates)
//           / (product of pullbacks of boundary-Y coordinates), reduced.
Frac2 log_jacobian(const State& s, const XGerm& g);

bool toroidal_at(const State& s, const XGerm& g);

// Order of vanishing of r_log along the boundary axis (1 or 2) of g.
long component_coefficient(const State& s, const XGerm& g, int axis);

// Union over active germs; asserts cross-chart agreement of coefficients.
WeilDivisor ramification_divisor(const State& s);

struct ComponentImage {
  bool onto_point = false;
  int target_axis = 0;  // when onto a component: the Y axis it maps onto
};
ComponentImage component_image(const XGerm& g, int axis);

enum class Subcase {
  S2p2q0,
  S2p2q1,
  S2p2q2,
  S1p2q1,
  S1p1q0,
  S1p1q1,
  S2p1q1,
  S2p1q2,
};
const char* subcase_name(Subcase c);

struct SubcaseData {
  Subcase subcase;
  long a = 0, b = 0;      // valuations of the boundary-coordinate pullback
                          // (2q: of pull1) along the X axes
  ExtInt i_o, j_o;        // 1q: minima over non-collinear terms of the free
                          // pullback; 2q: valuations of pull2 (matrix row 2)
  ExtInt i_s, j_s;        // 1q: componentwise minimum over collinear terms
  long det = 0;           // 2q: determinant of the valuation matrix
  Json json(const State& s) const;
};

struct SubcaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Errors (SubcaseError) on the impossible codes 1p2q0 / 2p1q0 and on germs
// with no X boundary.
SubcaseData classify_subcase(const State& s, const XGerm& g);

// Valuation matrix of the pulls along the two X axes: rows = pulls, columns =
// axes. Used for atlas reporting and the clause-(i) monitor bound.
std::array<std::array<long, 2>, 2> valuation_matrix(const XGerm& g);

}  // namespace toro
