#pragma once
// Shared test plumbing: one-line construction of root states and germs.

#include <string>
#include <vector>

#include "toro/input.hpp"
#include "toro/toroidalize.hpp"

namespace toro_test {

inline toro::State make_state(const std::string& p1, const std::string& p2,
                              std::vector<int> bx, std::vector<int> by) {
  toro::InputSpec in;
  in.f_y1 = p1;
  in.f_y2 = p2;
  in.boundary_x = std::move(bx);
  in.boundary_y = std::move(by);
  return toro::initial_state(in);
}

inline toro::Poly2 P(const std::string& s) { return toro::parse_poly(s); }

}  // namespace toro_test
