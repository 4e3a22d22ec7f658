#pragma once
// Text grammar for polynomial input: variables x1,x2 (or y1,y2), integer and
// a/b rational literals, + - *, ^ with nonnegative integer exponent,
// parentheses, unary minus. Whitespace insignificant.

#include <stdexcept>
#include <string>

#include "toro/algebra.hpp"

namespace toro {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poly2 parse_poly(const std::string& text);

}  // namespace toro
