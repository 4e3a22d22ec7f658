#pragma once
// Input morphism files: a minimal key = value text format (TOML-compatible
// subset) with string, integer and string-list values.

#include "toro/model.hpp"
#include "toro/parse.hpp"

namespace toro {

struct InputSpec {
  std::string f_y1, f_y2;
  std::vector<int> boundary_x, boundary_y;  // axis numbers, ascending
  int max_steps = -1;                       // -1 = not set
  std::string trace, dot_x, dot_y;
};

InputSpec parse_input(const std::string& text);  // throws ParseError
InputSpec load_input(const std::string& path);   // throws ParseError

// Root state: one Y germ, one X germ with the parsed pullbacks, boundary
// components registered in axis order.
State initial_state(const InputSpec& in);

}  // namespace toro
