#include "toro/input.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toro {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// removes a trailing comment, respecting double quotes
std::string uncomment(const std::string& s) {
  bool q = false;
  for (size_t i = 0; i < s.size(); i++) {
    if (s[i] == '"') q = !q;
    if (s[i] == '#' && !q) return s.substr(0, i);
  }
  return s;
}

std::string unquote(const std::string& v, int line) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"')
    throw ParseError("line " + std::to_string(line) + ": expected a quoted string");
  return v.substr(1, v.size() - 2);
}

std::vector<std::string> parse_list(const std::string& v, int line) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ParseError("line " + std::to_string(line) + ": expected a list");
  std::vector<std::string> out;
  std::string body = v.substr(1, v.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty()) continue;
    out.push_back(unquote(item, line));
  }
  return out;
}

std::vector<int> parse_axes(const std::string& v, char letter, int line) {
  std::vector<int> axes;
  for (const std::string& s : parse_list(v, line)) {
    if (s.size() != 2 || s[0] != letter || (s[1] != '1' && s[1] != '2'))
      throw ParseError("line " + std::to_string(line) + ": bad axis name \"" + s +
                       "\" (expected " + letter + "1 or " + std::string(1, letter) + "2)");
    axes.push_back(s[1] - '0');
  }
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  return axes;
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  InputSpec in;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  bool have1 = false, have2 = false;
  while (std::getline(ss, raw)) {
    line++;
    std::string s = strip(uncomment(raw));
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string val = strip(s.substr(eq + 1));
    if (key == "f_y1") {
      in.f_y1 = unquote(val, line);
      have1 = true;
    } else if (key == "f_y2") {
      in.f_y2 = unquote(val, line);
      have2 = true;
    } else if (key == "boundary_x") {
      in.boundary_x = parse_axes(val, 'x', line);
    } else if (key == "boundary_y") {
      in.boundary_y = parse_axes(val, 'y', line);
    } else if (key == "max_steps") {
      try {
        in.max_steps = std::stoi(val);
      } catch (...) {
        throw ParseError("line " + std::to_string(line) + ": bad integer");
      }
    } else if (key == "trace") {
      in.trace = unquote(val, line);
    } else if (key == "dot_x") {
      in.dot_x = unquote(val, line);
    } else if (key == "dot_y") {
      in.dot_y = unquote(val, line);
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key \"" + key + "\"");
    }
  }
  if (!have1 || !have2) throw ParseError("missing f_y1 or f_y2");
  return in;
}

InputSpec load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

State initial_state(const InputSpec& in) {
  State s;
  YGerm y;
  y.id = 0;
  for (int ax : in.boundary_y)
    y.boundary[ax - 1] = s.new_component(Side::TargetY, false);
  s.ygerms.push_back(y);

  XGerm g;
  g.id = 0;
  g.target = 0;
  g.pull1 = Frac2{parse_poly(in.f_y1)};
  g.pull2 = Frac2{parse_poly(in.f_y2)};
  for (int ax : in.boundary_x)
    g.boundary[ax - 1] = s.new_component(Side::SourceX, false);
  g.active = true;
  s.xgerms.push_back(g);
  return s;
}

}  // namespace toro
