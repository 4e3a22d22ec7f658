#include "toro/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toro/input.hpp"
#include "toro/toric2.hpp"
#include "toro/toroidalize.hpp"

namespace toro {

namespace {

std::string divisor_str(const State& s, const WeilDivisor& d) {
  if (d.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (auto& [cid, c] : d) {
    if (!first) out += ", ";
    out += s.comp_name(cid) + ": " + std::to_string(c);
    first = false;
  }
  return out + "}";
}

int resolve_max_steps(int cli, const InputSpec& in) {
  if (cli >= 0) return cli;
  if (in.max_steps >= 0) return in.max_steps;
  if (const char* env = std::getenv("TORO_MAX_STEPS")) {
    try {
      return std::stoi(env);
    } catch (...) {
    }
  }
  return 64;
}

std::string subcase_label(const State& s, const XGerm& g) {
  try {
    return subcase_name(classify_subcase(s, g).subcase);
  } catch (...) {
    return "-";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

std::string rel_label(const ChartRel& r) {
  switch (r.kind) {
    case ChartRel::First: return "First";
    case ChartRel::Second: return "Second";
    case ChartRel::Recenter:
      return "x" + std::to_string(r.axis) + "=" + rat_str(r.c);
  }
  return "?";
}

}  // namespace

Json trace_json(const State& s) {
  Json events = Json::array();
  for (const TraceEvent& e : s.events)
    events.push_back(Json{{"seq", e.seq}, {"kind", e.kind}, {"payload", e.payload}});

  Json germs = Json::array();
  for (int id : s.active_xids()) {
    const XGerm& g = s.xgerms[id];
    Json jg;
    jg["id"] = id;
    jg["target"] = g.target;
    jg["pull1"] = g.pull1.str();
    jg["pull2"] = g.pull2.str();
    Json bd = Json::object();
    for (int ax = 0; ax < 2; ax++)
      if (g.boundary[ax]) bd["x" + std::to_string(ax + 1)] = s.comp_name(*g.boundary[ax]);
    jg["boundary"] = bd;
    try {
      auto m = valuation_matrix(g);
      jg["matrix"] = Json::array({Json::array({m[0][0], m[0][1]}),
                                  Json::array({m[1][0], m[1][1]})});
    } catch (...) {
      jg["matrix"] = nullptr;
    }
    jg["subcase"] = subcase_label(s, g);
    jg["toroidal"] = toroidal_at(s, g);
    germs.push_back(jg);
  }

  auto node = [&](int id, const std::optional<ChartRel>& parent) {
    Json n;
    n["id"] = id;
    if (parent) {
      n["parent"] = parent->parent;
      n["rel"] = rel_label(*parent);
    } else {
      n["parent"] = nullptr;
    }
    return n;
  };
  Json xtree = Json::array(), ytree = Json::array();
  for (const XGerm& g : s.xgerms) {
    Json n = node(g.id, g.parent);
    n["active"] = g.active;
    xtree.push_back(n);
  }
  for (const YGerm& g : s.ygerms) {
    Json n = node(g.id, g.parent);
    n["blown"] = g.blown;
    ytree.push_back(n);
  }

  Json atlas;
  atlas["germs"] = germs;
  atlas["x_tree"] = xtree;
  atlas["y_tree"] = ytree;

  return Json{{"atlas", atlas}, {"events", events}};
}

std::string dot_x_tree(const State& s) {
  std::ostringstream o;
  o << "digraph xtree {\n";
  for (const XGerm& g : s.xgerms)
    o << "  x" << g.id << " [label=\"x" << g.id << " " << subcase_label(s, g)
      << "\"];\n";
  for (const XGerm& g : s.xgerms)
    if (g.parent)
      o << "  x" << g.parent->parent << " -> x" << g.id << " [label=\""
        << rel_label(*g.parent) << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string dot_y_tree(const State& s) {
  std::ostringstream o;
  o << "digraph ytree {\n";
  for (const YGerm& g : s.ygerms) {
    std::string bd;
    for (int ax = 0; ax < 2; ax++)
      if (g.boundary[ax]) bd += (bd.empty() ? "" : ",") + s.comp_name(*g.boundary[ax]);
    o << "  y" << g.id << " [label=\"y" << g.id << " " << (bd.empty() ? "-" : bd)
      << "\"];\n";
  }
  for (const YGerm& g : s.ygerms)
    if (g.parent)
      o << "  y" << g.parent->parent << " -> y" << g.id << " [label=\""
        << rel_label(*g.parent) << "\"];\n";
  o << "}\n";
  return o.str();
}

int cmd_analyze(const std::string& file) {
  State s;
  try {
    s = initial_state(load_input(file));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
  const XGerm& g = s.xgerms[0];
  Validation v = validate_germ(s, g);
  if (!v.ok) {
    std::cout << "validation: failed — " << v.message << "\n";
    return 2;
  }
  std::cout << "validation: ok\n";
  Frac2 r = log_jacobian(s, g);
  std::cout << "r_log = " << r.str() << "\n";
  WeilDivisor R = ramification_divisor(s);
  std::cout << "R_log = " << divisor_str(s, R) << "\n";
  std::cout << "toroidal: " << (toroidal_at(s, g) ? "yes" : "no") << "\n";
  try {
    SubcaseData sd = classify_subcase(s, g);
    std::cout << "subcase = " << subcase_name(sd.subcase) << " "
              << sd.json(s).dump() << "\n";
  } catch (const SubcaseError&) {
    std::cout << "subcase = n/a\n";
  }
  return 0;
}

int cmd_run(const std::string& file, const RunOptions& opt) {
  InputSpec in;
  State s;
  try {
    in = load_input(file);
    s = initial_state(in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
  Validation v = validate_germ(s, s.xgerms[0]);
  if (!v.ok) {
    std::cout << "validation: failed — " << v.message << "\n";
    return 2;
  }
  int max_steps = resolve_max_steps(opt.max_steps, in);

  RunResult res;
  try {
    res = run(s, max_steps);
  } catch (const IrrationalCenter& e) {
    std::cerr << "irrational center: " << e.what() << "\n";
    return 3;
  } catch (const NonTermination& e) {
    std::cerr << "non-termination: " << e.what() << "\n";
    return 4;
  } catch (const ValidationFailure& e) {
    std::cerr << "validation: failed — " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string trace = !opt.trace.empty() ? opt.trace : in.trace;
  std::string dx = !opt.dot_x.empty() ? opt.dot_x : in.dot_x;
  std::string dy = !opt.dot_y.empty() ? opt.dot_y : in.dot_y;
  if (!trace.empty()) write_file(trace, trace_json(s).dump(2) + "\n");
  if (!dx.empty()) write_file(dx, dot_x_tree(s));
  if (!dy.empty()) write_file(dy, dot_y_tree(s));

  std::cout << "toroidal atlas reached after " << res.steps.size()
            << " step(s); active germs: " << s.active_xids().size() << "\n";
  if (!res.monitor_ok) {
    std::cout << "monitor violations:\n";
    for (auto& m : res.monitor_messages) std::cout << "  " << m << "\n";
  }
  return 0;
}

namespace {

bool verify_one(const std::string& path, std::string& why) {
  InputSpec in;
  State s;
  try {
    in = load_input(path);
    s = initial_state(in);
  } catch (const ParseError& e) {
    why = std::string("parse error: ") + e.what();
    return false;
  }
  Validation v = validate_germ(s, s.xgerms[0]);
  if (!v.ok) {
    why = "validation failed: " + v.message;
    return false;
  }
  RunResult res;
  try {
    res = run(s, resolve_max_steps(-1, in));
  } catch (const std::exception& e) {
    why = std::string("run failed: ") + e.what();
    return false;
  }
  if (!res.monitor_ok) {
    why = "monitor violation: " + res.monitor_messages.front();
    return false;
  }
  std::filesystem::path golden(path);
  golden.replace_extension(".golden.json");
  if (std::filesystem::exists(golden)) {
    std::ifstream gf(golden);
    std::stringstream gs;
    gs << gf.rdbuf();
    std::string want = gs.str();
    std::string got = trace_json(s).dump(2) + "\n";
    if (want != got) {
      std::istringstream aw(want), ag(got);
      std::string lw, lg;
      int line = 0;
      while (true) {
        line++;
        bool hw = (bool)std::getline(aw, lw);
        bool hg = (bool)std::getline(ag, lg);
        if (!hw && !hg) break;
        if (!hw || !hg || lw != lg) {
          why = "golden trace mismatch at line " + std::to_string(line) +
                ":\n  - " + (hw ? lw : "<eof>") + "\n  + " + (hg ? lg : "<eof>");
          return false;
        }
      }
      why = "golden trace mismatch";
      return false;
    }
  }
  return true;
}

}  // namespace

int cmd_verify(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (auto& e : fs::directory_iterator(path))
      if (e.path().extension() == ".toro") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      std::cout << "warning: no .toro files in " << path << "; nothing to verify\n";
      return 0;
    }
  } else {
    files.push_back(path);
  }
  int failures = 0;
  for (const std::string& f : files) {
    std::string why;
    if (verify_one(f, why)) {
      std::cout << "PASS " << f << "\n";
    } else {
      std::cout << "FAIL " << f << ": " << why << "\n";
      failures++;
    }
  }
  std::cout << files.size() - failures << "/" << files.size() << " passed\n";
  return failures == 0 ? 0 : 2;
}

namespace {

Fan2 load_fan(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  Json j = Json::parse(f);
  Fan2 fan;
  for (auto& r : j.at("rays"))
    fan.rays.push_back(Ray{r.at(0).get<long>(), r.at(1).get<long>()});
  if (j.contains("complete"))
    fan.complete = j["complete"].get<bool>();
  else
    fan.complete = fan.rays.size() >= 3 &&
                   cross(fan.rays.back(), fan.rays.front()) == 1;
  fan.validate();
  return fan;
}

Json fan_json(const Fan2& f) {
  Json rays = Json::array();
  for (const Ray& r : f.rays) rays.push_back(Json::array({r.x, r.y}));
  return Json{{"complete", f.complete}, {"rays", rays}};
}

}  // namespace

int cmd_factor(const std::string& file_a, const std::string& file_b,
               const std::string& out) {
  Fan2 fa, fb;
  try {
    fa = load_fan(file_a);
    fb = load_fan(file_b);
  } catch (const std::exception& e) {
    std::cerr << "fan parse error: " << e.what() << "\n";
    return 1;
  }
  FactorScript fs;
  try {
    fs = strong_factorize(fa, fb);
  } catch (const SupportMismatch& e) {
    std::cerr << "support mismatch: " << e.what() << "\n";
    return 2;
  }
  Json j{{"ups", fs.ups}, {"downs", fs.downs}, {"common", fan_json(fs.common)}};
  std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

}  // namespace toro
