// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] = repository root (for the corpus and golden files).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "toro/commands.hpp"
#include "toro/input.hpp"
#include "toro/toric2.hpp"
#include "toro/toroidalize.hpp"

using namespace toro;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::pair<int, std::string>> lines;

void report(int n, const std::string& what, bool ok, const std::string& why = "") {
  std::string line = std::string(ok ? "PASS" : "FAIL") + " criterion " +
                     std::to_string(n) + ": " + what;
  if (!ok && !why.empty()) line += " — " + why;
  lines.emplace_back(n, line);
  if (!ok) failures++;
}

State germ_state(const std::string& p1, const std::string& p2,
                 std::vector<int> bx, std::vector<int> by) {
  InputSpec in;
  in.f_y1 = p1;
  in.f_y2 = p2;
  in.boundary_x = std::move(bx);
  in.boundary_y = std::move(by);
  return initial_state(in);
}

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string mono(int c, int e1, int e2) {
  std::string s = std::to_string(c);
  if (e1) s += "*x1^" + std::to_string(e1);
  if (e2) s += "*x2^" + std::to_string(e2);
  return s;
}

// ---- criterion 1: monomial toroidality <=> nonzero exponent determinant ----

void criterion1(std::mt19937_64& rng) {
  auto t0 = Clock::now();
  int checked = 0;
  std::string why;
  while (checked < 250 && why.empty()) {
    long a = rng() % 7, b = rng() % 7, c = rng() % 7, d = rng() % 7;
    if (a + b == 0 || c + d == 0) continue;  // rows must be nonzero
    State s = germ_state(mono(1, (int)a, (int)b), mono(1, (int)c, (int)d),
                         {1, 2}, {1, 2});
    bool valid = validate_germ(s, s.xgerms[0]).ok;
    bool tor = valid && toroidal_at(s, s.xgerms[0]);
    long det = a * d - b * c;
    if (tor != (det != 0))
      why = "germ (" + mono(1, (int)a, (int)b) + ", " + mono(1, (int)c, (int)d) +
            ") disagrees with det = " + std::to_string(det);
    checked++;
  }
  double dt = secs(t0);
  if (why.empty() && dt >= 1.0)
    why = "took " + std::to_string(dt) + " s (limit 1 s)";
  report(1, "monomial toroidality criterion on " + std::to_string(checked) +
                " germs",
         why.empty(), why);
}

// ---- criterion 2: flagship golden run ----

void criterion2(const fs::path& root) {
  std::string why;
  try {
    InputSpec in = load_input((root / "corpus" / "flagship.toro").string());
    std::string dump1, dump2;
    State s;
    for (std::string* out : {&dump1, &dump2}) {
      s = initial_state(in);
      run(s, 8);
      *out = trace_json(s).dump(2) + "\n";
    }
    if (dump1 != dump2) why = "trace not byte-stable across runs";

    std::ifstream gf(root / "corpus" / "flagship.golden.json");
    std::stringstream gs;
    gs << gf.rdbuf();
    if (why.empty() && gs.str() != dump1) why = "trace differs from golden file";

    int yblow = 0, xblow = 0;
    bool first_r = false, final_r = false;
    for (const TraceEvent& e : s.events) {
      if (e.kind == "YBlowup") {
        yblow++;
        if (e.payload.at("center_type") != "1q") why = "Y blowup is not 1q";
      }
      if (e.kind == "XBlowup") xblow++;
      if (e.kind == "RamificationComputed") {
        if (e.payload.at("step") == 0)
          first_r = e.payload.at("divisor") == Json{{"G1", 1}};
        else
          final_r = e.payload.at("divisor").empty();
      }
    }
    if (why.empty() && (yblow != 1 || xblow != 1))
      why = "expected exactly one blowup per side";
    if (why.empty() && (!first_r || !final_r))
      why = "ramification divisor trajectory is not {G1: 1} -> 0";

    bool matrix_found = false;
    Json tj = trace_json(s);
    for (auto& g : tj["atlas"]["germs"])
      if (g["matrix"].dump() == "[[1,0],[1,2]]") matrix_found = true;
    if (why.empty() && !matrix_found)
      why = "no chart with exponent matrix rows (1,0),(1,2)";
  } catch (const std::exception& e) {
    why = e.what();
  }
  report(2, "flagship golden run", why.empty(), why);
}

// ---- criteria 3 and 6: coefficient formulas and exceptional bounds ----

struct SweepCase {
  State state;
  long expect_g1 = 0, expect_g2 = 0;
  long exc_bound = 0;      // exceptional coefficients must be < exc_bound...
  bool exc_zero = false;   // ...or exactly 0 when set
  Subcase subcase;
};

long coeff(const WeilDivisor& d, int comp) {
  auto it = d.find(comp);
  return it == d.end() ? 0 : it->second;
}

long closed_form(long a, long i_o, long i_s_or_neg) {
  long m = i_s_or_neg < 0 ? i_o : std::min(i_o, i_s_or_neg);
  return a >= m ? i_o - m : i_o - a;
}

SweepCase gen_s1p1q1(std::mt19937_64& rng) {
  long a = 1 + rng() % 4, i_o = 1 + rng() % 6;
  long i_s = (rng() % 2) ? (long)(1 + rng() % 6) : -1;
  int co = 1 + (int)(rng() % 3), cs = 1 + (int)(rng() % 3);
  std::string p2 = mono(co, (int)i_o, 1);
  if (i_s > 0) p2 += " + " + mono(cs, (int)i_s, 0);
  SweepCase c{germ_state(mono(1, (int)a, 0), p2, {1}, {1}),
              closed_form(a, i_o, i_s), 0, 0, true, Subcase::S1p1q1};
  return c;
}

SweepCase gen_s2p1q1(std::mt19937_64& rng) {
  bool collinear = rng() % 2;
  long a = 1 + rng() % 4;
  long b = collinear ? 1 : (long)(1 + rng() % 4);
  long i_o;
  do {
    i_o = 1 + rng() % 6;
  } while (collinear && i_o == a);
  int co = 1 + (int)(rng() % 3), cs = 1 + (int)(rng() % 3);
  std::string p2 = mono(co, (int)i_o, 0);
  if (collinear) p2 += " + " + mono(cs, (int)a, 1);  // (x1^a x2)^1, collinear
  SweepCase c{germ_state(mono(1, (int)a, (int)b), p2, {1, 2}, {1}),
              closed_form(a, i_o, collinear ? a : -1), 0, i_o, false,
              Subcase::S2p1q1};
  return c;
}

SweepCase gen_s2p1q2(std::mt19937_64& rng) {
  bool collinear = rng() % 2;
  long a = 1 + rng() % 4;
  long b = collinear ? 1 : (long)(1 + rng() % 4);
  long i_o, j_o;
  do {
    i_o = 1 + rng() % 6;
    j_o = collinear ? (long)(1 + rng() % 2) : (long)(1 + rng() % 6);
  } while (a * j_o == b * i_o);
  int cn = 1 + (int)(rng() % 3), cs = 1 + (int)(rng() % 3);
  std::string p2 = mono(cn, (int)i_o, (int)j_o);
  if (collinear) p2 += " + " + mono(cs, (int)a, 1);
  SweepCase c{germ_state(mono(1, (int)a, (int)b), p2, {1, 2}, {1}),
              closed_form(a, i_o, collinear ? a : -1),
              closed_form(b, j_o, collinear ? 1 : -1),
              std::max(i_o, j_o), false, Subcase::S2p1q2};
  return c;
}

void criteria3and6(std::mt19937_64& rng) {
  std::string why3, why6;
  const char* names[3] = {"S1p1q1", "S2p1q1", "S2p1q2"};
  for (int family = 0; family < 3; family++) {
    for (int it = 0; it < 60; it++) {
      SweepCase c = family == 0   ? gen_s1p1q1(rng)
                    : family == 1 ? gen_s2p1q1(rng)
                                  : gen_s2p1q2(rng);
      State& s = c.state;
      std::string tag = std::string(names[family]) + " sample " +
                        std::to_string(it) + " (" + s.xgerms[0].pull1.str() +
                        ", " + s.xgerms[0].pull2.str() + ")";
      if (!validate_germ(s, s.xgerms[0]).ok) {
        why3 = tag + ": generator produced an invalid germ";
        break;
      }
      if (classify_subcase(s, s.xgerms[0]).subcase != c.subcase) {
        why3 = tag + ": classified into the wrong subcase";
        break;
      }
      int g1 = *s.xgerms[0].boundary[0];
      int g2 = s.xgerms[0].boundary[1] ? *s.xgerms[0].boundary[1] : -1;
      StepReport rep;
      try {
        rep = algorithm_step(s);
      } catch (const std::exception& e) {
        why3 = tag + ": step failed: " + e.what();
        break;
      }
      if (coeff(rep.r_after, g1) != c.expect_g1) {
        why3 = tag + ": G1 coefficient " +
               std::to_string(coeff(rep.r_after, g1)) + " != " +
               std::to_string(c.expect_g1);
        break;
      }
      if (g2 >= 0 && coeff(rep.r_after, g2) != c.expect_g2) {
        why3 = tag + ": G2 coefficient " +
               std::to_string(coeff(rep.r_after, g2)) + " != " +
               std::to_string(c.expect_g2);
        break;
      }
      for (int e : rep.new_components) {
        long v = coeff(rep.r_after, e);
        bool ok = c.exc_zero ? v == 0 : v < c.exc_bound;
        if (!ok && why6.empty())
          why6 = tag + ": exceptional " + s.comp_name(e) + " coefficient " +
                 std::to_string(v) + " breaks the bound";
      }
    }
    if (!why3.empty()) break;
  }
  report(3, "coefficient formulas over 60 germs per subcase", why3.empty(), why3);
  report(6, "exceptional coefficient bounds in the sweep steps",
         why3.empty() && why6.empty(), why6.empty() ? why3 : why6);
}

// ---- criterion 4: corpus termination and monitor ----

void criterion4(const fs::path& root) {
  auto t0 = Clock::now();
  std::string why;
  int count = 0;
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(root / "corpus"))
    if (e.path().extension() == ".toro") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    try {
      State s = initial_state(load_input(f.string()));
      RunResult res = run(s, 64);
      if (!res.done) {
        why = f.filename().string() + ": did not finish";
        break;
      }
      if (!res.monitor_ok) {
        why = f.filename().string() + ": " + res.monitor_messages.front();
        break;
      }
    } catch (const std::exception& e) {
      why = f.filename().string() + ": " + e.what();
      break;
    }
    count++;
  }
  if (why.empty() && count < 20)
    why = "corpus has only " + std::to_string(count) + " germs (need 20)";
  double dt = secs(t0);
  if (why.empty() && dt >= 10.0)
    why = "took " + std::to_string(dt) + " s (limit 10 s)";
  report(4, "corpus of " + std::to_string(count) +
                " germs terminates with the monitor green",
         why.empty(), why);
}

// ---- criterion 5: impossible codes and point images ----

void criterion5(std::mt19937_64& rng) {
  std::string why;
  int checked = 0;
  while (checked < 520 && why.empty()) {
    SweepCase c;
    switch (rng() % 3) {
      case 0: c = gen_s1p1q1(rng); break;
      case 1: c = gen_s2p1q1(rng); break;
      default: c = gen_s2p1q2(rng); break;
    }
    State& s = c.state;
    const XGerm& g = s.xgerms[0];
    if (!validate_germ(s, g).ok) continue;
    try {
      SubcaseData sd = classify_subcase(s, g);
      std::string name = subcase_name(sd.subcase);
      if (name == "S1p2q0" || name == "S2p1q0") {
        why = "classifier emitted impossible code " + name;
        break;
      }
    } catch (const SubcaseError& e) {
      why = std::string("classifier error on a valid germ: ") + e.what();
      break;
    }
    WeilDivisor R = ramification_divisor(s);
    for (auto& [comp, coeff] : R) {
      (void)coeff;
      for (int axis = 1; axis <= 2; axis++)
        if (g.boundary[axis - 1] && *g.boundary[axis - 1] == comp &&
            !component_image(g, axis).onto_point)
          why = "positive-coefficient component " + s.comp_name(comp) +
                " does not map to a point";
    }
    checked++;
  }
  report(5, "no impossible subcase codes, point images on " +
                std::to_string(checked) + " germs",
         why.empty(), why);
}

// ---- criterion 7: algebra kernel properties ----

void criterion7(std::mt19937_64& rng) {
  std::string why;
  auto rand_poly = [&](int maxdeg, int terms) {
    Poly2 p;
    for (int i = 0; i < terms; i++)
      p.add_term(Rat((long)(rng() % 9) - 4), (int)(rng() % (maxdeg + 1)),
                 (int)(rng() % (maxdeg + 1)));
    return p;
  };
  int done = 0;
  while (done < 500 && why.empty()) {
    Poly2 d = rand_poly(3, 2), p = rand_poly(3, 3), q = rand_poly(3, 3);
    if (d.is_zero() || p.is_zero() || q.is_zero()) continue;
    Poly2 g = gcd2(d * p, d * q);
    auto r1 = try_divide(d * p, g);
    auto r2 = try_divide(d * q, g);
    if (!r1 || !r2) {
      why = "gcd does not divide its arguments";
      break;
    }
    Poly2 gg = gcd2(*r1, *r2);
    if (!(gg == Poly2{Rat(1)})) {
      why = "residuals after gcd are not coprime";
      break;
    }
    done++;
  }
  if (why.empty()) {
    for (int a = 0; a <= 6 && why.empty(); a++)
      for (int b = 0; b <= 6 && why.empty(); b++)
        for (int c = 0; c <= 6 && why.empty(); c++)
          for (int d = 0; d <= 6 && why.empty(); d++) {
            Poly2 p = Poly2::term(1, a, b), q = Poly2::term(1, c, d);
            Poly2 jac = partial_derivative(p, 1) * partial_derivative(q, 2) -
                        partial_derivative(p, 2) * partial_derivative(q, 1);
            long det = (long)a * d - (long)b * c;
            Poly2 want =
                det == 0 ? Poly2{} : Poly2::term(Rat(det), a + c - 1, b + d - 1);
            if (!(jac == want))
              why = "determinant identity fails at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + "," +
                    std::to_string(d) + ")";
          }
  }
  report(7, "gcd on 500 constructed pairs, determinant identity over [0,6]^4",
         why.empty(), why);
}

// ---- criterion 8: toric strong factorization ----

void criterion8(std::mt19937_64& rng) {
  std::string why;
  Fan2 seed;
  seed.rays = {Ray{1, 0}, Ray{0, 1}, Ray{-1, 0}, Ray{0, -1}};
  seed.complete = true;
  int done = 0;
  while (done < 100 && why.empty()) {
    Fan2 fa = seed, fb = seed;
    int na = 1 + (int)(rng() % 5), nb = 1 + (int)(rng() % 5);
    for (int k = 0; k < na; k++)
      fa = star_subdivide(fa, (int)(rng() % fa.cone_count()));
    for (int k = 0; k < nb; k++)
      fb = star_subdivide(fb, (int)(rng() % fb.cone_count()));
    try {
      FactorScript fs = strong_factorize(fa, fb);
      // replay validates every intermediate fan (all cones of determinant 1)
      if (!(replay(fa, fs.ups) == fs.common) ||
          !(replay(fb, fs.downs) == fs.common))
        why = "scripts do not replay to the common refinement";
    } catch (const std::exception& e) {
      why = e.what();
      break;
    }
    done++;
  }
  if (why.empty()) {
    Fan2 cone, blown;
    cone.rays = {Ray{1, 0}, Ray{0, 1}};
    blown.rays = {Ray{1, 0}, Ray{1, 1}, Ray{0, 1}};
    FactorScript fs = strong_factorize(cone, blown);
    if (fs.ups.size() != 1 || !fs.downs.empty())
      why = "blowup pair script lengths are not (1, 0)";
  }
  report(8, "strong factorization on 100 random fan pairs", why.empty(), why);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <repo root>\n";
    return 2;
  }
  fs::path root = argv[1];
  std::mt19937_64 rng(0x746f726f);

  criterion1(rng);
  criterion2(root);
  criteria3and6(rng);
  criterion4(root);
  criterion5(rng);
  criterion7(rng);
  criterion8(rng);

  std::sort(lines.begin(), lines.end());
  for (auto& [n, line] : lines) std::cout << line << "\n";
  return failures == 0 ? 0 : 1;
}
