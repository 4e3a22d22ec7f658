#include "toro/toric2.hpp"

#include <algorithm>
#include <numeric>

namespace toro {

long cross(const Ray& u, const Ray& v) { return u.x * v.y - u.y * v.x; }

Ray primitive_ray(long x, long y) {
  if (x == 0 && y == 0) throw std::runtime_error("zero ray");
  long g = std::gcd(std::abs(x), std::abs(y));
  return Ray{x / g, y / g};
}

void Fan2::validate() const {
  if ((int)rays.size() < 2)
    throw std::runtime_error("fan needs at least two rays");
  if (complete && (int)rays.size() < 3)
    throw std::runtime_error("complete fan needs at least three rays");
  for (const Ray& r : rays) {
    if (r.x == 0 && r.y == 0) throw std::runtime_error("zero ray in fan");
    long g = std::gcd(std::abs(r.x), std::abs(r.y));
    if (g != 1) throw std::runtime_error("non-primitive ray in fan");
  }
  int n = (int)rays.size();
  for (int i = 0; i < cone_count(); i++)
    if (cross(rays[i], rays[(i + 1) % n]) != 1)
      throw std::runtime_error("non-smooth or mis-ordered cone in fan");
}

bool Fan2::has_ray(const Ray& r) const {
  return std::find(rays.begin(), rays.end(), r) != rays.end();
}

Fan2 star_subdivide(const Fan2& f, int cone) {
  if (cone < 0 || cone >= f.cone_count())
    throw std::runtime_error("star_subdivide: no such cone");
  int n = (int)f.rays.size();
  const Ray& u = f.rays[cone];
  const Ray& v = f.rays[(cone + 1) % n];
  Ray m{u.x + v.x, u.y + v.y};
  Fan2 g = f;
  g.rays.insert(g.rays.begin() + cone + 1, m);
  return g;
}

Fan2 replay(Fan2 f, const std::vector<int>& script) {
  for (int i : script) {
    f = star_subdivide(f, i);
    f.validate();
  }
  return f;
}

namespace {

// Rays strictly between u and v turning cone(u, v) into a chain of smooth
// cones (Hirzebruch-Jung resolution); empty when the cone is already smooth.
std::vector<Ray> hj_between(Ray u, Ray v) {
  std::vector<Ray> out;
  long d = cross(u, v);
  if (d <= 0) throw std::runtime_error("hj_between: cone is not convex");
  while (d > 1) {
    Ray w{0, 0};
    bool found = false;
    for (long k = 1; k < d && !found; k++) {
      long wx = v.x + k * u.x, wy = v.y + k * u.y;
      if (wx % d == 0 && wy % d == 0) {
        w = Ray{wx / d, wy / d};
        found = true;
      }
    }
    if (!found) throw std::runtime_error("hj_between: no lattice mediant");
    out.push_back(w);
    u = w;
    d = cross(u, v);
  }
  return out;
}

void insert_ray(Fan2& t, const Ray& r) {
  if (t.has_ray(r)) return;
  int n = (int)t.rays.size();
  for (int i = 0; i < t.cone_count(); i++) {
    const Ray u = t.rays[i];
    const Ray v = t.rays[(i + 1) % n];
    if (cross(u, r) > 0 && cross(r, v) > 0) {
      std::vector<Ray> seg = hj_between(u, r);
      seg.push_back(r);
      auto tail = hj_between(r, v);
      seg.insert(seg.end(), tail.begin(), tail.end());
      t.rays.insert(t.rays.begin() + i + 1, seg.begin(), seg.end());
      return;
    }
  }
  throw SupportMismatch("ray outside the fan support");
}

std::vector<int> greedy_script(const Fan2& from, const Fan2& to) {
  std::vector<int> script;
  Fan2 cur = from;
  for (;;) {
    bool found = false;
    int n = (int)cur.rays.size();
    for (int i = 0; i < cur.cone_count(); i++) {
      Ray m{cur.rays[i].x + cur.rays[(i + 1) % n].x,
            cur.rays[i].y + cur.rays[(i + 1) % n].y};
      if (to.has_ray(m)) {
        cur = star_subdivide(cur, i);
        script.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  if (!(cur == to))
    throw std::runtime_error("internal: greedy subdivision did not reach the refinement");
  return script;
}

}  // namespace

FactorScript strong_factorize(const Fan2& fa, const Fan2& fb) {
  fa.validate();
  fb.validate();
  if (fa.complete != fb.complete)
    throw SupportMismatch("one fan is complete and the other is not");
  if (!fa.complete &&
      (!(fa.rays.front() == fb.rays.front()) || !(fa.rays.back() == fb.rays.back())))
    throw SupportMismatch("fan supports differ");

  Fan2 t = fa;
  for (const Ray& r : fb.rays) insert_ray(t, r);
  t.validate();

  FactorScript fs;
  fs.common = t;
  fs.ups = greedy_script(fa, t);
  fs.downs = greedy_script(fb, t);
  return fs;
}

Fan2 complete_fan(const Fan2& f) {
  std::vector<Ray> rays = f.rays;
  for (Ray u : {Ray{1, 0}, Ray{0, 1}, Ray{-1, 0}, Ray{0, -1}})
    if (std::find(rays.begin(), rays.end(), u) == rays.end()) rays.push_back(u);
  // counterclockwise starting at (1,0): upper half (incl. positive x axis)
  // before lower half, by angle within each half
  auto half = [](const Ray& r) { return (r.y > 0 || (r.y == 0 && r.x > 0)) ? 0 : 1; };
  std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });
  Fan2 out;
  out.complete = true;
  int n = (int)rays.size();
  for (int i = 0; i < n; i++) {
    out.rays.push_back(rays[i]);
    auto seg = hj_between(rays[i], rays[(i + 1) % n]);
    out.rays.insert(out.rays.end(), seg.begin(), seg.end());
  }
  out.validate();
  return out;
}

std::pair<Fan2, Fan2> germ_exponent_fan(const std::array<std::array<long, 2>, 2>& m) {
  long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 1 && det != -1)
    throw std::runtime_error("germ_exponent_fan: exponent matrix is not unimodular");
  Fan2 src;
  src.rays = {Ray{1, 0}, Ray{0, 1}};
  Ray c1 = primitive_ray(m[0][0], m[1][0]);
  Ray c2 = primitive_ray(m[0][1], m[1][1]);
  if (cross(c1, c2) < 0) std::swap(c1, c2);
  Fan2 dst;
  dst.rays = {c1, c2};
  return {src, dst};
}

}  // namespace toro
