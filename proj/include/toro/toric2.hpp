#pragma once
// 2D smooth toric fans and strong factorization of birational data into
// star subdivisions from both sides meeting at a common mediant refinement.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toro {

struct SupportMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ray {
  long x = 0, y = 0;
  bool operator==(const Ray& o) const { return x == o.x && y == o.y; }
};

long cross(const Ray& u, const Ray& v);
Ray primitive_ray(long x, long y);

// Rays in strict counterclockwise order; consecutive rays span smooth cones
// (det 1). A complete fan wraps around (the last-to-first cone included).
struct Fan2 {
  std::vector<Ray> rays;
  bool complete = false;

  void validate() const;  // throws std::runtime_error on violation
  int cone_count() const {
    return complete ? (int)rays.size() : (int)rays.size() - 1;
  }
  bool has_ray(const Ray& r) const;
  bool operator==(const Fan2& o) const {
    return complete == o.complete && rays == o.rays;
  }
};

// Insert the mediant ray into cone `i` (between rays i and i+1, cyclically
// for complete fans).
Fan2 star_subdivide(const Fan2& f, int cone);

Fan2 replay(Fan2 f, const std::vector<int>& script);

struct FactorScript {
  std::vector<int> ups;    // subdivisions applied to fa
  std::vector<int> downs;  // subdivisions applied to fb
  Fan2 common;             // the shared refinement both scripts reach
};

// Requires equal support: both complete, or identical first and last rays.
// Throws SupportMismatch otherwise.
FactorScript strong_factorize(const Fan2& fa, const Fan2& fb);

// Smooth complete fan containing the given rays plus the four unit rays
// (Hirzebruch-Jung insertions close non-unimodular gaps).
Fan2 complete_fan(const Fan2& f);

// Local model of a birational monomial germ with unimodular exponent matrix:
// source = standard cone, target = cone spanned by the matrix columns.
std::pair<Fan2, Fan2> germ_exponent_fan(const std::array<std::array<long, 2>, 2>& m);

}  // namespace toro
