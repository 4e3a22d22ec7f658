#pragma once
// Algorithm state: named boundary components, chart germs on both sides with
// blowup lineage, Weil divisors with the sorted-lex order, validation.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "toro/algebra.hpp"

namespace toro {

using Json = nlohmann::json;

enum class Side { SourceX, TargetY };

struct ComponentInfo {
  Side side;
  bool exceptional;
  int ordinal;       // 1-based per (side, exceptional) family
  std::string name;  // G1/G2, H1/H2, Ep1.., Eq1..
};

struct ChartRel {
  enum Kind { First, Second, Recenter };
  int parent = -1;
  Kind kind = First;
  int axis = 0;  // Recenter only: which coordinate was shifted
  Rat c = 0;     // Recenter only: shift amount
};

struct YGerm {
  int id = -1;
  std::optional<int> boundary[2];  // component id on axis {1,2} (index 0/1)
  std::optional<ChartRel> parent;
  int depth = 0;
  bool blown = false;  // has been blown up; no longer a valid target

  int boundary_count() const {
    return (boundary[0] ? 1 : 0) + (boundary[1] ? 1 : 0);
  }
};

struct XGerm {
  int id = -1;
  std::optional<int> boundary[2];
  int target = -1;  // YGerm id
  Frac2 pull1, pull2;
  std::optional<ChartRel> parent;
  int depth = 0;
  // Axis carrying the exceptional divisor created by this germ's own birth
  // blowup (chart germs only); its non-origin points are canonically
  // parameterized in the First chart, so Second charts never scan it.
  std::optional<int> birth_exc_axis;
  bool active = false;
  // Offset from this chart's axis coordinate to the canonical coordinate of
  // the boundary component on that axis (canonical = the chart where the
  // component was born). Strict transforms and recenters only ever shift this
  // parameter, so a single offset per axis identifies points across charts.
  Rat axis_shift[2] = {0, 0};

  int boundary_count() const {
    return (boundary[0] ? 1 : 0) + (boundary[1] ? 1 : 0);
  }
};

using WeilDivisor = std::map<int, long>;  // component id -> coefficient > 0
using SortedKey = std::vector<long>;

struct TraceEvent {
  int seq;
  std::string kind;
  Json payload;
};

struct State {
  std::vector<ComponentInfo> components;
  std::vector<YGerm> ygerms;
  std::vector<XGerm> xgerms;
  std::vector<TraceEvent> events;
  int step = 0;
  // (component id, canonical coordinate) of every non-origin boundary point
  // that already carries a germ; scans skip these.
  std::set<std::pair<int, Rat>> germed_points;

  int new_component(Side side, bool exceptional);
  const std::string& comp_name(int id) const { return components[id].name; }
  std::vector<int> active_xids() const;
  void record(const std::string& kind, Json payload);
  Json divisor_json(const WeilDivisor& d) const;
};

struct Validation {
  bool ok = true;
  int clause = 0;  // 1..4 when failed
  std::string message;
};

// A germ produced by the algorithm failed validation — the input breaks the
// morphism contract somewhere away from the original center.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordinary Jacobian determinant of (pull1, pull2).
Frac2 jacobian(const XGerm& g);

// Clauses: (i) denominators regular at origin, (ii) pullback of the target
// boundary product vanishes exactly on the declared X axes (unit residual,
// and each boundary pullback vanishes at the origin), (iii) Jacobian =
// boundary monomial times unit at origin, (iv) dominant.
Validation validate_germ(const State& s, const XGerm& g);

SortedKey sorted_key(const WeilDivisor& d);
enum class Cmp { Less, Equal, Greater };
Cmp compare_divisors(const WeilDivisor& a, const WeilDivisor& b);

// Chart-overlap transition for sibling blowup charts: the point seen at
// coordinate c on the exceptional axis of the First chart is at 1/c on the
// exceptional axis of the Second chart. Asserts both recentered germs
// validate identically. c must be nonzero.
Rat identify_overlap_point(const State& s, const XGerm& first_chart,
                           const XGerm& second_chart, const Rat& c);

// Recentered copy of an X germ at the point (exceptional axis, other
// coordinate = c); not registered in any State.
XGerm recentered_copy(const XGerm& g, int exc_axis, const Rat& c);

}  // namespace toro
