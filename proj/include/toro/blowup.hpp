#pragma once
// Point blowups on both sides, recentering on exceptional divisors, and
// retargeting of X germs after a Y blowup.
//
// Chart convention: chart First keeps coordinate 1 and divides coordinate 2
// (new coords (x1, x2/x1)); chart Second divides coordinate 1 and keeps
// coordinate 2. The exceptional divisor is the kept-coordinate axis of each
// chart (axis1 in First, axis2 in Second).

#include "toro/model.hpp"

namespace toro {

struct BlowupCharts {
  int chart_first = -1;
  int chart_second = -1;
  int component = -1;  // the new exceptional ComponentId
};

BlowupCharts blowup_y(State& s, int ygerm_id);
BlowupCharts blowup_x(State& s, int xgerm_id);

// New active germ at the point (exceptional axis, other coordinate = c) of an
// existing X germ; the parent stays active and the point is marked consumed.
int recenter_exceptional(State& s, int xgerm_id, int exc_axis, const Rat& c);

// Recentered Y germ at coordinate c on `shift_axis` of parent (deduplicated).
int find_or_create_y_recenter(State& s, int parent_y, int shift_axis,
                              const Rat& c);

// Move the germ's target to the Y germ centered at its actual image point:
// recenters the target chart (creating Recenter Y germs) and hops from a
// chart-Second germ to its First sibling for points on the chart overlap.
// Requires the pulls to be regular at the origin.
void settle_target(State& s, XGerm& g);

// After blowup_y on the germ's target: compose the pulls with a chart map
// (chart Second: (pull1/pull2, pull2); chart First: (pull1, pull2/pull1)),
// choosing the valuation-indicated chart first, then settle the target.
// Throws if neither chart yields a regular germ (principalization was
// incomplete — internal error).
void retarget(State& s, int xgerm_id, const BlowupCharts& charts);

}  // namespace toro
