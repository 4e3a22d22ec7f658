#pragma once
// The toroidalization loop: compute R_log, blow up its image points on Y,
// canonically principalize the center ideals on X, retarget, scan the new
// exceptional divisors for residual points of interest, and repeat until
// R_log is empty. Also the termination monitor.

#include "toro/blowup.hpp"
#include "toro/principalize.hpp"
#include "toro/ramification.hpp"

namespace toro {

struct StepReport {
  WeilDivisor r_before, r_after;
  std::vector<int> centers;                 // Y germ ids blown up
  std::vector<std::string> center_types;    // "1q" / "2q" per center
  std::vector<std::string> subcases;        // classifications at the centers
  std::vector<int> new_components;          // X exceptional component ids
  int x_blowups = 0;
};

// One pass over all centers; no-op (and empty report) when R_log is empty.
StepReport algorithm_step(State& s);

struct MonitorVerdict {
  bool ok = true;
  std::vector<std::string> violations;
};

// Clauses (o) and (ii): next never exceeds prev in the sorted-lex order, and
// decreases strictly when a 1q center occurred. Clause (i) — the bound on
// consecutive all-2q steps — needs run context and lives in run().
MonitorVerdict monitor_check(const WeilDivisor& prev, const WeilDivisor& next,
                             const std::vector<std::string>& center_types);

struct RunResult {
  std::vector<StepReport> steps;
  bool done = false;
  bool monitor_ok = true;
  std::vector<std::string> monitor_messages;
  // Bound for runs of consecutive all-2q steps: the largest entry sum of a
  // degenerate (determinant zero) valuation matrix among the non-toroidal
  // germs at run start; -1 when no such germ exists and the clause is vacuous.
  long all2q_bound = -1;
};

// Runs algorithm_step until R_log is empty, checking the monotone after every
// step: R_log never increases in the sorted-lex order, decreases strictly on
// steps with a 1_q center, and runs of all-2q steps respect the bound above.
// Throws NonTermination when max_steps is exhausted.
RunResult run(State& s, int max_steps);

}  // namespace toro
