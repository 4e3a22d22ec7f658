#include <doctest.h>

#include "helpers.hpp"

using namespace toro;
using toro_test::make_state;

TEST_CASE("single step on the basic 1q germ") {
  State s = make_state("x1^2", "x1^3 + x1*x2", {1}, {1});
  StepReport rep = algorithm_step(s);
  REQUIRE(rep.r_before.size() == 1);
  CHECK(rep.r_before.begin()->second == 1);
  CHECK(rep.r_after.empty());
  REQUIRE(rep.centers.size() == 1);
  CHECK(rep.center_types[0] == "1q");
  REQUIRE(rep.subcases.size() == 1);
  CHECK(rep.subcases[0] == std::string("S1p1q1"));
  CHECK(rep.x_blowups == 1);
  for (int id : s.active_xids()) CHECK(toroidal_at(s, s.xgerms[id]));
}

TEST_CASE("step on a degenerate 2q germ keeps the divisor") {
  // valuation matrix rows (1,1), (1,1): determinant zero, 2q center
  State s = make_state("x1*x2", "x1*x2 + x1^2*x2", {1, 2}, {1, 2});
  StepReport rep = algorithm_step(s);
  CHECK(rep.center_types == std::vector<std::string>{"2q"});
  CHECK(compare_divisors(rep.r_after, rep.r_before) != Cmp::Greater);
  CHECK(!rep.r_after.empty());
}

TEST_CASE("monitor clauses") {
  WeilDivisor a, b, c;
  a[0] = 1;
  b[0] = 1;
  b[1] = 1;
  // growth violates (o)
  MonitorVerdict v1 = monitor_check(a, b, {"2q"});
  CHECK(!v1.ok);
  // equality on a 1q step violates (ii)
  MonitorVerdict v2 = monitor_check(a, a, {"1q"});
  CHECK(!v2.ok);
  // strict decrease on a 1q step is fine
  MonitorVerdict v3 = monitor_check(a, c, {"1q"});
  CHECK(v3.ok);
  // equality on an all-2q step is fine here (clause (i) is run-level)
  MonitorVerdict v4 = monitor_check(a, a, {"2q"});
  CHECK(v4.ok);
}

TEST_CASE("full run on the 2q staircase") {
  // coefficients walk down 3,2 -> 2,1 -> 1 -> 0
  State s = make_state("x1*x2", "x1^3*x2^2", {1, 2}, {1});
  RunResult res = run(s, 16);
  CHECK(res.done);
  CHECK(res.monitor_ok);
  REQUIRE(res.steps.size() == 3);
  CHECK(sorted_key(res.steps[0].r_before) == SortedKey{3, 2});
  CHECK(sorted_key(res.steps[1].r_before) == SortedKey{2, 1});
  CHECK(sorted_key(res.steps[2].r_before) == SortedKey{1});
  CHECK(res.steps[2].r_after.empty());
}

TEST_CASE("run records the clause (i) bound") {
  State s = make_state("x1*x2", "x1*x2 + x1^2*x2", {1, 2}, {1, 2});
  RunResult res = run(s, 16);
  CHECK(res.done);
  CHECK(res.monitor_ok);
  CHECK(res.all2q_bound == 4);  // degenerate matrix (1,1),(1,1)
}

TEST_CASE("identity needs no steps") {
  State s = make_state("x1", "x2", {1, 2}, {1, 2});
  RunResult res = run(s, 4);
  CHECK(res.done);
  CHECK(res.steps.empty());
}

TEST_CASE("step limit exhaustion") {
  State s = make_state("x1^2", "x1^3 + x1*x2", {1}, {1});
  CHECK_THROWS_AS(run(s, 0), NonTermination);
}

TEST_CASE("post-step coefficient formula, one instance") {
  // a = 1, i_o = 2, i_s = 3: a < min(i_o, i_s), so the new coefficient on the
  // strict transform is i_o - a = 1; one more step clears it.
  State s = make_state("x1", "x1^3 + x1^2*x2", {1}, {1});
  SubcaseData sd = classify_subcase(s, s.xgerms[0]);
  REQUIRE(sd.subcase == Subcase::S1p1q1);
  StepReport rep = algorithm_step(s);
  // the strict transform of G1 keeps coefficient i_o - a
  int g1 = *s.xgerms[0].boundary[0];
  REQUIRE(rep.r_after.count(g1));
  CHECK(rep.r_after.at(g1) == 1);
  RunResult res = run(s, 8);
  CHECK(res.done);
}
