#include <doctest.h>

#include "oracles.hpp"
#include "symlab/sequences/limits.hpp"
#include "symlab/sequences/schedule.hpp"
#include "symlab/symmetrize/symmetrize.hpp"

using namespace symlab;

namespace {
Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}
FinitePointSet two_points() {
  return FinitePointSet::from_points(2, {vec2(-1, 0), vec2(1, 0)}, std::ldexp(1.0, -40));
}
ScheduleSpec single_axis_spec(int steps, double tol) {
  ScheduleSpec s;
  s.family = {Subspace::y_axis()};
  s.max_steps = steps;
  s.tol = tol;
  return s;
}
}  // namespace

TEST_CASE("the two-point iteration approaches its hull segment at the exact rate") {
  LimitCheckResult r = iterated_central_limit_check(AnySet(two_points()),
                                                    Subspace::y_axis(), 10, 1e-12);
  REQUIRE(!r.report.steps.empty());
  CHECK(!r.violation_step.has_value());
  for (const auto& rec : r.report.steps) {
    if (!rec.materialized) break;
    double want = std::ldexp(0.5, -(rec.step - 1));
    CHECK(rec.dh_ref == want);  // bit-exact before any pruning
    CHECK(rec.summands == (1ull << (rec.step - 1)));
  }
}

TEST_CASE("convex inputs sit at the limit from the first step") {
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-1, -1}, {1, 1});
  LimitCheckResult r =
      iterated_central_limit_check(AnySet(square), Subspace::y_axis(), 8, 1e-9);
  for (const auto& rec : r.report.steps) CHECK(rec.dh_ref <= 1e-12);
  CHECK(r.reached_tol);
}

TEST_CASE("random clouds keep a monotone certified distance to the reference") {
  auto gen = oracle::rng(73);
  for (int seed = 0; seed < 20; ++seed) {
    FinitePointSet cloud = oracle::random_cloud(gen, 10, std::ldexp(1.0, -40));
    // the summand certificate reaches 1e-7 once sqrt(2) D / 2^(m-1) drops
    // below it, around thirty steps for unit-scale data
    LimitCheckResult r =
        iterated_central_limit_check(AnySet(cloud), Subspace::y_axis(), 34, 1e-7);
    CHECK(!r.violation_step.has_value());
    CHECK(r.reached_tol);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& rec : r.report.steps) {
      CHECK(rec.dh_ref <= prev + rec.dh_ref_err + 1e-12);
      prev = rec.dh_ref;
    }
  }
}

TEST_CASE("fixed points stop the schedule at the tolerance") {
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-1, -1}, {1, 1});
  RunResult run = run_schedule(AnySet(square), single_axis_spec(16, 1e-9));
  CHECK(run.report.stop_reason == StopReason::tolerance_met);
  CHECK(run.report.steps.size() == 3);  // the Cauchy window
  for (const auto& rec : run.report.steps) CHECK(rec.dh_prev <= 1e-12);
}

TEST_CASE("cloud runs and hull runs share their limit") {
  auto gen = oracle::rng(79);
  for (int seed = 0; seed < 10; ++seed) {
    FinitePointSet cloud = oracle::random_cloud(gen, 9, std::ldexp(1.0, -40));
    ScheduleSpec spec;
    spec.family = {Subspace::x_axis(), Subspace::y_axis()};
    spec.kind = ScheduleKind::cyclic;
    spec.max_steps = 64;
    spec.tol = 1e-7;
    RunResult cloud_run = run_schedule(AnySet(cloud), spec);
    RunResult hull_run = run_schedule(AnySet(hull_polygon(AnySet(cloud))), spec);
    CHECK(cloud_run.report.stop_reason == StopReason::tolerance_met);
    CHECK(hull_run.report.stop_reason == StopReason::tolerance_met);
    ApproxDistance d =
        hausdorff_distance(cloud_run.limit_candidate(), hull_run.limit_candidate());
    CHECK(d.value <= 2.0 * spec.tol + d.error);
  }
}

TEST_CASE("iterates only grow once the set is mirror symmetric") {
  FinitePointSet k = minkowski_symmetrize(two_points(), Subspace::y_axis());
  for (int m = 0; m < 6; ++m) {
    FinitePointSet next = minkowski_symmetrize(k, Subspace::y_axis());
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(next.contains(k.point(i)));
    k = next;
  }
}

TEST_CASE("limit symmetry holds for every family member of a cyclic run") {
  auto gen = oracle::rng(83);
  FinitePointSet cloud = oracle::random_cloud(gen, 8, std::ldexp(1.0, -40));
  ScheduleSpec spec;
  spec.family = {Subspace::x_axis(), Subspace::y_axis()};
  spec.max_steps = 80;
  spec.tol = 1e-7;
  RunResult run = run_schedule(AnySet(cloud), spec);
  REQUIRE(run.report.stop_reason == StopReason::tolerance_met);
  auto checks = klain_limit_symmetry_check(run.report, spec, run.limit_candidate());
  REQUIRE(checks.size() == 2);
  for (const auto& c : checks) CHECK(c.pass);
}

TEST_CASE("explicit schedules only assert tail members") {
  ScheduleSpec spec;
  spec.family = {Subspace::x_axis(), Subspace::y_axis()};
  spec.kind = ScheduleKind::explicit_list;
  spec.explicit_indices = {1, 0, 0, 0, 0, 0, 0, 0};
  spec.max_steps = 8;
  spec.tol = 1e-7;
  ConvexPolygon tri = ConvexPolygon::hull_of({{0, 0}, {4, 0}, {0, 3}});
  RunResult run = run_schedule(AnySet(tri), spec);
  auto checks = klain_limit_symmetry_check(run.report, spec, run.limit_candidate());
  REQUIRE(checks.size() == 1);  // the axis used once, early, is not asserted
  CHECK(checks.front().subspace == Subspace::x_axis().label());
}

TEST_CASE("seeded random schedules reproduce byte-identical csv") {
  auto gen = oracle::rng(89);
  FinitePointSet cloud = oracle::random_cloud(gen, 8, std::ldexp(1.0, -40));
  ScheduleSpec spec;
  spec.family = {Subspace::x_axis(), Subspace::y_axis()};
  spec.kind = ScheduleKind::random_seeded;
  spec.seed = 0xfeedbeef;
  spec.max_steps = 12;
  spec.tol = 1e-10;
  std::string csv1 = run_schedule(AnySet(cloud), spec).report.to_csv();
  std::string csv2 = run_schedule(AnySet(cloud), spec).report.to_csv();
  CHECK(csv1 == csv2);
  CHECK(csv1.rfind("step,subspace,dh_prev,dh_ref,diameter,volume,mean_width\n", 0) == 0);
}

TEST_CASE("interval runs use the exact lane") {
  IntervalUnion u({{Dyadic(-1), Dyadic(-1)}, {Dyadic(1), Dyadic(1)}});
  ScheduleSpec spec;
  spec.family = {Subspace::origin(1)};
  spec.max_steps = 6;
  spec.tol = 1e-9;
  RunResult run = run_schedule(AnySet(u), spec);
  CHECK(run.report.steps.size() == 6);
  const auto& first = run.report.steps.front();
  CHECK(first.volume == 0.0);  // still a finite set of points
  CHECK(std::get<IntervalUnion>(run.final).piece_count() == 65);  // 2^6 + 1 singletons
}

TEST_CASE("grid runs stop at the refinement cap") {
  GridSet g = GridSet::box(2, Dyadic(1), {0, 0, 0}, {2, 2, 0});
  ScheduleSpec spec;
  spec.family = {Subspace::y_axis()};
  spec.max_steps = 50;
  spec.tol = 1e-30;  // never met: force the cap
  spec.grid_step_cap = 3;
  RunResult run = run_schedule(AnySet(g), spec);
  CHECK(run.report.stop_reason == StopReason::cap_exceeded);
  CHECK(run.report.steps.size() == 3);
  CHECK(std::get<GridSet>(run.final).spacing() == Dyadic::from_parts(1, -3));
}

TEST_CASE("the gap of iterated sums stays under the diameter bound") {
  IntervalUnion bit({{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}});
  std::vector<AnySet> copies(5, AnySet(bit));
  SfsGapResult g = sfs_gap(copies);
  CHECK(g.holds);
  CHECK(g.gap.value == 0.5);
  CHECK(g.bound == 1.0);

  ConvexPolygon square = ConvexPolygon::axis_rectangle({0, 0}, {1, 1});
  SfsGapResult gp = sfs_gap({AnySet(square), AnySet(square), AnySet(square)});
  CHECK(gp.gap.value <= gp.gap.error + 1e-12);

  std::vector<AnySet> planar(4, AnySet(two_points()));
  SfsGapResult g2 = sfs_gap(planar);
  CHECK(g2.holds);
  CHECK(g2.bound == doctest::Approx(std::sqrt(2.0) * 2.0));
}

TEST_CASE("schedule validation rejects bad specs") {
  ScheduleSpec empty;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
  ScheduleSpec bad = single_axis_spec(0, 1e-6);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ScheduleSpec mism = single_axis_spec(4, 1e-6);
  CHECK_THROWS_AS(run_schedule(AnySet(IntervalUnion::point(Dyadic(0))), mism),
                  std::invalid_argument);
}
