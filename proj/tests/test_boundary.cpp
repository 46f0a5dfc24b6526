#include <doctest.h>

#include "oracles.hpp"
#include "symlab/boundary/boundary.hpp"
#include "symlab/symmetrize/symmetrize.hpp"

using namespace symlab;

namespace {
GridSet block(std::int64_t lo, std::int64_t hi) {
  return GridSet::box(2, Dyadic(1), {lo, lo, 0}, {hi, hi, 0});
}
GridSet annulus(std::int64_t outer, std::int64_t thickness) {
  GridSet solid = block(0, outer);
  std::vector<Cell> cells;
  solid.for_each_cell([&](const Cell& c) {
    bool inner = c[0] >= thickness && c[0] <= outer - thickness && c[1] >= thickness &&
                 c[1] <= outer - thickness;
    if (!inner) cells.push_back(c);
  });
  return GridSet::from_cells(2, Dyadic(1), cells);
}
}  // namespace

TEST_CASE("rim extraction") {
  CHECK(grid_boundary(block(0, 2)).cell_count() == 8);
  GridSet single = GridSet::from_cells(2, Dyadic(1), {{4, 4, 0}});
  CHECK(grid_boundary(single) == single);
  CHECK(grid_boundary(block(0, 3)).cell_count() == 12);
  CHECK(subset(grid_boundary(block(0, 5)), block(0, 5)));
}

TEST_CASE("external boundary drops interior hole rims") {
  GridSet solid = block(0, 4);
  CHECK(external_boundary(solid) == grid_boundary(solid));
  GridSet ring = annulus(6, 2);
  GridSet outer = external_boundary(ring);
  GridSet full_rim = grid_boundary(ring);
  CHECK(subset(outer, full_rim));
  CHECK(outer.cell_count() < full_rim.cell_count());
  CHECK(outer.cell_count() == 24);  // the 7x7 outer rim
}

TEST_CASE("boundary sums reach the whole sum for blocks and annuli") {
  BoundarySumCheck same = boundary_sum_check(block(0, 4), block(0, 4));
  CHECK(same.hypothesis_ok);
  CHECK(same.holds);
  CHECK(same.subset_holds);

  BoundarySumCheck ring_case = boundary_sum_check(annulus(6, 2), block(0, 2));
  CHECK(ring_case.hypothesis_ok);
  CHECK(ring_case.holds);

  BoundarySumCheck contained = boundary_sum_check(block(0, 20), block(0, 1));
  CHECK(!contained.hypothesis_ok);
  CHECK(!contained.no_strict_containment);
  CHECK(contained.subset_holds);  // the inclusion needs no hypotheses
}

TEST_CASE("boundary sums on random hypothesis-passing pairs") {
  auto gen = oracle::rng(101);
  int passed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t size_k = 3 + static_cast<std::int64_t>(gen() % 6);
    std::int64_t size_l = 3 + static_cast<std::int64_t>(gen() % 6);
    GridSet k = block(0, size_k);
    GridSet l = gen() % 2 ? annulus(size_l + 2, 1 + static_cast<std::int64_t>(gen() % 2))
                          : block(0, size_l);
    BoundarySumCheck c = boundary_sum_check(k, l);
    CHECK(c.subset_holds);
    if (c.hypothesis_ok) {
      ++passed;
      CHECK(c.holds);
    }
  }
  CHECK(passed >= 20);
}

TEST_CASE("witness cells for crossing boundaries") {
  CommonBoundaryWitness w = common_boundary_witness(block(0, 3),
                                                    translated_cells(block(0, 3), {2, 0, 0}));
  CHECK(w.sets_intersect);
  CHECK(w.cell.has_value());

  CommonBoundaryWitness inside =
      common_boundary_witness(translated_cells(block(0, 1), {4, 4, 0}), block(0, 9));
  CHECK(inside.k_strictly_inside_l);
  CHECK(!inside.cell.has_value());
  CHECK(inside.failed_hypothesis == "strict containment");

  CommonBoundaryWitness same = common_boundary_witness(block(0, 3), block(0, 3));
  CHECK(same.cell.has_value());
  CHECK(grid_boundary(block(0, 3)).contains_cell(*same.cell));

  CommonBoundaryWitness apart =
      common_boundary_witness(block(0, 2), translated_cells(block(0, 2), {10, 0, 0}));
  CHECK(!apart.sets_intersect);
  CHECK(apart.failed_hypothesis == "sets do not intersect");
}

TEST_CASE("hull cell helpers bracket the set") {
  GridSet ring = annulus(5, 1);
  GridSet filled = filled_hull_cells(ring);
  CHECK(filled == block(0, 5));
  GridSet hull_rim = hull_boundary_cells(ring);
  CHECK(subset(hull_rim, filled));
  CHECK(hull_rim == grid_boundary(block(0, 5)));
  CHECK(grid_convex_within_collar(block(0, 5)));
  CHECK(!grid_convex_within_collar(annulus(8, 1)));
}

TEST_CASE("one averaged reflection convexifies hull-boundary data") {
  GridSet ring = annulus(6, 1);
  ConvexificationCheck c = one_step_convexification_check(ring, Subspace::y_axis());
  CHECK(c.hypothesis_ok);
  CHECK(c.holds);
  CHECK(c.symmetral_convex);

  ConvexificationCheck solid = one_step_convexification_check(block(0, 4), Subspace::x_axis());
  CHECK(solid.hypothesis_ok);
  CHECK(solid.holds);

  GridSet antipodal = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}, {7, 7, 0}});
  ConvexificationCheck gate = one_step_convexification_check(antipodal, Subspace::x_axis());
  CHECK(!gate.hypothesis_ok);
}

TEST_CASE("symmetral of a convex block equals the symmetral of its rim") {
  for (auto h : {Subspace::x_axis(), Subspace::y_axis()}) {
    GridSet solid = block(0, 5);
    GridSet from_rim = minkowski_symmetrize(grid_boundary(solid), h);
    GridSet from_solid = minkowski_symmetrize(solid, h);
    CHECK(from_rim == from_solid);
  }
}

TEST_CASE("fiber schedules on a hollow shell land on the filled hull run") {
  GridSet solid = GridSet::box(3, Dyadic(1), {0, 0, 0}, {7, 7, 7});
  GridSet shell = grid_boundary(solid);
  ScheduleSpec spec;
  spec.family = {Subspace::z_axis()};
  spec.op = OperatorKind::fiber;
  spec.max_steps = 3;
  spec.tol = 1e-9;
  FiberKlainResult r = fiber_klain_run(shell, spec);
  CHECK(r.hypothesis_ok);
  CHECK(r.sections_convex_after_first);
  CHECK(r.cauchy);
  CHECK(r.limit_matches_hull_run);

  GridSet open_shell = [&] {
    std::vector<Cell> cells;
    shell.for_each_cell([&](const Cell& c) {
      if (c[2] != 7) cells.push_back(c);  // remove the top face
    });
    return GridSet::from_cells(3, Dyadic(1), cells);
  }();
  CHECK_THROWS_AS(fiber_klain_run(open_shell, spec), std::invalid_argument);

  ScheduleSpec plane_spec = spec;
  plane_spec.family = {Subspace::coordinate(3, {0, 1})};
  CHECK_THROWS_AS(fiber_klain_run(shell, plane_spec), std::invalid_argument);
}

TEST_CASE("solid convex blocks stabilize after one fiber step") {
  GridSet solid = GridSet::box(3, Dyadic(1), {-2, -2, -2}, {1, 1, 1});
  ScheduleSpec spec;
  spec.family = {Subspace::z_axis()};
  spec.op = OperatorKind::fiber;
  spec.max_steps = 3;
  spec.tol = 1e-9;
  FiberKlainResult r = fiber_klain_run(solid, spec);
  CHECK(r.hypothesis_ok);
  CHECK(r.sections_convex_after_first);
  CHECK(r.limit_matches_hull_run);
}

TEST_CASE("hyperplane rounding keeps the width and tightens the sandwich") {
  GridSet ring = [&] {
    GridSet solid = GridSet::box(2, Dyadic::from_double(0.125), {-16, -16, 0}, {15, 15, 0});
    return grid_boundary(solid);
  }();
  // Sixteen mirrors in bisection order: each new line halves the largest
  // unmirrored sector. Eight mirrors freeze a square at ratio sec(pi/8) > 1.05.
  std::vector<Subspace> lines;
  for (int k : {0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15})
    lines.push_back(Subspace::line_2d(k * M_PI / 16.0));
  KlartagReport r = klartag_rounding_run(AnySet(ring), lines, 16);
  CHECK(r.gate_ok);
  CHECK(r.width_constant);
  CHECK(r.sandwich_improved);
  CHECK(r.final_sandwich <= 1.05);

  // a disk-like polygon is already a ball
  std::vector<Eigen::Vector2d> disk;
  for (int k = 0; k < 48; ++k)
    disk.emplace_back(std::cos(2 * M_PI * k / 48), std::sin(2 * M_PI * k / 48));
  KlartagReport rd =
      klartag_rounding_run(AnySet(ConvexPolygon::hull_of(disk)), lines, 4);
  CHECK(rd.gate_ok);
  CHECK(rd.steps.front().sandwich <= 1.01);
  CHECK(rd.final_sandwich <= 1.01);
}
