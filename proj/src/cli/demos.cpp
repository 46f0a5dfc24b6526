#include "symlab/cli/demos.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "symlab/boundary/boundary.hpp"
#include "symlab/sequences/idempotency.hpp"
#include "symlab/sequences/limits.hpp"
#include "symlab/sequences/rounding.hpp"
#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

namespace {

struct Tally {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    out << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  }
};

FinitePointSet two_point_set() {
  Vector a(2), b(2);
  a << -1.0, 0.0;
  b << 1.0, 0.0;
  return FinitePointSet::from_points(2, {a, b}, std::ldexp(1.0, -40));
}

bool points_equal(const FinitePointSet& s, const std::vector<std::pair<double, double>>& want) {
  if (s.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (s.point(i)[0] != want[i].first || s.point(i)[1] != want[i].second) return false;
  return true;
}

int demo_two_point(std::ostream& out) {
  Tally t{out};
  FinitePointSet c = two_point_set();
  Subspace h = Subspace::y_axis();
  FinitePointSet m1 = minkowski_symmetrize(c, h);
  t.check(points_equal(m1, {{-1, 0}, {0, 0}, {1, 0}}),
          "averaged reflection of the two-point set adds the origin "
          "(H-symmetric invariance fails on compact sets)");
  FinitePointSet m2 = minkowski_symmetrize(m1, h);
  t.check(points_equal(m2, {{-1, 0}, {-0.5, 0}, {0, 0}, {0.5, 0}, {1, 0}}),
          "second symmetral adds the half points (no finite idempotency)");
  LimitCheckResult lim =
      iterated_central_limit_check(AnySet(c), h, 12, 1e-12, -1.0, 8'000'000);
  bool halving = true;
  for (const auto& rec : lim.report.steps) {
    double want = std::ldexp(0.5, -(rec.step - 1));
    if (std::abs(rec.dh_ref - want) > 0.0) halving = false;
  }
  t.check(halving && !lim.violation_step,
          "distance to conv of the first symmetral is exactly (1/2)*2^-(m-1) "
          "(iterated symmetrals converge to conv)");
  auto sym = klain_limit_symmetry_check(lim.report,
                                        [&] {
                                          ScheduleSpec s;
                                          s.family = {h};
                                          s.max_steps = 12;
                                          s.tol = 1e-9;
                                          return s;
                                        }(),
                                        AnySet(m2));
  t.check(!sym.empty() && sym.front().pass,
          "iterates stay symmetric with respect to H (limit symmetry)");
  return t.failures == 0 ? 0 : 2;
}

int demo_idempotency(std::ostream& out) {
  Tally t{out};
  auto quarter = [](std::int64_t num) { return Dyadic::from_parts(num, -2); };
  IntervalUnion k({{Dyadic(-1), quarter(-2)}, {quarter(2), Dyadic(1)}});
  IdempotencyWitness w = idempotency_index_1d(k, 10);
  t.check(w.certified && w.index == 2,
          "index of [-1,-1/2] u [1/2,1] under origin symmetrization is 2");
  t.check(w.log_bound >= w.index, "certified index within ceil(log2(4M/eps-1))+1");
  IntervalUnion singletons({{Dyadic(-1), Dyadic(-1)}, {Dyadic(1), Dyadic(1)}});
  IdempotencyWitness ws = idempotency_index_1d(singletons, 30);
  t.check(!ws.certified, "two isolated extremes never stabilize (cap 30)");
  IntervalUnion m({{Dyadic(0), quarter(1)}, {quarter(3), Dyadic(1)}});
  IdempotencyWitness wm = mean_index_1d(m, 10);
  t.check(wm.certified, "halving means of [0,1/4] u [3/4,1] reach [0,1]");
  IntervalUnion iso({{Dyadic(0), quarter(1)}, {Dyadic(1), Dyadic(1)}});
  IdempotencyWitness wi = mean_index_1d(iso, 20);
  t.check(!wi.certified, "isolated right extreme blocks the means version (cap 20)");
  return t.failures == 0 ? 0 : 2;
}

int demo_sfs_gap(std::ostream& out) {
  Tally t{out};
  IntervalUnion bit({{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}});
  std::vector<AnySet> copies(6, AnySet(bit));
  SfsGapResult g = sfs_gap(copies);
  t.check(g.holds, "gap of the 6-fold sum within sqrt(n) * max diameter "
                   "(Shapley-Folkman-Starr)");
  t.check(std::abs(g.gap.value - 0.5) <= g.gap.error,
          "6 copies of {0,1} leave a gap of exactly 1/2");
  ConvexPolygon square = ConvexPolygon::axis_rectangle({0, 0}, {1, 1});
  std::vector<AnySet> polys(4, AnySet(square));
  SfsGapResult gp = sfs_gap(polys);
  t.check(gp.gap.value <= gp.gap.error + 1e-12, "sums of convex sets have zero gap");
  return t.failures == 0 ? 0 : 2;
}

int demo_boundary_sum(std::ostream& out) {
  Tally t{out};
  Dyadic h(1);
  GridSet block = GridSet::box(2, h, {0, 0, 0}, {4, 4, 0});
  BoundarySumCheck c1 = boundary_sum_check(block, block);
  t.check(c1.hypothesis_ok && c1.holds,
          "K + L = dK + dL for two 5x5 blocks (connected boundaries, no strict "
          "containment)");
  GridSet ring = [&] {
    std::vector<Cell> cells;
    for (std::int64_t x = 0; x <= 6; ++x)
      for (std::int64_t y = 0; y <= 6; ++y)
        if (x == 0 || y == 0 || x == 6 || y == 6 || x == 1 || y == 1 || x == 5 || y == 5)
          cells.push_back({x, y, 0});
    return GridSet::from_cells(2, h, cells);
  }();
  GridSet small = GridSet::box(2, h, {0, 0, 0}, {2, 2, 0});
  BoundarySumCheck c2 = boundary_sum_check(ring, small);
  t.check(c2.hypothesis_ok && c2.holds, "square annulus + 3x3 block satisfies the equality");
  GridSet huge = GridSet::box(2, h, {0, 0, 0}, {20, 20, 0});
  GridSet tiny = GridSet::box(2, h, {0, 0, 0}, {1, 1, 0});
  BoundarySumCheck c3 = boundary_sum_check(huge, tiny);
  t.check(!c3.hypothesis_ok, "a far smaller block fails the no-containment hypothesis");
  t.check(c1.subset_holds && c2.subset_holds && c3.subset_holds,
          "dK + dL inside K + L with no hypotheses");
  CommonBoundaryWitness w = common_boundary_witness(
      GridSet::box(2, h, {0, 0, 0}, {3, 3, 0}), GridSet::box(2, h, {2, 0, 0}, {5, 3, 0}));
  t.check(w.cell.has_value(), "overlapping blocks share a boundary cell");
  return t.failures == 0 ? 0 : 2;
}

int demo_fiber_3d(std::ostream& out) {
  Tally t{out};
  GridSet solid = GridSet::box(3, Dyadic(1), {0, 0, 0}, {9, 9, 9});
  GridSet shell = grid_boundary(solid);
  ScheduleSpec spec;
  spec.family = {Subspace::z_axis()};
  spec.op = OperatorKind::fiber;
  spec.max_steps = 4;
  spec.tol = 1e-9;
  FiberKlainResult r = fiber_klain_run(shell, spec);
  t.check(r.hypothesis_ok, "hollow shell contains its hull boundary");
  t.check(r.sections_convex_after_first, "every fiber section is convex after one step");
  t.check(r.cauchy, "iterates are Cauchy at collar scale");
  t.check(r.limit_matches_hull_run, "limit matches the filled-hull run within the collar");
  return t.failures == 0 ? 0 : 2;
}

int demo_hadwiger(std::ostream& out) {
  Tally t{out};
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-0.5, -0.5}, {0.5, 0.5});
  RoundingReport r = hadwiger_rounding_run(AnySet(square));
  t.check(std::abs(r.steps.front().ratio - std::sqrt(2.0)) < 1e-9,
          "unit square starts at circumradius/inradius = sqrt(2)");
  t.check(r.ratio_decreased && r.final_round,
          "rotation means round the square toward a ball (final ratio within 5%)");
  std::vector<Eigen::Vector2d> disk;
  for (int k = 0; k < 64; ++k)
    disk.emplace_back(std::cos(2 * M_PI * k / 64), std::sin(2 * M_PI * k / 64));
  RoundingReport rd = hadwiger_rounding_run(AnySet(ConvexPolygon::hull_of(disk)));
  t.check(rd.steps.front().ratio < 1.01 && rd.final_round,
          "a disk-like polygon stays a ball");
  RoundingReport r2 = hadwiger_rounding_run(AnySet(two_point_set()));
  double w = mean_width(hull_polygon(AnySet(two_point_set())));
  double want_r = w / 2.0;
  double got_r = r2.steps.back().circumradius;
  t.check(std::abs(got_r - want_r) / want_r < 0.15,
          "rotation means of the two-point set approach the ball of radius w/2 "
          "(means of isometries see only the hull)");
  return t.failures == 0 ? 0 : 2;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"klain-two-point", "idempotency-1d", "sfs-gap", "boundary-sum", "fiber-3d",
          "hadwiger"};
}

int run_demo(const std::string& name, std::ostream& out) {
  if (name == "klain-two-point") return demo_two_point(out);
  if (name == "idempotency-1d") return demo_idempotency(out);
  if (name == "sfs-gap") return demo_sfs_gap(out);
  if (name == "boundary-sum") return demo_boundary_sum(out);
  if (name == "fiber-3d") return demo_fiber_3d(out);
  if (name == "hadwiger") return demo_hadwiger(out);
  out << "unknown demo: " << name << "\n";
  return 1;
}

}  // namespace symlab
