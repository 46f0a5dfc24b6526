#include <doctest.h>

#include "oracles.hpp"
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
}  // namespace

TEST_CASE("the two-point set gains the origin under one averaged reflection") {
  FinitePointSet m1 = minkowski_symmetrize(two_points(), Subspace::y_axis());
  REQUIRE(m1.size() == 3);
  CHECK(m1.point(0) == vec2(-1, 0));
  CHECK(m1.point(1) == vec2(0, 0));
  CHECK(m1.point(2) == vec2(1, 0));

  FinitePointSet m2 = minkowski_symmetrize(m1, Subspace::y_axis());
  REQUIRE(m2.size() == 5);
  CHECK(m2.point(1) == vec2(-0.5, 0));
  CHECK(m2.point(3) == vec2(0.5, 0));
}

TEST_CASE("symmetric convex polygons are fixed points") {
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-1, -2}, {1, 2});
  ConvexPolygon out = minkowski_symmetrize(square, Subspace::y_axis());
  CHECK(hausdorff_distance(out, square) <= 1e-12);
  ConvexPolygon out2 = minkowski_symmetrize(square, Subspace::x_axis());
  CHECK(hausdorff_distance(out2, square) <= 1e-12);
}

TEST_CASE("translation equivariance: only the mirror component survives") {
  FinitePointSet a = two_points();
  Vector v = vec2(0.25, 0.75);
  FinitePointSet lhs = minkowski_symmetrize(translated(a, v), Subspace::y_axis());
  Vector v_h = project(v, Subspace::y_axis());
  FinitePointSet rhs = translated(minkowski_symmetrize(a, Subspace::y_axis()), v_h);
  CHECK(lhs == rhs);  // exact on dyadic data with an axis mirror
}

TEST_CASE("symmetric sets only grow") {
  FinitePointSet sym = FinitePointSet::from_points(
      2, {vec2(-1, 0), vec2(1, 0), vec2(0, 2)}, std::ldexp(1.0, -40));
  FinitePointSet out = minkowski_symmetrize(sym, Subspace::y_axis());
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(out.contains(sym.point(i)));
}

TEST_CASE("fixed points are convex and symmetric") {
  auto gen = oracle::rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    ConvexPolygon p = oracle::random_polygon(gen);
    ConvexPolygon sym = minkowski_symmetrize(p, Subspace::x_axis());
    ConvexPolygon again = minkowski_symmetrize(sym, Subspace::x_axis());
    CHECK(hausdorff_distance(sym, again) <= 1e-9);  // symmetrals are fixed
    ConvexPolygon mirrored = reflected(sym, Subspace::x_axis());
    CHECK(hausdorff_distance(sym, mirrored) <= 1e-9);
  }
}

TEST_CASE("mean width is preserved for arbitrary mirror lines") {
  auto gen = oracle::rng(47);
  std::uniform_real_distribution<double> angle(0.0, M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    ConvexPolygon p = oracle::random_polygon(gen);
    Subspace h = Subspace::line_2d(angle(gen));
    ConvexPolygon out = minkowski_symmetrize(p, h);
    double w0 = mean_width(p);
    CHECK(std::abs(mean_width(out) - w0) <= 1e-9 * std::max(1.0, w0));
  }
}

TEST_CASE("grid symmetrization halves the spacing and never loses volume") {
  auto gen = oracle::rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    GridSet g = oracle::random_grid_2d(gen);
    GridSet out = minkowski_symmetrize(g, Subspace::y_axis());
    CHECK(out.spacing() == g.spacing().halved());
    CHECK(!(volume(out) < volume(g)));
  }
}

TEST_CASE("hulls commute with the averaged reflection") {
  auto gen = oracle::rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    FinitePointSet a = oracle::random_cloud(gen, 8, 0.0);
    Subspace h = Subspace::line_2d(0.3 + 0.1 * trial);
    ConvexPolygon lhs = hull_polygon(AnySet(minkowski_symmetrize(a, h)));
    ConvexPolygon rhs = minkowski_symmetrize(hull_polygon(AnySet(a)), h);
    CHECK(hausdorff_distance(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("fiber sections centrally symmetrize about the base subspace") {
  // column at x = 0 with cells y in {0, 2}; mirror is the x-axis
  GridSet g = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}, {0, 2, 0}});
  GridSet out = fiber_symmetrize(g, Subspace::x_axis());
  CHECK(out.spacing() == Dyadic::from_double(0.5));
  // realized section [0,1] u [2,3] centered at the axis becomes [-1.5, 1.5]
  GridSet want = GridSet::from_runs(2, Dyadic::from_double(0.5),
                                    {{0, -3, 0, 1}, {0, -2, 0, 1}, {0, -1, 0, 1},
                                     {0, 0, 0, 1}, {0, 1, 0, 1}, {0, 2, 0, 1}});
  CHECK(out == want);
}

TEST_CASE("fiber symmetrization fixes centered symmetric convex blocks") {
  GridSet block = GridSet::box(2, Dyadic(1), {-2, -2, 0}, {1, 1, 0});  // [-2,2]^2
  GridSet out = fiber_symmetrize(block, Subspace::x_axis());
  GridSet want = refined(block);
  CHECK(out == want);
}

TEST_CASE("fiber sections agree with the 2-D route on random profiles") {
  auto gen = oracle::rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    // random convex row profile: convex lower edge, concave upper edge
    int rows = 1 + static_cast<int>(gen() % 9);
    std::vector<std::int64_t> lo(static_cast<std::size_t>(rows)), hi(lo);
    std::vector<std::int64_t> dlo, dhi;
    for (int i = 1; i < rows; ++i) {
      dlo.push_back(static_cast<std::int64_t>(gen() % 7) - 3);
      dhi.push_back(static_cast<std::int64_t>(gen() % 7) - 3);
    }
    std::sort(dlo.begin(), dlo.end());
    std::sort(dhi.begin(), dhi.end(), std::greater<>());
    lo[0] = static_cast<std::int64_t>(gen() % 5) - 2;
    hi[0] = lo[0] + static_cast<std::int64_t>(gen() % 6) + 2 * rows;
    bool ok = true;
    for (int i = 1; i < rows; ++i) {
      lo[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i) - 1] + dlo[static_cast<std::size_t>(i) - 1];
      hi[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i) - 1] + dhi[static_cast<std::size_t>(i) - 1];
      if (hi[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(i)]) ok = false;
    }
    if (!ok) continue;
    std::vector<GridSet::Run> runs2d, runs3d;
    for (int i = 0; i < rows; ++i) {
      runs2d.push_back({0, i, lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)]});
      runs3d.push_back({0, i, lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)]});
    }
    GridSet section = GridSet::from_runs(2, Dyadic(1), runs2d);
    GridSet embedded = GridSet::from_runs(3, Dyadic(1), runs3d);
    GridSet out3d = fiber_symmetrize(embedded, Subspace::z_axis());
    GridSet expected2d = minkowski_symmetrize(section, Subspace::origin(2));
    // the z = 0 slab of the output carries the centrally symmetrized section
    std::vector<GridSet::Run> slab;
    for (const auto& r : out3d.runs())
      if (r.z == 0) slab.push_back({0, r.y, r.x0, r.x1});
    CHECK(GridSet::from_runs(2, out3d.spacing(), slab) == expected2d);
  }
}

TEST_CASE("fiber output is symmetric under the mirror") {
  auto gen = oracle::rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    GridSet g = oracle::random_grid_2d(gen, 6, 12);
    GridSet out = fiber_symmetrize(g, Subspace::x_axis());
    CHECK(out == reflected(out, Subspace::x_axis()));
  }
}

TEST_CASE("line rearrangement recenters counts and preserves volume") {
  GridSet column = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}, {0, 2, 0}});
  GridSet out = steiner_symmetrize_grid(column, Subspace::x_axis());
  CHECK(out.cell_count() == 2);
  CHECK(out.contains_cell({0, 0, 0}));
  CHECK(out.contains_cell({0, 1, 0}));
  CHECK(volume(out) == volume(column));

  auto gen = oracle::rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    GridSet g = oracle::random_grid_2d(gen);
    GridSet s = steiner_symmetrize_grid(g, Subspace::x_axis());
    CHECK(volume(s) == volume(g));
    CHECK(steiner_symmetrize_grid(s, Subspace::x_axis()) == s);  // idempotent
  }
}

TEST_CASE("symmetric convex blocks are rearrangement fixed points") {
  GridSet block = GridSet::box(2, Dyadic(1), {0, -2, 0}, {3, 1, 0});
  CHECK(steiner_symmetrize_grid(block, Subspace::x_axis()) == block);
}

TEST_CASE("means of isometries generalize the symmetrization") {
  FinitePointSet a = two_points();
  Subspace h = Subspace::y_axis();
  AnySet via_mean =
      isometry_mean(AnySet(a), {Isometry::identity(2), Isometry::reflection(h)});
  CHECK(std::get<FinitePointSet>(via_mean) == minkowski_symmetrize(a, h));
  AnySet single = isometry_mean(AnySet(a), {Isometry::identity(2)});
  CHECK(std::get<FinitePointSet>(single) == a);
}

TEST_CASE("four reflection compositions reproduce two nested symmetrizations") {
  FinitePointSet k = FinitePointSet::from_points(
      2, {vec2(-1, 0), vec2(1, 0), vec2(0.5, 1)}, std::ldexp(1.0, -40));
  Subspace h1 = Subspace::y_axis(), h2 = Subspace::x_axis();
  Isometry r1 = Isometry::reflection(h1), r2 = Isometry::reflection(h2);
  AnySet mean = isometry_mean(AnySet(k), {Isometry::identity(2), r1, r2, r2.compose(r1)});
  FinitePointSet nested = minkowski_symmetrize(minkowski_symmetrize(k, h1), h2);
  CHECK(std::get<FinitePointSet>(mean) == nested);
}

TEST_CASE("rotation means preserve the width and round the body") {
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-0.5, -0.5}, {0.5, 0.5});
  AnySet one = blaschke_rotation_mean(AnySet(square), 1);
  CHECK(hausdorff_distance(std::get<ConvexPolygon>(one), square) <= 1e-12);
  AnySet four = blaschke_rotation_mean(AnySet(square), 4);
  CHECK(mean_width(std::get<ConvexPolygon>(four)) ==
        doctest::Approx(mean_width(square)).epsilon(1e-9));

  auto gen = oracle::rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolygon p = oracle::random_polygon(gen);
    if (p.degenerate()) continue;
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {1, 2, 4, 8}) {
      ConvexPolygon q = std::get<ConvexPolygon>(blaschke_rotation_mean(AnySet(p), n));
      Eigen::Vector2d c = centroid(q);
      double ratio = inradius(q, c) > 0 ? circumradius(q, c) / inradius(q, c)
                                        : std::numeric_limits<double>::infinity();
      CHECK(ratio <= prev + 1e-9);
      prev = ratio;
    }
  }
  CHECK_THROWS_AS(blaschke_rotation_mean(AnySet(square), 0), std::invalid_argument);
}
