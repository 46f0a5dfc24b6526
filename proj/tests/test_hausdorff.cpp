#include <doctest.h>

#include "oracles.hpp"
#include "symlab/sets/hausdorff.hpp"

using namespace symlab;

namespace {
Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST_CASE("collinear point sets against segments take the exact lane") {
  FinitePointSet pts = FinitePointSet::from_points(2, {vec2(-1, 0), vec2(1, 0)}, 0.0);
  ConvexPolygon seg = ConvexPolygon::segment({-1, 0}, {1, 0});
  ApproxDistance d = hausdorff_distance(pts, seg);
  CHECK(d.error == 0.0);
  CHECK(d.value == 1.0);  // the midpoint of the segment is 1 away from both points

  FinitePointSet three =
      FinitePointSet::from_points(2, {vec2(-1, 0), vec2(0, 0), vec2(1, 0)}, 0.0);
  CHECK(hausdorff_distance(three, seg).value == 0.5);
}

TEST_CASE("lattice clouds against their hull segment") {
  for (int k = 2; k <= 10; ++k) {
    std::vector<Vector> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(vec2(i, 0));
    FinitePointSet cloud = FinitePointSet::from_points(2, pts, 0.0);
    ConvexPolygon seg = ConvexPolygon::segment({0, 0}, {static_cast<double>(k), 0});
    CHECK(hausdorff_distance(cloud, seg).value == 0.5);
  }
}

TEST_CASE("full-dimensional bridge reports its sampling error") {
  ConvexPolygon square = ConvexPolygon::axis_rectangle({-1, -1}, {1, 1});
  FinitePointSet corners = FinitePointSet::from_points(
      2, {vec2(-1, -1), vec2(1, -1), vec2(1, 1), vec2(-1, 1)}, 0.0);
  ApproxDistance d = hausdorff_distance(corners, square);
  CHECK(d.error > 0.0);
  // the center of the square is sqrt(2) away from every corner
  CHECK(d.value == doctest::Approx(std::sqrt(2.0)).epsilon(0.01));
  CHECK(std::abs(d.value - std::sqrt(2.0)) <= d.error + 1e-12);
}

TEST_CASE("1-D point sets against interval unions are exact") {
  Vector a(1), b(1);
  a << 0.0;
  b << 1.0;
  FinitePointSet pts = FinitePointSet::from_points(1, {a, b}, 0.0);
  IntervalUnion seg = IntervalUnion::segment(Dyadic(0), Dyadic(1));
  CHECK(hausdorff_distance(pts, seg) == Dyadic::from_double(0.5));
}

TEST_CASE("grid pairs at matching and mismatched spacing") {
  GridSet a = GridSet::box(2, Dyadic(1), {0, 0, 0}, {1, 1, 0});
  CHECK(hausdorff_distance(a, a).value == 0.0);
  GridSet b = translated_cells(a, {3, 0, 0});
  ApproxDistance d = hausdorff_distance(a, b);
  CHECK(d.value == doctest::Approx(3.0).epsilon(0.2));
  GridSet fine = refined(a);
  CHECK(hausdorff_distance(a, fine).value <= hausdorff_distance(a, fine).error);
}

TEST_CASE("points against grids mix exact and sampled directions") {
  GridSet g = GridSet::box(2, Dyadic(1), {0, 0, 0}, {1, 1, 0});
  FinitePointSet inside = FinitePointSet::from_points(2, {vec2(1.0, 1.0)}, 0.0);
  ApproxDistance d = hausdorff_distance(AnySet(inside), AnySet(g));
  // excess of the set over the point dominates: farthest cube corner
  CHECK(d.value == doctest::Approx(std::sqrt(2.0)).epsilon(0.3));
  FinitePointSet outside = FinitePointSet::from_points(2, {vec2(4.0, 1.0)}, 0.0);
  ApproxDistance d2 = hausdorff_distance(AnySet(outside), AnySet(g));
  CHECK(d2.value >= 2.0 - 1e-12);
}

TEST_CASE("polygon pairs are exact at vertices") {
  ConvexPolygon a = ConvexPolygon::axis_rectangle({0, 0}, {1, 1});
  ConvexPolygon b = ConvexPolygon::axis_rectangle({0, 0}, {2, 1});
  CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));
  CHECK(hausdorff_distance(b, a) == doctest::Approx(1.0));
}
