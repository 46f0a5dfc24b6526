#include <doctest.h>

#include <random>

#include "symlab/core/subspace.hpp"

using namespace symlab;

namespace {
Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST_CASE("projection onto coordinate subspaces and the origin") {
  CHECK(project(vec2(1, 2), Subspace::x_axis()) == vec2(1, 0));
  CHECK(project(vec2(3, 4), Subspace::origin(2)) == vec2(0, 0));
}

TEST_CASE("projection onto the diagonal line") {
  Subspace diag = Subspace::span(2, {vec2(1, 1)});
  Vector p = project(vec2(1, 1), diag);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reflection basics") {
  CHECK(reflect(vec2(1, 2), Subspace::x_axis()) == vec2(1, -2));
  CHECK(reflect(vec2(5, 0), Subspace::x_axis()) == vec2(5, 0));  // fixed points
  CHECK(reflect(vec2(3, 4), Subspace::origin(2)) == vec2(-3, -4));
}

TEST_CASE("reflection composed with itself is the identity, exactly on dyadic data") {
  Vector x = vec2(0.34375, -7.125);
  for (const Subspace& h : {Subspace::x_axis(), Subspace::y_axis(), Subspace::origin(2)}) {
    CHECK(reflect(reflect(x, h), h) == x);
  }
}

TEST_CASE("rotation matrices") {
  CHECK(rotation_2d(0.0).isApprox(Eigen::Matrix2d::Identity()));
  Eigen::Vector2d e1(1, 0);
  Eigen::Vector2d r = rotation_2d(M_PI / 2) * e1;
  CHECK(r.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.y() == doctest::Approx(1.0));
  Eigen::Vector2d r3 = rotation_2d(M_PI / 3) * e1;
  CHECK(r3.x() == doctest::Approx(0.5));
  CHECK(r3.y() == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(rotation_2d(0.7).determinant() == doctest::Approx(1.0));
}

TEST_CASE("reflection is an isometry and projection is idempotent") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    Vector x = vec2(u(gen), u(gen));
    Vector y = vec2(u(gen), u(gen));
    Subspace h = Subspace::span(2, {vec2(u(gen), u(gen) + 4.0)});
    CHECK((reflect(x, h) - reflect(y, h)).norm() ==
          doctest::Approx((x - y).norm()).epsilon(1e-9));
    Vector p = project(x, h);
    CHECK((project(p, h) - p).norm() <= 1e-12);
    CHECK((reflect(reflect(x, h), h) - x).norm() <= 1e-12);
  }
}

TEST_CASE("subspace invariants") {
  Subspace s = Subspace::span(2, {vec2(3, 4)});
  CHECK(s.basis().col(0).norm() == doctest::Approx(1.0));
  CHECK(!s.axis_aligned());
  Subspace snapped = Subspace::span(2, {vec2(0, 2)});
  CHECK(snapped.axis_aligned());
  CHECK(snapped.keeps_axis(1));
  CHECK_THROWS_AS(Subspace::span(2, {vec2(1, 0), vec2(2, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(project(Vector::Zero(3), Subspace::x_axis()), std::invalid_argument);
}

TEST_CASE("isometries compose and classify") {
  Isometry r = Isometry::rotation(M_PI / 2);
  Isometry t = Isometry::translation(vec2(1, 0));
  Isometry rt = r.compose(t);
  CHECK((rt.apply(vec2(0, 0)) - vec2(0, 1)).norm() <= 1e-12);
  CHECK(r.is_signed_permutation());
  CHECK(!Isometry::rotation(0.3).is_signed_permutation());
  Isometry refl = Isometry::reflection(Subspace::y_axis());
  CHECK(refl.apply(vec2(2, 5)) == vec2(-2, 5));
}
