#include <doctest.h>

#include "oracles.hpp"
#include "symlab/sets/grid_set.hpp"

using namespace symlab;

TEST_CASE("runs canonicalize and respect dimension") {
  GridSet g = GridSet::from_runs(2, Dyadic(1), {{0, 0, 2, 3}, {0, 0, 0, 1}, {0, 1, 0, 0}});
  CHECK(g.runs().size() == 2);  // the x-adjacent runs merged
  CHECK(g.cell_count() == 5);
  CHECK(g.contains_cell({3, 0, 0}));
  CHECK(!g.contains_cell({4, 0, 0}));
  CHECK_THROWS_AS(GridSet::from_runs(1, Dyadic(1), {{0, 1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GridSet::from_runs(2, Dyadic(0), {{0, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("cube sums dilate by one cell") {
  GridSet a = GridSet::from_cells(1, Dyadic(1), {{0, 0, 0}});
  GridSet sum = minkowski_sum(a, a);
  // [0,1] + [0,1] = [0,2]: cells {0,1}
  CHECK(sum.cell_count() == 2);
  CHECK(sum.contains_cell({0, 0, 0}));
  CHECK(sum.contains_cell({1, 0, 0}));
}

TEST_CASE("grid sums match realized membership on random sets") {
  auto gen = oracle::rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    GridSet a = oracle::random_grid_2d(gen, 6, 10);
    GridSet b = oracle::random_grid_2d(gen, 6, 10);
    GridSet sum = minkowski_sum(a, b);
    // realized membership: x in A+B iff some cube pair covers it
    auto gen_point = [&](const GridSet& g, std::mt19937_64& r) {
      const auto& runs = g.runs();
      const auto& run = runs[r() % runs.size()];
      double x = static_cast<double>(run.x0) +
                 static_cast<double>(r() % 1024) / 1024.0 * static_cast<double>(run.length());
      double y = static_cast<double>(run.y) + static_cast<double>(r() % 1024) / 1024.0;
      return std::pair{x, y};
    };
    for (int probe = 0; probe < 40; ++probe) {
      auto [ax, ay] = gen_point(a, gen);
      auto [bx, by] = gen_point(b, gen);
      Cell c{static_cast<std::int64_t>(std::floor(ax + bx)),
             static_cast<std::int64_t>(std::floor(ay + by)), 0};
      CHECK(sum.contains_cell(c));
    }
  }
}

TEST_CASE("power-of-two scaling changes the spacing only") {
  GridSet g = GridSet::from_cells(1, Dyadic(1), {{0, 0, 0}, {1, 0, 0}});
  GridSet half = scaled_pow2(g, -1);
  CHECK(half.spacing() == Dyadic::from_double(0.5));
  CHECK(half.runs() == g.runs());
  CHECK(volume(half) == Dyadic::from_double(1.0));
}

TEST_CASE("refinement preserves the realized set") {
  GridSet g = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}, {1, 0, 0}});
  GridSet r = refined(g);
  CHECK(r.spacing() == Dyadic::from_double(0.5));
  CHECK(r.cell_count() == 8);
  CHECK(volume(r) == volume(g));
  auto [a, b] = align_spacing(g, r);
  CHECK(a == b);
}

TEST_CASE("volume is exact") {
  GridSet g = GridSet::box(2, Dyadic::from_double(0.5), {0, 0, 0}, {3, 1, 0});
  CHECK(volume(g) == Dyadic::from_double(8 * 0.25));
}

TEST_CASE("volumes obey the sum root inequality on random grids") {
  auto gen = oracle::rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    GridSet a = oracle::random_grid_2d(gen);
    GridSet b = oracle::random_grid_2d(gen);
    double va = std::sqrt(volume(a).to_double());
    double vb = std::sqrt(volume(b).to_double());
    double vs = std::sqrt(volume(minkowski_sum(a, b)).to_double());
    CHECK(vs >= va + vb - 1e-12);
  }
}

TEST_CASE("diameter spans cube corners") {
  GridSet g = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}});
  CHECK(diameter(g) == doctest::Approx(std::sqrt(2.0)));
  GridSet g3 = GridSet::box(3, Dyadic(1), {0, 0, 0}, {1, 1, 1});
  CHECK(diameter(g3) == doctest::Approx(2.0 * std::sqrt(3.0)));
}

TEST_CASE("rasterization of points and polygons") {
  Vector p(1);
  p << 0.3;
  GridSet cell = to_grid(FinitePointSet::from_points(1, {p}, 0.0), Dyadic(1));
  CHECK(cell.cell_count() == 1);
  CHECK(cell.contains_cell({0, 0, 0}));

  GridSet sq = to_grid(ConvexPolygon::axis_rectangle({0, 0}, {1, 1}), Dyadic::from_double(0.5));
  CHECK(sq.cell_count() == 4);

  auto gen = oracle::rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    ConvexPolygon poly = oracle::random_polygon(gen);
    if (poly.degenerate()) continue;
    Dyadic h = Dyadic::from_double(0.125);
    GridSet g = to_grid(poly, h);
    ApproxDistance d = hausdorff_distance(g, poly);
    double bound = h.to_double() * std::sqrt(2.0);
    CHECK(d.value <= bound + d.error);
  }
}

TEST_CASE("chebyshev dilation and collar comparison") {
  GridSet g = GridSet::from_cells(2, Dyadic(1), {{0, 0, 0}});
  GridSet d = dilated_chebyshev(g, 1);
  CHECK(d.cell_count() == 9);
  GridSet shifted = translated_cells(g, {1, 0, 0});
  CHECK(collar_equal(g, shifted, 1));
  CHECK(!collar_equal(g, translated_cells(g, {3, 0, 0}), 1));
  CHECK(subset(g, d));
}

TEST_CASE("signed-permutation isometries act exactly on cells") {
  GridSet g = GridSet::from_cells(2, Dyadic(1), {{2, 0, 0}});
  GridSet r = transformed(g, Isometry::rotation(M_PI / 2));
  // cube [2,3]x[0,1] rotates onto [-1,0]x[2,3]
  CHECK(r.contains_cell({-1, 2, 0}));
  CHECK(r.cell_count() == 1);
  CHECK_THROWS_AS(transformed(g, Isometry::rotation(0.4)), std::invalid_argument);
}
