#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "symlab/sets/any_set.hpp"

namespace symlab::oracle {

/// Mean width by trapezoidal quadrature of the support sums over n_dirs
/// uniform directions (independent of the perimeter formula).
inline double mean_width_quadrature(const ConvexPolygon& p, int n_dirs = 4096) {
  double acc = 0.0;
  for (int k = 0; k < n_dirs; ++k) {
    double theta = 2.0 * M_PI * k / n_dirs;
    Eigen::Vector2d u(std::cos(theta), std::sin(theta));
    acc += support(p, u) + support(p, -u);
  }
  // the sphere-average of h(v) + h(-v)
  return acc / n_dirs;
}

/// Membership-sampled Hausdorff distance between 1-D sets given as
/// predicates, evaluated on a uniform grid over [lo, hi].
template <typename FnA, typename FnB>
double hausdorff_1d_sampled(FnA in_a, FnB in_b, double lo, double hi, int samples = 20001) {
  auto excess = [&](auto& of, auto& to) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      double x = lo + (hi - lo) * i / (samples - 1);
      if (!of(x)) continue;
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < samples; ++j) {
        double y = lo + (hi - lo) * j / (samples - 1);
        if (to(y)) best = std::min(best, std::abs(x - y));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(excess(in_a, in_b), excess(in_b, in_a));
}

/// Brute-force diameter.
inline double diameter_brute(const std::vector<Eigen::Vector2d>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, (pts[i] - pts[j]).norm());
  return best;
}

/// Minkowski sum of convex polygons via the hull of all pairwise vertex sums
/// (independent of the edge-merge path).
inline ConvexPolygon minkowski_sum_hull_oracle(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<Eigen::Vector2d> sums;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) sums.push_back(p + q);
  return ConvexPolygon::hull_of(sums);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random dyadic value with resolution 2^-res_bits over [lo, hi).
inline double random_dyadic(std::mt19937_64& gen, double lo, double hi, int res_bits = 8) {
  double unit = std::ldexp(1.0, -res_bits);
  auto steps = static_cast<std::int64_t>((hi - lo) / unit);
  if (steps <= 0) return lo;
  return lo + unit * static_cast<double>(gen() % static_cast<std::uint64_t>(steps));
}

inline FinitePointSet random_cloud(std::mt19937_64& gen, int max_points, double snap = -1.0) {
  int count = 2 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_points - 1));
  std::vector<Vector> pts;
  for (int i = 0; i < count; ++i) {
    Vector v(2);
    v << random_dyadic(gen, -1.0, 1.0), random_dyadic(gen, -1.0, 1.0);
    pts.push_back(v);
  }
  return FinitePointSet::from_points(2, pts, snap);
}

inline ConvexPolygon random_polygon(std::mt19937_64& gen, int max_points = 10) {
  FinitePointSet cloud = random_cloud(gen, std::max(3, max_points));
  std::vector<Eigen::Vector2d> pts;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    pts.emplace_back(cloud.point(i)[0], cloud.point(i)[1]);
  return ConvexPolygon::hull_of(pts);
}

inline GridSet random_grid_2d(std::mt19937_64& gen, std::int64_t extent = 12,
                              int max_cells = 60) {
  std::vector<Cell> cells;
  int count = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_cells));
  for (int i = 0; i < count; ++i) {
    auto x = static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(extent));
    auto y = static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(extent));
    cells.push_back({x, y, 0});
  }
  return GridSet::from_cells(2, Dyadic(1), cells);
}

}  // namespace symlab::oracle
