#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symlab/core/subspace.hpp"

namespace symlab {

/// Convex hull of 3-D points as extreme points plus facet half-spaces
/// (inside iff normal . x <= offset for every facet).
struct Hull3d {
  struct Facet {
    Eigen::Vector3d normal;  // unit outward
    double offset = 0.0;
  };
  std::vector<Vector> vertices;
  std::vector<Facet> facets;
  bool full_dim = false;
};

Hull3d hull_3d(const std::vector<Vector>& points);

/// max over facets of normal . x - offset (negative strictly inside).
double hull_signed_distance(const Hull3d& h, const Eigen::Vector3d& x);

inline bool hull_contains(const Hull3d& h, const Eigen::Vector3d& x, double tol = 1e-9) {
  return hull_signed_distance(h, x) <= tol;
}

}  // namespace symlab
