#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symlab/core/subspace.hpp"

namespace symlab {

/// Compact convex subset of R^2 in CCW vertex representation. Points and
/// segments are carried as degenerate polygons (1 or 2 vertices) so that
/// lower-dimensional symmetrization limits stay representable.
class ConvexPolygon {
 public:
  /// Convex hull of arbitrary points; collapses to the degenerate forms.
  static ConvexPolygon hull_of(const std::vector<Eigen::Vector2d>& points);
  /// Takes vertices already in strictly convex CCW position.
  static ConvexPolygon from_ccw(std::vector<Eigen::Vector2d> vertices);
  static ConvexPolygon point(const Eigen::Vector2d& p) { return hull_of({p}); }
  static ConvexPolygon segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return hull_of({a, b});
  }
  static ConvexPolygon axis_rectangle(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi);

  const std::vector<Eigen::Vector2d>& vertices() const { return v_; }
  std::size_t vertex_count() const { return v_.size(); }
  bool degenerate() const { return v_.size() < 3; }
  bool is_point() const { return v_.size() == 1; }
  bool is_segment() const { return v_.size() == 2; }

 private:
  ConvexPolygon() = default;
  std::vector<Eigen::Vector2d> v_;
};

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);
ConvexPolygon scaled(const ConvexPolygon& a, double t);  // t >= 0
ConvexPolygon translated(const ConvexPolygon& a, const Eigen::Vector2d& v);
ConvexPolygon transformed(const ConvexPolygon& a, const Eigen::Matrix2d& m);
ConvexPolygon reflected(const ConvexPolygon& a, const Subspace& h);

double support(const ConvexPolygon& a, const Eigen::Vector2d& direction);
double perimeter(const ConvexPolygon& a);
double area(const ConvexPolygon& a);
/// Mean width via the planar Cauchy formula perimeter / pi.
double mean_width(const ConvexPolygon& a);
double diameter(const ConvexPolygon& a);
Eigen::Vector2d centroid(const ConvexPolygon& a);

/// 0 for points of the polygon, Euclidean distance to it outside.
double distance_to(const ConvexPolygon& a, const Eigen::Vector2d& x);
bool contains(const ConvexPolygon& a, const Eigen::Vector2d& x, double tol = 1e-12);

/// Exact for convex sets: both excesses are attained at vertices.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

/// Max / min distance from the center to the boundary.
double circumradius(const ConvexPolygon& a, const Eigen::Vector2d& center);
double inradius(const ConvexPolygon& a, const Eigen::Vector2d& center);

/// CCW hull of 2-D points (monotone chain); strictly convex output.
std::vector<Eigen::Vector2d> hull_ccw(std::vector<Eigen::Vector2d> points);

}  // namespace symlab
