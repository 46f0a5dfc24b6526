#pragma once

#include "symlab/sets/convex_polygon.hpp"
#include "symlab/sets/finite_point_set.hpp"
#include "symlab/sets/grid_set.hpp"
#include "symlab/sets/interval_union.hpp"

namespace symlab {

/// Mixed-representation Hausdorff distance. The polygon-to-points excess is
/// estimated from boundary and interior samples at pitch `sample_resolution`
/// (default diameter/2048) and the matching error bound is returned; the
/// points-to-polygon excess is exact. Collinear configurations take an exact
/// one-dimensional path.
ApproxDistance hausdorff_distance(const FinitePointSet& a, const ConvexPolygon& b,
                                  double sample_resolution = -1.0);

ApproxDistance hausdorff_distance(const GridSet& a, const ConvexPolygon& b,
                                  double sample_resolution = -1.0);

/// Exact distance between a 1-D point set and an interval union.
Dyadic hausdorff_distance(const FinitePointSet& a, const IntervalUnion& b);

/// Samples of the boundary and an interior grid of a polygon at the given
/// pitch; shared by the mixed-representation bridges.
std::vector<Eigen::Vector2d> polygon_cover_samples(const ConvexPolygon& p, double pitch);

}  // namespace symlab
