#include "symlab/sequences/rounding.hpp"

#include <cmath>
#include <stdexcept>

#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

RoundingReport hadwiger_rounding_run(const AnySet& a,
                                     const std::vector<int>& rotation_schedule,
                                     double tol_ball) {
  if (dim_of(a) != 2) throw std::invalid_argument("rotation rounding is 2-D");
  if (rotation_schedule.empty()) throw std::invalid_argument("empty rotation schedule");
  if (diameter(a) <= 0.0) throw std::invalid_argument("degenerate input");

  // Rotation means agree with those of the convex hull, so the hull drives
  // the measured ratios.
  ConvexPolygon hull = hull_polygon(a);
  RoundingReport out;
  out.tol_ball = tol_ball;
  for (int n : rotation_schedule) {
    AnySet mean = blaschke_rotation_mean(AnySet(hull), n);
    ConvexPolygon p = hull_polygon(mean);
    Eigen::Vector2d c = centroid(p);
    RoundingStep s;
    s.rotations = n;
    s.circumradius = circumradius(p, c);
    s.inradius = inradius(p, c);
    s.ratio = s.inradius > 0.0 ? s.circumradius / s.inradius
                               : std::numeric_limits<double>::infinity();
    out.steps.push_back(s);
  }
  out.ratio_decreased = out.steps.back().ratio < out.steps.front().ratio + 1e-9;
  out.final_round = out.steps.back().ratio <= 1.0 + tol_ball;
  return out;
}

}  // namespace symlab
