#pragma once

#include "symlab/sequences/schedule.hpp"

namespace symlab {

/// Rotation-mean rounding: for each count N in the schedule, the hull of the
/// N-fold uniform rotation mean is measured by its circumradius/inradius
/// ratio about the centroid.
struct RoundingStep {
  int rotations = 0;
  double circumradius = 0.0;
  double inradius = 0.0;
  double ratio = 0.0;
};

struct RoundingReport {
  std::vector<RoundingStep> steps;
  bool ratio_decreased = false;  // final below the first (within 1e-9)
  bool final_round = false;      // final ratio <= 1 + tol_ball
  double tol_ball = 0.05;
};

RoundingReport hadwiger_rounding_run(const AnySet& a,
                                     const std::vector<int>& rotation_schedule =
                                         {1, 2, 4, 8, 16, 32, 64},
                                     double tol_ball = 0.05);

}  // namespace symlab
