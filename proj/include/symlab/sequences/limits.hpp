#pragma once

#include "symlab/sequences/schedule.hpp"

namespace symlab {

/// Single-subspace averaged-reflection iteration checked against its convex
/// limit: the distance to conv of the first symmetral must stay within the
/// summand-count bound plus the snapping and measurement budgets, and fall
/// below tol before m_max.
struct LimitCheckResult {
  ConvergenceReport report;
  AnySet reference;                  // conv of the first symmetral
  std::optional<int> violation_step; // first step whose bound failed
  bool reached_tol = false;
};

LimitCheckResult iterated_central_limit_check(const AnySet& a, const Subspace& h,
                                              int m_max, double tol,
                                              double sample_resolution = -1.0,
                                              std::size_t pair_budget = 0);

/// Convexification gap of an iterated Minkowski sum against the
/// diameter bound sqrt(n) * max diameter.
struct SfsGapResult {
  ApproxDistance gap;
  double bound = 0.0;
  bool holds = false;
};

SfsGapResult sfs_gap(const std::vector<AnySet>& sets);

}  // namespace symlab
