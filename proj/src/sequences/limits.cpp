#include "symlab/sequences/limits.hpp"

#include <cmath>

#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

LimitCheckResult iterated_central_limit_check(const AnySet& a, const Subspace& h,
                                              int m_max, double tol,
                                              double sample_resolution,
                                              std::size_t pair_budget) {
  AnySet first = minkowski_symmetrize(a, h);
  AnySet reference = convex_hull_of(first);

  ScheduleSpec spec;
  spec.family = {h};
  spec.kind = ScheduleKind::cyclic;
  spec.max_steps = m_max;
  spec.tol = tol;
  spec.op = OperatorKind::minkowski;
  spec.sample_resolution = sample_resolution;
  if (pair_budget > 0) spec.pair_budget = pair_budget;

  RunResult run = run_schedule(a, spec, &reference);

  LimitCheckResult out{std::move(run.report), std::move(reference), std::nullopt, false};
  for (const auto& rec : out.report.steps) {
    if (!std::isnan(rec.dh_ref) && rec.dh_ref + rec.dh_ref_err < tol) out.reached_tol = true;
    if (std::isnan(rec.cert_bound) || std::isnan(rec.dh_ref)) continue;
    if (rec.dh_ref > rec.cert_bound + rec.dh_ref_err && !out.violation_step)
      out.violation_step = rec.step;
  }
  return out;
}

SfsGapResult sfs_gap(const std::vector<AnySet>& sets) {
  if (sets.empty()) throw std::invalid_argument("gap check needs at least one set");
  AnySet sum = sets.front();
  double max_diam = diameter(sets.front());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    sum = minkowski_sum(sum, sets[i]);
    max_diam = std::max(max_diam, diameter(sets[i]));
  }
  AnySet hull = convex_hull_of(sum);
  SfsGapResult out;
  out.gap = hausdorff_distance(sum, hull);
  out.bound = std::sqrt(static_cast<double>(dim_of(sum))) * max_diam;
  out.holds = out.gap.value <= out.bound + out.gap.error;
  return out;
}

}  // namespace symlab
