#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "symlab/sets/any_set.hpp"

namespace symlab {

enum class ScheduleKind { cyclic, random_seeded, explicit_list };
enum class OperatorKind { minkowski, fiber, steiner, isometry_mean };

enum class StopReason { tolerance_met, max_steps, cap_exceeded };
std::string to_string(StopReason r);

/// A symmetrization experiment: subspace family, visiting order, operator and
/// stopping data. Random schedules draw indices as gen() % family_size from a
/// seeded mt19937_64, which is reproducible bit for bit.
struct ScheduleSpec {
  std::vector<Subspace> family;
  ScheduleKind kind = ScheduleKind::cyclic;
  std::uint64_t seed = 0;
  std::vector<int> explicit_indices;
  int max_steps = 64;
  double tol = 1e-6;
  OperatorKind op = OperatorKind::minkowski;

  /// Spacing halvings allowed on grid runs; <0 picks 8 (1-D/2-D) or 5 (3-D).
  int grid_step_cap = -1;
  /// Materialized point-set iterates switch to the hull lane past this size,
  /// or when the next enumeration would exceed pair_budget sums.
  std::size_t point_budget = 60'000;
  std::size_t pair_budget = 250'000;
  /// Pitch for mixed-representation reference distances; <0 = default.
  double sample_resolution = -1.0;

  void validate() const;
  int cap_for_dim(int dim) const;
};

struct StepRecord {
  int step = 0;
  std::string subspace;

  double dh_prev = std::numeric_limits<double>::quiet_NaN();
  double dh_prev_err = 0.0;
  double dh_ref = std::numeric_limits<double>::quiet_NaN();
  double dh_ref_err = 0.0;
  /// Set when the value is an upper bound certified through the summand
  /// count rather than a measured distance.
  bool certified = false;

  double diameter = std::numeric_limits<double>::quiet_NaN();
  double volume = std::numeric_limits<double>::quiet_NaN();
  double mean_width = std::numeric_limits<double>::quiet_NaN();

  std::uint64_t summands = 0;  // base-symmetral copies t_m in averaged-sum form
  double cert_bound = std::numeric_limits<double>::quiet_NaN();
  bool materialized = true;
};

struct ConvergenceReport {
  std::vector<StepRecord> steps;
  std::vector<int> schedule_indices;
  StopReason stop_reason = StopReason::max_steps;
  std::string note;

  /// CSV with header step,subspace,dh_prev,dh_ref,diameter,volume,mean_width;
  /// undefined quantities stay empty. Deterministic byte-for-byte.
  std::string to_csv() const;
};

struct RunResult {
  AnySet final;  // last materialized iterate
  /// Hull-lane continuation of the iterate when the materialized lane was
  /// abandoned (2-D convex limit candidate).
  std::optional<AnySet> final_hull;
  ConvergenceReport report;
  bool hull_lane = false;

  /// The convex limit candidate: hull-lane result when present, otherwise the
  /// hull of the final iterate.
  AnySet limit_candidate() const;
};

using StepCallback = std::function<void(int step, const AnySet& iterate)>;

RunResult run_schedule(const AnySet& start, const ScheduleSpec& spec,
                       const AnySet* reference = nullptr,
                       const StepCallback& on_step = nullptr);

struct SymmetryCheck {
  std::string subspace;
  double dh = 0.0;
  double err = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Reflection invariance of the limit for every family member that keeps
/// occurring: all of them for cyclic/random schedules, and those appearing in
/// the last quarter of executed steps for explicit ones.
std::vector<SymmetryCheck> klain_limit_symmetry_check(const ConvergenceReport& report,
                                                      const ScheduleSpec& spec,
                                                      const AnySet& final_set);

}  // namespace symlab
