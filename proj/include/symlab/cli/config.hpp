#pragma once

#include <optional>
#include <string>

#include "symlab/sequences/schedule.hpp"

namespace symlab {

/// A full experiment: input set, schedule spec, optional reference set and
/// output paths. Parsed from `key = value` text or an equivalent JSON
/// document (the file is JSON when it starts with '{').
struct ExperimentConfig {
  AnySet input = AnySet(IntervalUnion::point(Dyadic(0)));
  ScheduleSpec spec;
  std::optional<AnySet> reference;
  std::string csv_path;
  std::string svg_pattern;  // contains {step}
  std::optional<double> snap_override;
};

ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Executes the experiment: runs the schedule, writes outputs, checks the
/// run invariants. Returns the process exit code (0 ok, 2 failed invariant).
int run_experiment(const ExperimentConfig& config, std::ostream& log);

/// Parses one family entry: axis:x|y|z, plane:xy|xz|yz, origin, or
/// angle:<degrees> (2-D line; converted to radians once here).
Subspace parse_subspace(const std::string& token, int ambient_dim);

}  // namespace symlab
