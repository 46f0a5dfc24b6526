#include "symlab/sequences/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::tolerance_met: return "tolerance_met";
    case StopReason::max_steps: return "max_steps";
    case StopReason::cap_exceeded: return "cap_exceeded";
  }
  return "unknown";
}

void ScheduleSpec::validate() const {
  if (family.empty()) throw std::invalid_argument("schedule family must be nonempty");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  int n = family.front().ambient_dim();
  for (const auto& q : family)
    if (q.ambient_dim() != n)
      throw std::invalid_argument("family members must share the ambient dimension");
  if (kind == ScheduleKind::explicit_list) {
    if (explicit_indices.empty())
      throw std::invalid_argument("explicit schedule needs indices");
    for (int i : explicit_indices)
      if (i < 0 || i >= static_cast<int>(family.size()))
        throw std::invalid_argument("schedule index out of range");
  }
}

int ScheduleSpec::cap_for_dim(int dim) const {
  if (grid_step_cap >= 0) return grid_step_cap;
  return dim >= 3 ? 5 : 8;
}

namespace {

std::string csv_num(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<int> resolve_indices(const ScheduleSpec& spec) {
  std::vector<int> order;
  int steps = spec.max_steps;
  switch (spec.kind) {
    case ScheduleKind::cyclic:
      for (int m = 0; m < steps; ++m)
        order.push_back(m % static_cast<int>(spec.family.size()));
      break;
    case ScheduleKind::random_seeded: {
      std::mt19937_64 gen(spec.seed);
      for (int m = 0; m < steps; ++m)
        order.push_back(static_cast<int>(gen() % spec.family.size()));
      break;
    }
    case ScheduleKind::explicit_list:
      order = spec.explicit_indices;
      if (static_cast<int>(order.size()) > steps) order.resize(static_cast<std::size_t>(steps));
      break;
  }
  return order;
}

bool is_point_set(const AnySet& s) { return std::holds_alternative<FinitePointSet>(s); }

AnySet hull_lane_seed(const AnySet& s) {
  int n = dim_of(s);
  if (n == 1) return convex_hull_of(s);   // IntervalUnion segment
  if (n == 2) return AnySet(hull_polygon(s));
  throw std::overflow_error("3-D point iterates past the budget are not continued");
}

struct Telemetry {
  double dh_prev = std::numeric_limits<double>::quiet_NaN();
  double dh_prev_err = 0.0;
  double dh_ref = std::numeric_limits<double>::quiet_NaN();
  double dh_ref_err = 0.0;
};

}  // namespace

AnySet RunResult::limit_candidate() const {
  if (final_hull) return *final_hull;
  return convex_hull_of(final);
}

RunResult run_schedule(const AnySet& start, const ScheduleSpec& spec,
                       const AnySet* reference, const StepCallback& on_step) {
  spec.validate();
  int n = dim_of(start);
  if (spec.family.front().ambient_dim() != n)
    throw std::invalid_argument("family/set dimension mismatch");

  std::vector<int> order = resolve_indices(spec);
  RunResult out{start, std::nullopt, {}, false};
  ConvergenceReport& report = out.report;
  report.stop_reason = StopReason::max_steps;

  const bool grid_run = std::holds_alternative<GridSet>(start);
  const bool point_run = is_point_set(start);
  int refinements = 0;
  int grid_cap = spec.cap_for_dim(n);

  // Averaged-sum bookkeeping for reflection-mean runs on point sets.
  double base_diam = std::numeric_limits<double>::quiet_NaN();
  double snap_budget = 0.0;
  double snap_pitch = point_run ? std::get<FinitePointSet>(start).snap_resolution() : 0.0;
  std::uint64_t summands = 0;
  const double root_n = std::sqrt(static_cast<double>(n));

  int cauchy_streak = 0;
  // Last certified increment per family member: the stop rule also wants a
  // quiet pass over the whole family, or a random draw of three quiet steps
  // could stop while an unquiet mirror waits its turn.
  std::vector<double> member_increment(spec.family.size(),
                                       std::numeric_limits<double>::infinity());
  std::vector<Isometry> mean_prefix;  // running prefix for isometry-mean runs

  for (std::size_t mi = 0; mi < order.size(); ++mi) {
    int step = static_cast<int>(mi) + 1;
    const Subspace& h = spec.family[static_cast<std::size_t>(order[mi])];

    // Representation caps checked before the step runs.
    if (grid_run && (spec.op == OperatorKind::minkowski || spec.op == OperatorKind::fiber)) {
      if (refinements + 1 > grid_cap) {
        report.stop_reason = StopReason::cap_exceeded;
        report.note = "grid refinement cap";
        break;
      }
      ++refinements;
    }

    bool switching = false;
    if (point_run && !out.hull_lane && spec.op == OperatorKind::minkowski) {
      const auto& pts = std::get<FinitePointSet>(out.final);
      if (pts.size() > spec.point_budget || pts.size() * pts.size() > spec.pair_budget) {
        switching = true;
      }
    }
    if (switching) {
      try {
        out.final_hull = hull_lane_seed(out.final);
        out.hull_lane = true;
      } catch (const std::overflow_error&) {
        report.stop_reason = StopReason::cap_exceeded;
        report.note = "point budget exceeded without a hull lane";
        break;
      }
    }

    AnySet* cur = out.hull_lane ? &*out.final_hull : &out.final;

    AnySet next = [&]() -> AnySet {
      switch (spec.op) {
        case OperatorKind::minkowski:
          return minkowski_symmetrize(*cur, h);
        case OperatorKind::fiber: {
          const auto* g = std::get_if<GridSet>(cur);
          if (!g) throw std::invalid_argument("fiber operator needs a grid set");
          return fiber_symmetrize(*g, h);
        }
        case OperatorKind::steiner: {
          const auto* g = std::get_if<GridSet>(cur);
          if (!g) throw std::invalid_argument("line rearrangement needs a grid set");
          return steiner_symmetrize_grid(*g, h);
        }
        case OperatorKind::isometry_mean: {
          if (!std::holds_alternative<FinitePointSet>(start) &&
              !std::holds_alternative<ConvexPolygon>(start))
            throw std::invalid_argument("isometry-mean runs need point sets or polygons");
          mean_prefix.push_back(Isometry::reflection(h));
          return isometry_mean(start, mean_prefix);
        }
      }
      throw std::logic_error("unreachable");
    }();

    if (on_step) on_step(step, next);

    StepRecord rec;
    rec.step = step;
    rec.subspace = h.label();
    rec.materialized = !out.hull_lane;
    rec.certified = out.hull_lane;

    if (spec.op == OperatorKind::minkowski) {
      if (step == 1) {
        base_diam = diameter(next);
        summands = 1;
      } else if (summands < (1ull << 62)) {
        summands *= 2;
      }
      if (!out.hull_lane && point_run) snap_budget += snap_pitch * root_n / 2.0;
      rec.summands = summands;
      if (point_run)
        rec.cert_bound = root_n * base_diam / static_cast<double>(summands) + snap_budget;
    }

    Telemetry tel;
    {
      ApproxDistance d = hausdorff_distance(*cur, next);
      tel.dh_prev = d.value;
      tel.dh_prev_err = d.error;
      if (out.hull_lane && point_run && !std::isnan(rec.cert_bound)) {
        // Hull-lane rows bound the true increment through the summand count;
        // the previous iterate's certificate is at most twice this one's.
        tel.dh_prev_err += 3.0 * rec.cert_bound;
      }
    }
    if (reference) {
      ApproxDistance d = [&] {
        if (spec.sample_resolution > 0.0) {
          if (const auto* p = std::get_if<FinitePointSet>(&next))
            if (const auto* poly = std::get_if<ConvexPolygon>(reference))
              return hausdorff_distance(*p, *poly, spec.sample_resolution);
        }
        return hausdorff_distance(next, *reference);
      }();
      tel.dh_ref = d.value;
      tel.dh_ref_err = d.error;
      if (out.hull_lane && point_run && !std::isnan(rec.cert_bound))
        tel.dh_ref_err += rec.cert_bound;
    }

    rec.dh_prev = tel.dh_prev;
    rec.dh_prev_err = tel.dh_prev_err;
    rec.dh_ref = tel.dh_ref;
    rec.dh_ref_err = tel.dh_ref_err;
    rec.diameter = diameter(next);
    if (!out.hull_lane || !point_run) {
      rec.volume = volume(next).value();
    }
    if (const auto* poly = std::get_if<ConvexPolygon>(&next)) rec.mean_width = mean_width(*poly);

    report.steps.push_back(rec);
    report.schedule_indices.push_back(order[mi]);

    if (out.hull_lane) {
      *out.final_hull = next;
    } else {
      out.final = next;
    }

    // Cauchy stop over a 3-step window of certified increments, plus a quiet
    // last application of every family member seen so far.
    member_increment[static_cast<std::size_t>(order[mi])] = rec.dh_prev + rec.dh_prev_err;
    if (rec.dh_prev + rec.dh_prev_err < spec.tol) ++cauchy_streak;
    else cauchy_streak = 0;
    bool family_quiet = true;
    for (double inc : member_increment)
      if (std::isfinite(inc) && !(inc < spec.tol)) family_quiet = false;
    if (cauchy_streak >= 3 && family_quiet) {
      report.stop_reason = StopReason::tolerance_met;
      break;
    }
  }
  return out;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "step,subspace,dh_prev,dh_ref,diameter,volume,mean_width\n";
  for (const auto& r : steps) {
    out << r.step << ',' << r.subspace << ',' << csv_num(r.dh_prev) << ','
        << csv_num(r.dh_ref) << ',' << csv_num(r.diameter) << ',' << csv_num(r.volume)
        << ',' << csv_num(r.mean_width) << "\n";
  }
  return out.str();
}

std::vector<SymmetryCheck> klain_limit_symmetry_check(const ConvergenceReport& report,
                                                      const ScheduleSpec& spec,
                                                      const AnySet& final_set) {
  std::set<int> members;
  if (spec.kind == ScheduleKind::explicit_list) {
    std::size_t executed = report.schedule_indices.size();
    std::size_t quarter = std::max<std::size_t>(1, executed / 4);
    for (std::size_t i = executed - quarter; i < executed; ++i)
      members.insert(report.schedule_indices[i]);
  } else {
    for (int i = 0; i < static_cast<int>(spec.family.size()); ++i) members.insert(i);
  }
  std::vector<SymmetryCheck> checks;
  for (int i : members) {
    const Subspace& q = spec.family[static_cast<std::size_t>(i)];
    AnySet mirrored = reflect_set(final_set, q);
    ApproxDistance d = hausdorff_distance(final_set, mirrored);
    SymmetryCheck c;
    c.subspace = q.label();
    c.dh = d.value;
    c.err = d.error;
    c.bound = 2.0 * spec.tol;
    c.pass = d.value <= c.bound + d.error;
    checks.push_back(c);
  }
  return checks;
}

}  // namespace symlab
