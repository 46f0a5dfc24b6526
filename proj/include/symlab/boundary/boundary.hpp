#pragma once

#include <optional>

#include "symlab/sequences/schedule.hpp"
#include "symlab/sets/grid_set.hpp"

namespace symlab {

/// Cells of `a` with at least one face neighbor outside `a`.
GridSet grid_boundary(const GridSet& a);

/// Boundary cells that touch the unbounded complement component: rims of
/// interior holes are excluded (flood fill over the face-adjacent complement).
GridSet external_boundary(const GridSet& a);

/// Whether the realized boundary cell set is connected (Chebyshev adjacency;
/// the grid proxy for a connected topological boundary).
bool boundary_connected(const GridSet& a);

/// Whether some translate by whole cells puts every cube of `a` strictly
/// inside the realized interior of `b`.
bool strictly_contained_translate_exists(const GridSet& a, const GridSet& b);

/// Cells whose cube has interior overlap with conv of the realized set.
GridSet filled_hull_cells(const GridSet& a);
/// Filled-hull cells whose cube touches the hull boundary.
GridSet hull_boundary_cells(const GridSet& a);
/// Convexity up to a one-cell collar: the filled hull stays within the
/// Chebyshev-1 dilation of the set.
bool grid_convex_within_collar(const GridSet& a, std::int64_t collar_cells = 1);

struct BoundarySumCheck {
  bool holds = false;         // dK (+) dL equals K (+) L cell-exactly
  bool subset_holds = false;  // dK (+) dL inside K (+) L (hypothesis-free)
  bool hypothesis_ok = false;
  bool boundary_connected_k = false;
  bool boundary_connected_l = false;
  bool no_strict_containment = false;
  std::optional<Cell> witness_cell_on_failure;
};

/// Cell-exact comparison of the sum with the sum of boundaries, plus the
/// hypothesis gate (connected boundaries; no strict containment of one set in
/// the other's reflection under any cell translate).
BoundarySumCheck boundary_sum_check(const GridSet& k, const GridSet& l);

struct CommonBoundaryWitness {
  std::optional<Cell> cell;
  std::string failed_hypothesis;  // empty when a witness is returned
  bool sets_intersect = false;
  bool k_strictly_inside_l = false;
  bool l_strictly_inside_k = false;
};

/// A cell met by both realized boundaries, when overlap and no-containment
/// hypotheses hold.
CommonBoundaryWitness common_boundary_witness(const GridSet& k, const GridSet& l);

struct ConvexificationCheck {
  bool hypothesis_ok = false;  // hull-boundary cells inside the set
  bool holds = false;          // symmetral equals the hull's symmetral (collar)
  double dh = 0.0;
  double dh_err = 0.0;
  double collar = 0.0;  // realized collar width h * sqrt(n)
  bool symmetral_convex = false;
};

/// One averaged reflection convexifies sets containing their hull boundary;
/// compared cell-wise against the symmetral of the filled hull.
ConvexificationCheck one_step_convexification_check(const GridSet& c, const Subspace& h);

struct FiberKlainResult {
  ConvergenceReport report;
  bool hypothesis_ok = false;
  bool sections_convex_after_first = false;
  bool cauchy = false;
  bool limit_matches_hull_run = false;
  double collar = 0.0;
  double limit_dh = 0.0;
};

/// Per-fiber schedule on a 3-D grid whose input contains its hull boundary:
/// sections convexify after one step, the iterates are Cauchy, and the limit
/// agrees with the same run started from the filled hull. Line subspaces
/// only; the hyperplane case is refused.
FiberKlainResult fiber_klain_run(const GridSet& c, const ScheduleSpec& spec);

struct RoundingTraceStep {
  int step = 0;
  std::string subspace;
  double mean_width = 0.0;
  double circumradius = 0.0;
  double inradius = 0.0;
  double sandwich = 0.0;  // circumradius / inradius
};

struct KlartagReport {
  std::vector<RoundingTraceStep> steps;
  bool gate_ok = false;
  bool width_constant = false;    // relative drift <= 1e-9 across all steps
  bool sandwich_improved = false;
  double final_sandwich = 0.0;
};

/// Hyperplane (line) schedule of averaged reflections applied to a set
/// containing its hull boundary; tracks the width invariant and the
/// ball sandwich ratio. No step-count claim is asserted.
KlartagReport klartag_rounding_run(const AnySet& c, const std::vector<Subspace>& lines,
                                   int steps, double gate_tol = -1.0);

}  // namespace symlab
