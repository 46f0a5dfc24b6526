#include "symlab/boundary/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "symlab/sets/convex_hull.hpp"
#include "symlab/sets/hausdorff.hpp"
#include "symlab/sets/point_index.hpp"
#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

namespace {

constexpr std::uint64_t kCellGuard = 8'000'000;

std::vector<Cell> neighbors_face(const Cell& c, int dim) {
  std::vector<Cell> out;
  for (int d = 0; d < dim; ++d)
    for (int s : {-1, 1}) {
      Cell n = c;
      n[static_cast<std::size_t>(d)] += s;
      out.push_back(n);
    }
  return out;
}

void guard_cells(const GridSet& a) {
  if (a.cell_count() > kCellGuard)
    throw std::overflow_error("boundary operation exceeds cell guard");
}

// All Chebyshev-1 neighbors present: the cube lies in the realized interior.
// Callers must check has_interior first; the result is nonempty then.
GridSet eroded_chebyshev(const GridSet& a) {
  std::vector<GridSet::Run> runs;
  std::int64_t dy_hi = a.dim() >= 2 ? 1 : 0;
  std::int64_t dz_hi = a.dim() >= 3 ? 1 : 0;
  a.for_each_cell([&](const Cell& c) {
    for (std::int64_t dz = -dz_hi; dz <= dz_hi; ++dz)
      for (std::int64_t dy = -dy_hi; dy <= dy_hi; ++dy)
        for (std::int64_t dx = -1; dx <= 1; ++dx)
          if (!a.contains_cell({c[0] + dx, c[1] + dy, c[2] + dz})) return;
    runs.push_back({c[2], c[1], c[0], c[0]});
  });
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

bool has_interior(const GridSet& a) {
  bool found = false;
  std::int64_t dy_hi = a.dim() >= 2 ? 1 : 0;
  std::int64_t dz_hi = a.dim() >= 3 ? 1 : 0;
  a.for_each_cell([&](const Cell& c) {
    if (found) return;
    for (std::int64_t dz = -dz_hi; dz <= dz_hi && !found; ++dz)
      for (std::int64_t dy = -dy_hi; dy <= dy_hi; ++dy)
        for (std::int64_t dx = -1; dx <= 1; ++dx)
          if (!a.contains_cell({c[0] + dx, c[1] + dy, c[2] + dz})) return;
    found = true;
  });
  return found;
}

}  // namespace

GridSet grid_boundary(const GridSet& a) {
  guard_cells(a);
  std::vector<GridSet::Run> runs;
  a.for_each_cell([&](const Cell& c) {
    for (const Cell& n : neighbors_face(c, a.dim()))
      if (!a.contains_cell(n)) {
        runs.push_back({c[2], c[1], c[0], c[0]});
        return;
      }
  });
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

GridSet external_boundary(const GridSet& a) {
  guard_cells(a);
  GridSet rim = grid_boundary(a);
  Cell lo = a.min_corner(), hi = a.max_corner();
  for (int d = 0; d < 3; ++d) { lo[static_cast<std::size_t>(d)] -= 1; hi[static_cast<std::size_t>(d)] += 1; }
  // Flood over the face-adjacent complement from a corner outside the set.
  std::set<std::array<std::int64_t, 3>> outside;
  std::deque<Cell> queue;
  Cell seed{lo[0], a.dim() >= 2 ? lo[1] : 0, a.dim() >= 3 ? lo[2] : 0};
  queue.push_back(seed);
  outside.insert({seed[0], seed[1], seed[2]});
  auto in_box = [&](const Cell& c) {
    for (int d = 0; d < a.dim(); ++d) {
      std::size_t i = static_cast<std::size_t>(d);
      if (c[i] < lo[i] || c[i] > hi[i]) return false;
    }
    return true;
  };
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (const Cell& n : neighbors_face(c, a.dim())) {
      if (!in_box(n) || a.contains_cell(n)) continue;
      if (outside.insert({n[0], n[1], n[2]}).second) queue.push_back(n);
    }
  }
  std::vector<GridSet::Run> runs;
  rim.for_each_cell([&](const Cell& c) {
    for (const Cell& n : neighbors_face(c, a.dim()))
      if (outside.count({n[0], n[1], n[2]})) {
        runs.push_back({c[2], c[1], c[0], c[0]});
        return;
      }
  });
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

bool boundary_connected(const GridSet& a) {
  GridSet rim = grid_boundary(a);
  guard_cells(rim);
  std::set<std::array<std::int64_t, 3>> todo;
  rim.for_each_cell([&](const Cell& c) { todo.insert({c[0], c[1], c[2]}); });
  if (todo.empty()) return true;
  std::deque<std::array<std::int64_t, 3>> queue{*todo.begin()};
  todo.erase(todo.begin());
  std::int64_t dy_hi = a.dim() >= 2 ? 1 : 0;
  std::int64_t dz_hi = a.dim() >= 3 ? 1 : 0;
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (std::int64_t dz = -dz_hi; dz <= dz_hi; ++dz)
      for (std::int64_t dy = -dy_hi; dy <= dy_hi; ++dy)
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          auto it = todo.find({c[0] + dx, c[1] + dy, c[2] + dz});
          if (it != todo.end()) {
            queue.push_back(*it);
            todo.erase(it);
          }
        }
  }
  return todo.empty();
}

bool strictly_contained_translate_exists(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim() || !(a.spacing() == b.spacing()))
    throw std::invalid_argument("containment scan needs matching representation");
  if (!has_interior(b)) return false;
  GridSet inner = eroded_chebyshev(b);
  Cell alo = a.min_corner(), ahi = a.max_corner();
  Cell blo = inner.min_corner(), bhi = inner.max_corner();
  // Translates that put a's bounding box inside inner's.
  Cell tlo{blo[0] - alo[0], blo[1] - alo[1], blo[2] - alo[2]};
  Cell thi{bhi[0] - ahi[0], bhi[1] - ahi[1], bhi[2] - ahi[2]};
  for (int d = a.dim(); d < 3; ++d) { tlo[static_cast<std::size_t>(d)] = 0; thi[static_cast<std::size_t>(d)] = 0; }
  std::uint64_t span = 1;
  for (int d = 0; d < a.dim(); ++d) {
    if (thi[static_cast<std::size_t>(d)] < tlo[static_cast<std::size_t>(d)]) return false;
    span *= static_cast<std::uint64_t>(thi[static_cast<std::size_t>(d)] -
                                       tlo[static_cast<std::size_t>(d)] + 1);
  }
  if (span * a.cell_count() > 200'000'000ull)
    throw std::overflow_error("containment scan exceeds work guard");
  std::vector<Cell> cells = a.cells();
  for (std::int64_t tz = tlo[2]; tz <= thi[2]; ++tz)
    for (std::int64_t ty = tlo[1]; ty <= thi[1]; ++ty)
      for (std::int64_t tx = tlo[0]; tx <= thi[0]; ++tx) {
        bool all = true;
        for (const Cell& c : cells) {
          if (!inner.contains_cell({c[0] + tx, c[1] + ty, c[2] + tz})) {
            all = false;
            break;
          }
        }
        if (all) return true;
      }
  return false;
}

GridSet filled_hull_cells(const GridSet& a) {
  if (a.dim() == 1) {
    Cell lo = a.min_corner(), hi = a.max_corner();
    return GridSet::box(1, a.spacing(), lo, hi);
  }
  if (a.dim() == 2) {
    std::vector<Eigen::Vector2d> pts;
    for (const auto& c : a.corner_points()) pts.emplace_back(c[0], c[1]);
    return to_grid(ConvexPolygon::hull_of(pts), a.spacing());
  }
  Hull3d hull = hull_3d(a.corner_points());
  if (!hull.full_dim) throw std::invalid_argument("degenerate 3-D hull");
  double h = a.spacing().to_double();
  Cell lo = a.min_corner(), hi = a.max_corner();
  std::vector<GridSet::Run> runs;
  for (std::int64_t z = lo[2]; z <= hi[2]; ++z)
    for (std::int64_t y = lo[1]; y <= hi[1]; ++y)
      for (std::int64_t x = lo[0]; x <= hi[0]; ++x) {
        // No facet separates the cube: conservative cube-hull intersection.
        bool inside = true;
        for (const auto& f : hull.facets) {
          double best = std::numeric_limits<double>::infinity();
          for (int corner = 0; corner < 8 && best > 0.0; ++corner) {
            Eigen::Vector3d p(
                (static_cast<double>(x) + ((corner >> 0) & 1)) * h,
                (static_cast<double>(y) + ((corner >> 1) & 1)) * h,
                (static_cast<double>(z) + ((corner >> 2) & 1)) * h);
            best = std::min(best, f.normal.dot(p) - f.offset);
          }
          if (best > 0.0) { inside = false; break; }
        }
        if (inside) runs.push_back({z, y, x, x});
      }
  return GridSet::from_runs(3, a.spacing(), std::move(runs));
}

namespace {

double polygon_inner_depth(const ConvexPolygon& poly, const Eigen::Vector2d& p) {
  const auto& v = poly.vertices();
  if (v.size() < 3) return -distance_to(poly, p);
  double depth = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    Eigen::Vector2d e = b - a;
    double len = e.norm();
    double signed_dist = (e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x())) / len;
    depth = std::min(depth, signed_dist);
  }
  return depth;  // positive strictly inside
}

}  // namespace

GridSet hull_boundary_cells(const GridSet& a) {
  GridSet filled = filled_hull_cells(a);
  double h = a.spacing().to_double();
  std::vector<GridSet::Run> runs;
  if (a.dim() == 1) {
    Cell lo = a.min_corner(), hi = a.max_corner();
    runs.push_back({0, 0, lo[0], lo[0]});
    runs.push_back({0, 0, hi[0], hi[0]});
    return GridSet::from_runs(1, a.spacing(), std::move(runs));
  }
  if (a.dim() == 2) {
    std::vector<Eigen::Vector2d> pts;
    for (const auto& c : a.corner_points()) pts.emplace_back(c[0], c[1]);
    ConvexPolygon hull = ConvexPolygon::hull_of(pts);
    double eps = 1e-12 * (diameter(hull) + 1.0);
    filled.for_each_cell([&](const Cell& c) {
      double depth = std::numeric_limits<double>::infinity();
      for (int corner = 0; corner < 4; ++corner) {
        Eigen::Vector2d p((static_cast<double>(c[0]) + (corner & 1)) * h,
                          (static_cast<double>(c[1]) + ((corner >> 1) & 1)) * h);
        depth = std::min(depth, polygon_inner_depth(hull, p));
      }
      if (depth <= eps) runs.push_back({0, c[1], c[0], c[0]});
    });
    return GridSet::from_runs(2, a.spacing(), std::move(runs));
  }
  Hull3d hull = hull_3d(a.corner_points());
  double eps = 1e-12 * (diameter(a) + 1.0);
  filled.for_each_cell([&](const Cell& c) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int corner = 0; corner < 8; ++corner) {
      Eigen::Vector3d p((static_cast<double>(c[0]) + ((corner >> 0) & 1)) * h,
                        (static_cast<double>(c[1]) + ((corner >> 1) & 1)) * h,
                        (static_cast<double>(c[2]) + ((corner >> 2) & 1)) * h);
      worst = std::max(worst, hull_signed_distance(hull, p));
    }
    if (worst >= -eps) runs.push_back({c[2], c[1], c[0], c[0]});
  });
  return GridSet::from_runs(3, a.spacing(), std::move(runs));
}

bool grid_convex_within_collar(const GridSet& a, std::int64_t collar_cells) {
  return subset(filled_hull_cells(a), dilated_chebyshev(a, collar_cells));
}

BoundarySumCheck boundary_sum_check(const GridSet& k, const GridSet& l) {
  if (k.dim() < 2) throw std::invalid_argument("boundary-sum check needs n >= 2");
  BoundarySumCheck out;
  GridSet sum = minkowski_sum(k, l);
  GridSet bsum = minkowski_sum(grid_boundary(k), grid_boundary(l));
  out.subset_holds = subset(bsum, sum);
  out.holds = (bsum == sum);
  if (!out.holds) {
    // A cell of the full sum the boundary sum missed.
    sum.for_each_cell([&](const Cell& c) {
      if (!out.witness_cell_on_failure && !bsum.contains_cell(c))
        out.witness_cell_on_failure = c;
    });
  }
  out.boundary_connected_k = boundary_connected(k);
  out.boundary_connected_l = boundary_connected(l);
  GridSet neg_l = reflected(l, Subspace::origin(l.dim()));
  out.no_strict_containment = !strictly_contained_translate_exists(k, neg_l) &&
                              !strictly_contained_translate_exists(neg_l, k);
  out.hypothesis_ok =
      out.boundary_connected_k && out.boundary_connected_l && out.no_strict_containment;
  return out;
}

CommonBoundaryWitness common_boundary_witness(const GridSet& k, const GridSet& l) {
  if (k.dim() != l.dim() || !(k.spacing() == l.spacing()))
    throw std::invalid_argument("witness search needs matching representation");
  CommonBoundaryWitness out;
  // Realized compact sets meet iff some cubes touch (Chebyshev distance <= 1).
  GridSet fat_l = dilated_chebyshev(l, 1);
  bool meet = false;
  k.for_each_cell([&](const Cell& c) { meet = meet || fat_l.contains_cell(c); });
  out.sets_intersect = meet;
  bool k_in_l = has_interior(l) && subset(k, eroded_chebyshev(l));
  bool l_in_k = has_interior(k) && subset(l, eroded_chebyshev(k));
  out.k_strictly_inside_l = k_in_l;
  out.l_strictly_inside_k = l_in_k;
  if (!meet) {
    out.failed_hypothesis = "sets do not intersect";
    return out;
  }
  if (k_in_l || l_in_k) {
    out.failed_hypothesis = "strict containment";
    return out;
  }
  if (!boundary_connected(k) || !boundary_connected(l)) {
    out.failed_hypothesis = "boundary not connected";
    return out;
  }
  GridSet bk = grid_boundary(k);
  GridSet bl = grid_boundary(l);
  std::optional<Cell> hit;
  bk.for_each_cell([&](const Cell& c) {
    if (!hit && bl.contains_cell(c)) hit = c;
  });
  if (!hit) {
    // Boundaries may cross between cells; accept a touching pair.
    GridSet fat_bl = dilated_chebyshev(bl, 1);
    bk.for_each_cell([&](const Cell& c) {
      if (!hit && fat_bl.contains_cell(c)) hit = c;
    });
  }
  if (hit) {
    out.cell = hit;
  } else {
    out.failed_hypothesis = "no shared boundary cell at this resolution";
  }
  return out;
}

ConvexificationCheck one_step_convexification_check(const GridSet& c, const Subspace& h) {
  ConvexificationCheck out;
  GridSet rim = hull_boundary_cells(c);
  out.hypothesis_ok = subset(rim, c);
  double hs = c.spacing().to_double();
  out.collar = hs * std::sqrt(static_cast<double>(c.dim()));
  if (!out.hypothesis_ok) return out;
  GridSet sym = minkowski_symmetrize(c, h);
  GridSet hull_sym = minkowski_symmetrize(filled_hull_cells(c), h);
  ApproxDistance d = hausdorff_distance(sym, hull_sym);
  out.dh = d.value;
  out.dh_err = d.error;
  out.holds = collar_equal(sym, hull_sym, 2);
  out.symmetral_convex = grid_convex_within_collar(sym, 2);
  return out;
}

FiberKlainResult fiber_klain_run(const GridSet& c, const ScheduleSpec& spec) {
  if (c.dim() != 3) throw std::invalid_argument("fiber limit runs are 3-D");
  if (spec.op != OperatorKind::fiber)
    throw std::invalid_argument("fiber limit runs need the fiber operator");
  for (const auto& q : spec.family) {
    if (!q.axis_aligned() || q.dim() != 1)
      throw std::invalid_argument(
          "fiber limit runs take axis-aligned line subspaces; the hyperplane "
          "case is not covered");
  }
  FiberKlainResult out;
  out.hypothesis_ok = subset(hull_boundary_cells(c), c);
  if (!out.hypothesis_ok)
    throw std::invalid_argument("input must contain its hull boundary cells");

  std::optional<GridSet> first_iterate;
  StepCallback capture = [&](int step, const AnySet& x) {
    if (step == 1) first_iterate = std::get<GridSet>(x);
  };
  RunResult run = run_schedule(AnySet(c), spec, nullptr, capture);
  out.report = std::move(run.report);

  // (a) every fiber section of the first iterate is convex up to a collar.
  if (first_iterate) {
    const Subspace& h1 = spec.family[static_cast<std::size_t>(out.report.schedule_indices.front())];
    int axis = -1;
    for (int d = 0; d < 3; ++d)
      if (h1.keeps_axis(d)) axis = d;
    out.sections_convex_after_first = true;
    std::map<std::int64_t, std::vector<GridSet::Run>> sections;
    first_iterate->for_each_cell([&](const Cell& cell) {
      std::int64_t key = cell[static_cast<std::size_t>(axis)];
      std::array<std::int64_t, 2> sec{};
      int si = 0;
      for (int d = 0; d < 3; ++d)
        if (d != axis) sec[static_cast<std::size_t>(si++)] = cell[static_cast<std::size_t>(d)];
      sections[key].push_back({0, sec[1], sec[0], sec[0]});
    });
    for (auto& [key, runs] : sections) {
      GridSet section = GridSet::from_runs(2, first_iterate->spacing(), runs);
      if (!grid_convex_within_collar(section, 1)) {
        out.sections_convex_after_first = false;
        break;
      }
    }
  }

  // (b) Cauchy: increments shrink to collar scale.
  const auto& steps = out.report.steps;
  GridSet final_a = std::get<GridSet>(run.final);
  out.collar = final_a.spacing().to_double() * std::sqrt(3.0);
  if (!steps.empty()) {
    bool shrinking = true;
    for (std::size_t i = 1; i < steps.size(); ++i)
      if (steps[i].dh_prev > steps[i - 1].dh_prev + out.collar) shrinking = false;
    double last = steps.back().dh_prev + steps.back().dh_prev_err;
    out.cauchy = shrinking && last <= steps.front().dh_prev + out.collar;
  }

  // (c) the same schedule started from the filled hull lands on the same set.
  RunResult hull_run = run_schedule(AnySet(filled_hull_cells(c)), spec);
  ApproxDistance d = hausdorff_distance(run.final, hull_run.final);
  out.limit_dh = d.value;
  out.limit_matches_hull_run = d.value <= 2.0 * out.collar + d.error;
  return out;
}

KlartagReport klartag_rounding_run(const AnySet& c, const std::vector<Subspace>& lines,
                                   int steps, double gate_tol) {
  if (dim_of(c) != 2) throw std::invalid_argument("hyperplane rounding runs are 2-D");
  if (lines.empty() || steps < 1) throw std::invalid_argument("empty schedule");
  KlartagReport out;

  if (const auto* g = std::get_if<GridSet>(&c)) {
    out.gate_ok = subset(hull_boundary_cells(*g), *g);
  } else if (const auto* p = std::get_if<FinitePointSet>(&c)) {
    // Sampled gate: the hull boundary must stay within gate_tol of the set.
    ConvexPolygon hull = hull_polygon(c);
    double tol = gate_tol > 0.0 ? gate_tol : diameter(hull) / 256.0;
    PointIndex idx(p->points());
    out.gate_ok = true;
    double pitch = std::max(tol / 2.0, 1e-9);
    const auto& v = hull.vertices();
    for (std::size_t i = 0; i < v.size() && out.gate_ok; ++i) {
      Eigen::Vector2d a = v[i], b = v[(i + 1) % v.size()];
      int segs = std::max(1, static_cast<int>(std::ceil((b - a).norm() / pitch)));
      for (int t = 0; t <= segs; ++t) {
        Eigen::Vector2d q = a + (static_cast<double>(t) / segs) * (b - a);
        Vector qq(2);
        qq << q.x(), q.y();
        if (idx.min_distance(qq) > tol) {
          out.gate_ok = false;
          break;
        }
      }
    }
  } else {
    out.gate_ok = std::holds_alternative<ConvexPolygon>(c);
  }
  if (!out.gate_ok) return out;

  // First averaged reflection on the raw set, hull lane afterwards.
  AnySet x1 = minkowski_symmetrize(c, lines.front());
  ConvexPolygon p = hull_polygon(x1);
  double w0 = mean_width(hull_polygon(c));
  double w_lo = w0, w_hi = w0;
  for (int m = 1; m <= steps; ++m) {
    if (m > 1) p = minkowski_symmetrize(p, lines[static_cast<std::size_t>((m - 1) % lines.size())]);
    RoundingTraceStep rec;
    rec.step = m;
    rec.subspace = lines[static_cast<std::size_t>((m - 1) % lines.size())].label();
    rec.mean_width = mean_width(p);
    Eigen::Vector2d ctr = centroid(p);
    rec.circumradius = circumradius(p, ctr);
    rec.inradius = inradius(p, ctr);
    rec.sandwich = rec.inradius > 0.0 ? rec.circumradius / rec.inradius
                                      : std::numeric_limits<double>::infinity();
    out.steps.push_back(rec);
    w_lo = std::min(w_lo, rec.mean_width);
    w_hi = std::max(w_hi, rec.mean_width);
  }
  out.width_constant = (w_hi - w_lo) <= 1e-9 * std::max(1.0, std::abs(w_hi));
  out.sandwich_improved = out.steps.back().sandwich <= out.steps.front().sandwich + 1e-9;
  out.final_sandwich = out.steps.back().sandwich;
  return out;
}

}  // namespace symlab
