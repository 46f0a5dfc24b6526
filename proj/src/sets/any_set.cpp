#include "symlab/sets/any_set.hpp"

#include <cmath>
#include <stdexcept>

#include "symlab/sets/convex_hull.hpp"
#include "symlab/sets/point_index.hpp"

namespace symlab {

namespace {

[[noreturn]] void bad_pair(const AnySet& a, const AnySet& b, const char* op) {
  throw std::invalid_argument(std::string(op) + " unsupported for " + rep_name(a) +
                              "/" + rep_name(b));
}

double point_to_run_box(const GridSet& g, const Vector& p) {
  double h = g.spacing().to_double();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : g.runs()) {
    double d2 = 0.0;
    double lo = static_cast<double>(r.x0) * h, hi = static_cast<double>(r.x1 + 1) * h;
    double c = std::clamp(p[0], lo, hi);
    d2 += (p[0] - c) * (p[0] - c);
    if (g.dim() >= 2) {
      double ylo = static_cast<double>(r.y) * h, yhi = ylo + h;
      double cy = std::clamp(p[1], ylo, yhi);
      d2 += (p[1] - cy) * (p[1] - cy);
    }
    if (g.dim() >= 3) {
      double zlo = static_cast<double>(r.z) * h, zhi = zlo + h;
      double cz = std::clamp(p[2], zlo, zhi);
      d2 += (p[2] - cz) * (p[2] - cz);
    }
    best = std::min(best, d2);
  }
  return std::sqrt(best);
}

ApproxDistance points_vs_grid(const FinitePointSet& a, const GridSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  // Points-to-set excess is exact (point-to-box distances).
  double e_pts = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    e_pts = std::max(e_pts, point_to_run_box(b, a.point(i)));
  // Set-to-points excess from cell centers, off by at most half a cube diagonal.
  double h = b.spacing().to_double();
  double root_n = std::sqrt(static_cast<double>(b.dim()));
  PointIndex idx(a.points());
  double e_grid = 0.0;
  Vector q(b.dim());
  b.for_each_cell([&](const Cell& c) {
    for (int d = 0; d < b.dim(); ++d)
      q[d] = (static_cast<double>(c[static_cast<std::size_t>(d)]) + 0.5) * h;
    e_grid = std::max(e_grid, idx.min_distance(q, e_grid));
  });
  return {std::max(e_pts, e_grid), h * root_n / 2.0};
}

}  // namespace

AnySet minkowski_sum(const AnySet& a, const AnySet& b) {
  if (a.index() != b.index()) bad_pair(a, b, "minkowski_sum");
  if (dim_of(a) != dim_of(b)) throw std::invalid_argument("dimension mismatch");
  if (const auto* pa = std::get_if<FinitePointSet>(&a))
    return minkowski_sum(*pa, std::get<FinitePointSet>(b));
  if (const auto* ia = std::get_if<IntervalUnion>(&a))
    return minkowski_sum(*ia, std::get<IntervalUnion>(b));
  if (const auto* ga = std::get_if<GridSet>(&a))
    return minkowski_sum(*ga, std::get<GridSet>(b));
  return minkowski_sum(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b));
}

AnySet scale(const AnySet& a, const Scalar& t) {
  if (t.value() < 0.0) throw std::invalid_argument("scale factor must be nonnegative");
  if (const auto* p = std::get_if<FinitePointSet>(&a)) return scaled(*p, t.value());
  if (const auto* i = std::get_if<IntervalUnion>(&a)) {
    if (!t.is_dyadic())
      throw std::invalid_argument("interval unions scale by dyadic factors only");
    return scaled(*i, t.dyadic());
  }
  if (const auto* g = std::get_if<GridSet>(&a)) {
    if (!t.is_dyadic() || !t.dyadic().is_pow2())
      throw std::invalid_argument("grid sets scale by powers of two only");
    return scaled_pow2(*g, t.dyadic().exponent());
  }
  return scaled(std::get<ConvexPolygon>(a), t.value());
}

AnySet translate(const AnySet& a, const Vector& v) {
  if (v.size() != dim_of(a)) throw std::invalid_argument("dimension mismatch");
  if (const auto* p = std::get_if<FinitePointSet>(&a)) return translated(*p, v);
  if (const auto* i = std::get_if<IntervalUnion>(&a))
    return translated(*i, Dyadic::from_double(v[0]));
  if (const auto* g = std::get_if<GridSet>(&a)) {
    double h = g->spacing().to_double();
    Cell off{0, 0, 0};
    for (int d = 0; d < g->dim(); ++d) {
      double cells = v[d] / h;
      double rounded = std::round(cells);
      if (std::abs(cells - rounded) > 1e-9)
        throw std::invalid_argument("grid translation must be a multiple of the spacing");
      off[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(rounded);
    }
    return translated_cells(*g, off);
  }
  return translated(std::get<ConvexPolygon>(a), Eigen::Vector2d(v[0], v[1]));
}

AnySet reflect_set(const AnySet& a, const Subspace& h) {
  if (const auto* p = std::get_if<FinitePointSet>(&a)) return reflected(*p, h);
  if (const auto* i = std::get_if<IntervalUnion>(&a)) {
    check_dim(h, 1);
    if (h.dim() != 0)
      throw std::invalid_argument("interval unions reflect through the origin only");
    return negated(*i);
  }
  if (const auto* g = std::get_if<GridSet>(&a)) return reflected(*g, h);
  return reflected(std::get<ConvexPolygon>(a), h);
}

AnySet convex_hull_of(const AnySet& a) {
  if (const auto* i = std::get_if<IntervalUnion>(&a)) return convex_hull(*i);
  if (const auto* poly = std::get_if<ConvexPolygon>(&a)) return *poly;
  if (const auto* p = std::get_if<FinitePointSet>(&a)) {
    if (p->dim() == 1) {
      double lo = p->points().row(0).minCoeff();
      double hi = p->points().row(0).maxCoeff();
      return IntervalUnion::segment(Dyadic::from_double(lo), Dyadic::from_double(hi));
    }
    if (p->dim() == 2) return hull_polygon(a);
    std::vector<Vector> pts;
    pts.reserve(p->size());
    for (std::size_t i = 0; i < p->size(); ++i) pts.push_back(p->point(i));
    Hull3d h = hull_3d(pts);
    std::vector<Vector> verts = h.vertices.empty() ? pts : h.vertices;
    return FinitePointSet::from_points(3, verts, p->snap_resolution());
  }
  const GridSet& g = std::get<GridSet>(a);
  std::vector<Vector> corners = g.corner_points();
  if (g.dim() == 1) {
    double lo = corners.front()[0], hi = lo;
    for (const auto& c : corners) { lo = std::min(lo, c[0]); hi = std::max(hi, c[0]); }
    return IntervalUnion::segment(Dyadic::from_double(lo), Dyadic::from_double(hi));
  }
  if (g.dim() == 2) return hull_polygon(a);
  Hull3d h = hull_3d(corners);
  return FinitePointSet::from_points(3, h.vertices.empty() ? corners : h.vertices, 0.0);
}

ConvexPolygon hull_polygon(const AnySet& a) {
  if (dim_of(a) != 2) throw std::invalid_argument("hull_polygon needs a 2-D set");
  if (const auto* poly = std::get_if<ConvexPolygon>(&a)) return *poly;
  std::vector<Eigen::Vector2d> pts;
  if (const auto* p = std::get_if<FinitePointSet>(&a)) {
    pts.reserve(p->size());
    for (std::size_t i = 0; i < p->size(); ++i) pts.emplace_back(p->point(i)[0], p->point(i)[1]);
  } else {
    const GridSet& g = std::get<GridSet>(a);
    for (const auto& c : g.corner_points()) pts.emplace_back(c[0], c[1]);
  }
  return ConvexPolygon::hull_of(pts);
}

Scalar volume(const AnySet& a) {
  if (std::holds_alternative<FinitePointSet>(a)) return Scalar(Dyadic(0));
  if (const auto* i = std::get_if<IntervalUnion>(&a)) return Scalar(i->total_length());
  if (const auto* g = std::get_if<GridSet>(&a)) return Scalar(volume(*g));
  return Scalar::real(area(std::get<ConvexPolygon>(a)));
}

double diameter(const AnySet& a) {
  return std::visit([](const auto& s) { return diameter(s); }, a);
}

double support_function(const AnySet& a, const Vector& u) {
  if (const auto* p = std::get_if<FinitePointSet>(&a)) return support(*p, u);
  if (const auto* poly = std::get_if<ConvexPolygon>(&a)) {
    if (u.size() != 2) throw std::invalid_argument("dimension mismatch");
    return support(*poly, Eigen::Vector2d(u[0], u[1]));
  }
  throw std::invalid_argument("support function is provided for point sets and polygons");
}

double mean_width_2d(const AnySet& a) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&a)) return mean_width(*poly);
  throw std::invalid_argument("mean width is provided for polygons");
}

ApproxDistance hausdorff_distance(const AnySet& a, const AnySet& b) {
  if (dim_of(a) != dim_of(b)) throw std::invalid_argument("dimension mismatch");
  if (a.index() == b.index()) {
    if (const auto* p = std::get_if<FinitePointSet>(&a))
      return {hausdorff_distance(*p, std::get<FinitePointSet>(b)), 0.0};
    if (const auto* i = std::get_if<IntervalUnion>(&a))
      return {hausdorff_distance(*i, std::get<IntervalUnion>(b)).to_double(), 0.0};
    if (const auto* g = std::get_if<GridSet>(&a))
      return hausdorff_distance(*g, std::get<GridSet>(b));
    return {hausdorff_distance(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b)), 0.0};
  }
  if (const auto* p = std::get_if<FinitePointSet>(&a)) {
    if (const auto* poly = std::get_if<ConvexPolygon>(&b)) return hausdorff_distance(*p, *poly);
    if (const auto* i = std::get_if<IntervalUnion>(&b))
      return {hausdorff_distance(*p, *i).to_double(), 0.0};
    if (const auto* g = std::get_if<GridSet>(&b)) return points_vs_grid(*p, *g);
  }
  if (const auto* g = std::get_if<GridSet>(&a)) {
    if (const auto* poly = std::get_if<ConvexPolygon>(&b)) return hausdorff_distance(*g, *poly);
  }
  // Remaining mixed pairs resolve by symmetry.
  if (a.index() > b.index()) return hausdorff_distance(b, a);
  bad_pair(a, b, "hausdorff_distance");
}

}  // namespace symlab
