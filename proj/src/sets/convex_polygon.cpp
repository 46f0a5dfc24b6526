#include "symlab/sets/convex_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symlab {

namespace {

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool lex_less(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

double spread(const std::vector<Eigen::Vector2d>& pts) {
  double lo_x = pts[0].x(), hi_x = lo_x, lo_y = pts[0].y(), hi_y = lo_y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x()); hi_x = std::max(hi_x, p.x());
    lo_y = std::min(lo_y, p.y()); hi_y = std::max(hi_y, p.y());
  }
  return std::max(hi_x - lo_x, hi_y - lo_y);
}

// Rotates so the lexicographically smallest vertex comes first.
void canonicalize(std::vector<Eigen::Vector2d>& v) {
  auto it = std::min_element(v.begin(), v.end(), lex_less);
  std::rotate(v.begin(), it, v.end());
}

double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                              const Eigen::Vector2d& b) {
  Eigen::Vector2d ab = b - a;
  double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

std::vector<Eigen::Vector2d> hull_ccw(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  // Tolerance dedupe: micro-edges at roundoff scale would wreck the angular
  // edge walks downstream. Dyadic desk data sits far above this cutoff.
  double near = 1e-12 * (spread(pts) + 1e-300);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const auto& a, const auto& b) {
                          return (a - b).cwiseAbs().maxCoeff() <= near;
                        }),
            pts.end());
  if (pts.size() <= 2) return pts;
  // Strictly positive turns only: an epsilon cutoff here would amputate the
  // dense shallow arcs that iterated averaging produces, losing real support.
  std::vector<Eigen::Vector2d> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

ConvexPolygon ConvexPolygon::hull_of(const std::vector<Eigen::Vector2d>& points) {
  if (points.empty()) throw std::invalid_argument("polygon needs at least one point");
  ConvexPolygon p;
  p.v_ = hull_ccw(points);
  canonicalize(p.v_);
  return p;
}

ConvexPolygon ConvexPolygon::from_ccw(std::vector<Eigen::Vector2d> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polygon needs at least one vertex");
  if (vertices.size() <= 2) {
    ConvexPolygon p;
    p.v_ = std::move(vertices);
    if (p.v_.size() == 2) {
      if (p.v_[0] == p.v_[1]) p.v_.resize(1);
      else if (!lex_less(p.v_[0], p.v_[1])) std::swap(p.v_[0], p.v_[1]);
    }
    return p;
  }
  std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    double c = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
    if (c <= 0.0) return hull_of(vertices);  // repair non-strict input
  }
  ConvexPolygon p;
  p.v_ = std::move(vertices);
  canonicalize(p.v_);
  return p;
}

ConvexPolygon ConvexPolygon::axis_rectangle(const Eigen::Vector2d& lo,
                                            const Eigen::Vector2d& hi) {
  return hull_of({{lo.x(), lo.y()}, {hi.x(), lo.y()}, {hi.x(), hi.y()}, {lo.x(), hi.y()}});
}

namespace {

// Edge vectors in CCW order starting from the bottommost-leftmost vertex.
// Angles are unwrapped along the walk so they ascend even when roundoff tilts
// an edge across the 0/2pi seam.
struct EdgeWalk {
  std::vector<Eigen::Vector2d> edges;
  std::vector<double> angles;
  Eigen::Vector2d start;
};

// Angle of an edge with roundoff-scale axis components snapped to the axes,
// so both summands classify a nearly-horizontal bottom edge the same way.
double snapped_angle(const Eigen::Vector2d& e) {
  double guard = 1e-12 * e.norm();
  double ex = std::abs(e.x()) <= guard ? 0.0 : e.x();
  double ey = std::abs(e.y()) <= guard ? 0.0 : e.y();
  return std::atan2(ey, ex);
}

EdgeWalk edge_walk(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  std::size_t n = v.size();
  double tie = 1e-12 * spread(v);
  std::size_t s = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i].y() < v[s].y() - tie) s = i;
    else if (v[i].y() <= v[s].y() + tie && v[i].x() < v[s].x()) s = i;
  }
  EdgeWalk w;
  w.start = v[s];
  w.edges.reserve(n);
  w.angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = (s + i) % n, b = (s + i + 1) % n;
    Eigen::Vector2d e = v[b] - v[a];
    double ang = snapped_angle(e);
    // The true angle sequence increases; a decrease of more than pi is an
    // atan2 fold (legitimate turns stay below pi), anything smaller is
    // roundoff jitter on a near-collinear pair and clamps to monotone.
    if (!w.angles.empty() && ang < w.angles.back()) {
      if (w.angles.back() - ang > M_PI) ang += 2.0 * M_PI;
      if (ang < w.angles.back()) ang = w.angles.back();
    }
    w.edges.push_back(e);
    w.angles.push_back(ang);
  }
  return w;
}

}  // namespace

namespace {

// Convex-chain simplification with a global deviation budget: a vertex is
// dropped only while every vertex of its arc stays within eta of the chord,
// so the output polygon is a subset of the input within Hausdorff eta.
// (A plain epsilon collinearity cutoff cascades: popping a dense shallow arc
// against ever-new chords amputates unbounded sagitta.)
std::vector<Eigen::Vector2d> simplify_convex_chain(const std::vector<Eigen::Vector2d>& v,
                                                   double eta) {
  constexpr std::size_t kArcCap = 96;
  std::size_t n = v.size();
  if (n <= 8 || eta <= 0.0) return v;
  std::vector<Eigen::Vector2d> out;
  out.reserve(n);
  out.push_back(v[0]);
  std::size_t i = 0;
  while (i + 1 < n) {
    std::size_t best = i + 1;
    for (std::size_t j = i + 2; j < n && j - i <= kArcCap; ++j) {
      bool ok = true;
      for (std::size_t k = i + 1; k < j && ok; ++k)
        ok = point_segment_distance(v[k], v[i], v[j]) <= eta;
      if (!ok) break;
      best = j;
    }
    out.push_back(v[best]);
    i = best;
  }
  return out;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.degenerate() || b.degenerate()) {
    std::vector<Eigen::Vector2d> sums;
    sums.reserve(a.vertex_count() * b.vertex_count());
    for (const auto& p : a.vertices())
      for (const auto& q : b.vertices()) sums.push_back(p + q);
    return ConvexPolygon::hull_of(sums);
  }
  EdgeWalk wa = edge_walk(a);
  EdgeWalk wb = edge_walk(b);
  std::vector<Eigen::Vector2d> verts;
  verts.reserve(wa.edges.size() + wb.edges.size());
  Eigen::Vector2d cur = wa.start + wb.start;
  std::size_t i = 0, j = 0;
  while (i < wa.edges.size() || j < wb.edges.size()) {
    verts.push_back(cur);
    if (j == wb.edges.size()) {
      cur += wa.edges[i++];
    } else if (i == wa.edges.size()) {
      cur += wb.edges[j++];
    } else if (std::abs(wa.angles[i] - wb.angles[j]) < 1e-15) {
      cur += wa.edges[i++] + wb.edges[j++];  // parallel edges fuse
    } else if (wa.angles[i] < wb.angles[j]) {
      cur += wa.edges[i++];
    } else {
      cur += wb.edges[j++];
    }
  }
  std::vector<Eigen::Vector2d> hull = hull_ccw(verts);
  if (hull.size() <= 2) return ConvexPolygon::from_ccw(std::move(hull));
  // Iterated sums would otherwise accumulate roundoff-scale vertices without
  // bound; the budget stays far below every stated tolerance.
  double eta = 1e-13 * spread(hull);
  return ConvexPolygon::from_ccw(simplify_convex_chain(hull, eta));
}

ConvexPolygon scaled(const ConvexPolygon& a, double t) {
  if (t < 0.0) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<Eigen::Vector2d> v;
  if (t == 0.0) return ConvexPolygon::point(Eigen::Vector2d::Zero());
  v.reserve(a.vertex_count());
  for (const auto& p : a.vertices()) v.push_back(t * p);
  return ConvexPolygon::from_ccw(std::move(v));
}

ConvexPolygon translated(const ConvexPolygon& a, const Eigen::Vector2d& t) {
  std::vector<Eigen::Vector2d> v;
  v.reserve(a.vertex_count());
  for (const auto& p : a.vertices()) v.push_back(p + t);
  return ConvexPolygon::from_ccw(std::move(v));
}

ConvexPolygon transformed(const ConvexPolygon& a, const Eigen::Matrix2d& m) {
  std::vector<Eigen::Vector2d> v;
  v.reserve(a.vertex_count());
  for (const auto& p : a.vertices()) v.push_back(m * p);
  if (m.determinant() < 0.0) std::reverse(v.begin(), v.end());
  return ConvexPolygon::from_ccw(std::move(v));
}

ConvexPolygon reflected(const ConvexPolygon& a, const Subspace& h) {
  check_dim(h, 2);
  std::vector<Eigen::Vector2d> v;
  v.reserve(a.vertex_count());
  for (const auto& p : a.vertices()) {
    Vector r = reflect(Vector(p), h);
    v.emplace_back(r[0], r[1]);
  }
  std::reverse(v.begin(), v.end());  // reflections flip orientation
  return ConvexPolygon::from_ccw(std::move(v));
}

double support(const ConvexPolygon& a, const Eigen::Vector2d& u) {
  if (u.norm() == 0.0) throw std::invalid_argument("support direction must be nonzero");
  double best = a.vertices().front().dot(u);
  for (const auto& p : a.vertices()) best = std::max(best, p.dot(u));
  return best;
}

double perimeter(const ConvexPolygon& a) {
  const auto& v = a.vertices();
  if (v.size() == 1) return 0.0;
  if (v.size() == 2) return 2.0 * (v[1] - v[0]).norm();  // segment traversed twice
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (v[(i + 1) % v.size()] - v[i]).norm();
  return s;
}

double area(const ConvexPolygon& a) {
  const auto& v = a.vertices();
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * s;
}

double mean_width(const ConvexPolygon& a) { return perimeter(a) / M_PI; }

double diameter(const ConvexPolygon& a) {
  const auto& v = a.vertices();
  std::size_t n = v.size();
  if (n == 1) return 0.0;
  if (n == 2) return (v[1] - v[0]).norm();
  // Rotating calipers over antipodal vertex pairs.
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    while (cross(p, q, v[(j + 1) % n]) > cross(p, q, v[j])) j = (j + 1) % n;
    best = std::max({best, (v[j] - p).norm(), (v[j] - q).norm()});
  }
  return best;
}

Eigen::Vector2d centroid(const ConvexPolygon& a) {
  const auto& v = a.vertices();
  if (v.size() < 3) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& p : v) c += p;
    return c / static_cast<double>(v.size());
  }
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  double twice_area = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    double w = p.x() * q.y() - q.x() * p.y();
    twice_area += w;
    c += w * (p + q);
  }
  return c / (3.0 * twice_area);
}

double distance_to(const ConvexPolygon& a, const Eigen::Vector2d& x) {
  const auto& v = a.vertices();
  if (v.size() == 1) return (x - v[0]).norm();
  if (v.size() == 2) return point_segment_distance(x, v[0], v[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    if (cross(p, q, x) < 0.0) inside = false;
    best = std::min(best, point_segment_distance(x, p, q));
  }
  return inside ? 0.0 : best;
}

bool contains(const ConvexPolygon& a, const Eigen::Vector2d& x, double tol) {
  return distance_to(a, x) <= tol;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
  double e = 0.0;
  for (const auto& p : a.vertices()) e = std::max(e, distance_to(b, p));
  for (const auto& q : b.vertices()) e = std::max(e, distance_to(a, q));
  return e;
}

double circumradius(const ConvexPolygon& a, const Eigen::Vector2d& center) {
  double r = 0.0;
  for (const auto& p : a.vertices()) r = std::max(r, (p - center).norm());
  return r;
}

double inradius(const ConvexPolygon& a, const Eigen::Vector2d& center) {
  const auto& v = a.vertices();
  if (v.size() < 3) return 0.0;
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    r = std::min(r, point_segment_distance(center, v[i], v[(i + 1) % v.size()]));
  return r;
}

}  // namespace symlab
