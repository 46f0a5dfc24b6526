#include "symlab/sets/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symlab/sets/point_index.hpp"

namespace symlab {

namespace {

// Exact lane for a segment (or point) versus collinear points: parameterize
// along the carrier line and compare endpoint offsets and half-gaps.
bool try_collinear(const FinitePointSet& a, const ConvexPolygon& b, double* out) {
  const auto& v = b.vertices();
  if (v.size() > 2) return false;
  Eigen::Vector2d base = v[0];
  Eigen::Vector2d dir = v.size() == 2 ? Eigen::Vector2d(v[1] - v[0]) : Eigen::Vector2d(1, 0);
  double len = dir.norm();
  if (len == 0.0) dir = Eigen::Vector2d(1, 0);
  else dir /= len;
  double scale = std::max(len, diameter(a)) + 1.0;
  std::vector<double> ts;
  ts.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Eigen::Vector2d p(a.point(i)[0], a.point(i)[1]);
    Eigen::Vector2d rel = p - base;
    double off = std::abs(dir.x() * rel.y() - dir.y() * rel.x());
    if (off > 1e-12 * scale) return false;
    ts.push_back(rel.dot(dir));
  }
  std::sort(ts.begin(), ts.end());
  double e_pts = 0.0;  // points to segment [0, len]
  for (double t : ts) e_pts = std::max({e_pts, -t, t - len});
  double e_seg = 0.0;  // segment to points
  auto dist_to_pts = [&](double t) {
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    double d = std::numeric_limits<double>::infinity();
    if (it != ts.end()) d = std::min(d, *it - t);
    if (it != ts.begin()) d = std::min(d, t - *std::prev(it));
    return d;
  };
  e_seg = std::max(dist_to_pts(0.0), dist_to_pts(len));
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    double mid = ts[i] + (ts[i + 1] - ts[i]) / 2.0;
    if (mid >= 0.0 && mid <= len) e_seg = std::max(e_seg, (ts[i + 1] - ts[i]) / 2.0);
  }
  *out = std::max(e_pts, e_seg);
  return true;
}

}  // namespace

std::vector<Eigen::Vector2d> polygon_cover_samples(const ConvexPolygon& p, double pitch) {
  std::vector<Eigen::Vector2d> samples;
  const auto& v = p.vertices();
  if (v.size() == 1) {
    samples.push_back(v[0]);
    return samples;
  }
  std::size_t n = v.size();
  std::size_t edges = v.size() == 2 ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    Eigen::Vector2d a = v[i], b = v[(i + 1) % n];
    double len = (b - a).norm();
    int steps = std::max(1, static_cast<int>(std::ceil(len / pitch)));
    for (int k = 0; k <= steps; ++k)
      samples.push_back(a + (static_cast<double>(k) / steps) * (b - a));
  }
  if (v.size() >= 3) {
    double ymin = v[0].y(), ymax = ymin, xmin = v[0].x(), xmax = xmin;
    for (const auto& q : v) {
      ymin = std::min(ymin, q.y()); ymax = std::max(ymax, q.y());
      xmin = std::min(xmin, q.x()); xmax = std::max(xmax, q.x());
    }
    for (double y = ymin + pitch / 2.0; y < ymax; y += pitch)
      for (double x = xmin + pitch / 2.0; x < xmax; x += pitch) {
        Eigen::Vector2d q(x, y);
        if (distance_to(p, q) == 0.0) samples.push_back(q);
      }
  }
  return samples;
}

ApproxDistance hausdorff_distance(const FinitePointSet& a, const ConvexPolygon& b,
                                  double sample_resolution) {
  if (a.dim() != 2) throw std::invalid_argument("mixed bridge is 2-D");
  double exact = 0.0;
  if (try_collinear(a, b, &exact)) return {exact, 0.0};

  double e_pts = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Eigen::Vector2d p(a.point(i)[0], a.point(i)[1]);
    e_pts = std::max(e_pts, distance_to(b, p));
  }
  double extent = std::max(diameter(b), diameter(a));
  double pitch = sample_resolution > 0.0 ? sample_resolution
                                         : std::max(extent / 2048.0, 1e-12);
  std::vector<Eigen::Vector2d> cover = polygon_cover_samples(b, pitch);
  PointIndex idx(a.points());
  double e_poly = 0.0;
  Vector q(2);
  for (const auto& s : cover) {
    q[0] = s.x();
    q[1] = s.y();
    e_poly = std::max(e_poly, idx.min_distance(q, e_poly));
  }
  return {std::max(e_pts, e_poly), pitch * std::sqrt(2.0) / 2.0};
}

ApproxDistance hausdorff_distance(const GridSet& a, const ConvexPolygon& b,
                                  double sample_resolution) {
  if (a.dim() != 2) throw std::invalid_argument("mixed bridge is 2-D");
  double h = a.spacing().to_double();
  Eigen::MatrixXd centers(2, static_cast<Eigen::Index>(a.cell_count()));
  Eigen::Index k = 0;
  a.for_each_cell([&](const Cell& c) {
    centers(0, k) = (static_cast<double>(c[0]) + 0.5) * h;
    centers(1, k) = (static_cast<double>(c[1]) + 0.5) * h;
    ++k;
  });
  double e_grid = 0.0;
  for (Eigen::Index i = 0; i < centers.cols(); ++i)
    e_grid = std::max(e_grid, distance_to(b, Eigen::Vector2d(centers.col(i))));
  double extent = std::max(diameter(b), diameter(a));
  double pitch = sample_resolution > 0.0 ? sample_resolution
                                         : std::max(extent / 2048.0, 1e-12);
  PointIndex idx(centers);
  double e_poly = 0.0;
  Vector q(2);
  for (const auto& s : polygon_cover_samples(b, pitch)) {
    q[0] = s.x();
    q[1] = s.y();
    e_poly = std::max(e_poly, idx.min_distance(q, e_poly));
  }
  double cell_slack = h * std::sqrt(2.0) / 2.0;  // centers stand in for cubes
  return {std::max(e_grid, e_poly), pitch * std::sqrt(2.0) / 2.0 + cell_slack};
}

Dyadic hausdorff_distance(const FinitePointSet& a, const IntervalUnion& b) {
  if (a.dim() != 1) throw std::invalid_argument("interval comparison needs 1-D points");
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Dyadic x = Dyadic::from_double(a.point(i)[0]);
    parts.push_back({x, x});
  }
  return hausdorff_distance(IntervalUnion(std::move(parts)), b);
}

}  // namespace symlab
