#include "symlab/sets/finite_point_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symlab/core/parallel.hpp"
#include "symlab/sets/convex_polygon.hpp"
#include "symlab/sets/point_index.hpp"

namespace symlab {

namespace {

constexpr std::size_t kPairGuard = 200'000'000;

bool col_lex_less(const Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j) {
  for (Eigen::Index d = 0; d < m.rows(); ++d) {
    if (m(d, i) != m(d, j)) return m(d, i) < m(d, j);
  }
  return false;
}

Eigen::MatrixXd canonical(const Eigen::MatrixXd& pts) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(pts.cols()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return col_lex_less(pts, i, j); });
  Eigen::MatrixXd out(pts.rows(), pts.cols());
  Eigen::Index k = 0;
  for (Eigen::Index idx : order) {
    if (k > 0 && out.col(k - 1) == pts.col(idx)) continue;  // exact dedupe
    out.col(k++) = pts.col(idx);
  }
  out.conservativeResize(Eigen::NoChange, k);
  return out;
}

double snap_coord(double x, double pitch) {
  return pitch > 0.0 ? std::round(x / pitch) * pitch : x;
}

double largest_pow2_at_most(double x) {
  if (!(x > 0.0)) return 0.0;
  return std::ldexp(1.0, static_cast<int>(std::floor(std::log2(x))));
}

}  // namespace

FinitePointSet FinitePointSet::from_points(int dim, const std::vector<Vector>& points,
                                           double snap) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("point set dimension must be 1..3");
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw std::invalid_argument("point dimension mismatch");
    m.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return from_matrix(std::move(m), snap);
}

FinitePointSet FinitePointSet::from_matrix(Eigen::MatrixXd points, double snap) {
  if (points.cols() == 0) throw std::invalid_argument("point set must be nonempty");
  FinitePointSet s;
  s.pts_ = canonical(points);
  if (snap < 0.0) {
    s.snap_ = 0.0;
    s.snap_ = largest_pow2_at_most(1e-6 * diameter(s));
  } else {
    s.snap_ = snap;
  }
  return s;
}

FinitePointSet FinitePointSet::with_snap(double snap) const {
  FinitePointSet s = *this;
  s.snap_ = snap;
  return s;
}

bool FinitePointSet::contains(const Vector& x, double tol) const {
  for (Eigen::Index i = 0; i < pts_.cols(); ++i)
    if ((pts_.col(i) - x).norm() <= tol) return true;
  return false;
}

std::size_t minkowski_sum_cost(const FinitePointSet& a, const FinitePointSet& b) {
  return a.size() * b.size();
}

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  std::size_t pairs = minkowski_sum_cost(a, b);
  if (pairs > kPairGuard) throw std::overflow_error("point-set sum exceeds work guard");
  double pitch = std::max(a.snap_resolution(), b.snap_resolution());
  const Eigen::MatrixXd& pa = a.points();
  const Eigen::MatrixXd& pb = b.points();
  Eigen::MatrixXd sums(a.dim(), static_cast<Eigen::Index>(pairs));
  parallel_chunks(static_cast<std::size_t>(pa.cols()), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Eigen::Index base = static_cast<Eigen::Index>(i) * pb.cols();
      for (Eigen::Index j = 0; j < pb.cols(); ++j) {
        Vector v = pa.col(static_cast<Eigen::Index>(i)) + pb.col(j);
        for (Eigen::Index d = 0; d < v.size(); ++d) v[d] = snap_coord(v[d], pitch);
        sums.col(base + j) = v;
      }
    }
  });
  return FinitePointSet::from_matrix(std::move(sums), pitch);
}

FinitePointSet translated(const FinitePointSet& a, const Vector& v) {
  Eigen::MatrixXd m = a.points().colwise() + v;
  return FinitePointSet::from_matrix(std::move(m), a.snap_resolution());
}

FinitePointSet resnapped(const FinitePointSet& a, double pitch) {
  if (pitch <= 0.0) return a;
  Eigen::MatrixXd m = a.points();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index d = 0; d < m.rows(); ++d) m(d, j) = snap_coord(m(d, j), pitch);
  return FinitePointSet::from_matrix(std::move(m), pitch);
}

FinitePointSet scaled(const FinitePointSet& a, double t) {
  if (t < 0.0) throw std::invalid_argument("scale factor must be nonnegative");
  Eigen::MatrixXd m = t * a.points();
  return FinitePointSet::from_matrix(std::move(m), a.snap_resolution() * t);
}

FinitePointSet reflected(const FinitePointSet& a, const Subspace& h) {
  check_dim(h, a.dim());
  Eigen::MatrixXd m(a.dim(), static_cast<Eigen::Index>(a.size()));
  for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i) = reflect(a.points().col(i), h);
  return FinitePointSet::from_matrix(std::move(m), a.snap_resolution());
}

FinitePointSet transformed(const FinitePointSet& a, const Isometry& iso) {
  if (iso.dim() != a.dim()) throw std::invalid_argument("isometry dimension mismatch");
  Eigen::MatrixXd m = (iso.linear * a.points()).colwise() + iso.offset;
  return FinitePointSet::from_matrix(std::move(m), a.snap_resolution());
}

double diameter(const FinitePointSet& a) {
  const Eigen::MatrixXd& p = a.points();
  if (p.cols() <= 1) return 0.0;
  if (a.dim() == 2 && a.size() > 256) {
    std::vector<Eigen::Vector2d> pts(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) pts[i] = p.col(static_cast<Eigen::Index>(i));
    // Hull shrinks the quadratic scan to the extreme points.
    std::vector<Eigen::Vector2d> h = hull_ccw(pts);
    double best = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        best = std::max(best, (h[i] - h[j]).norm());
    return best;
  }
  double best = 0.0;
  for (Eigen::Index i = 0; i < p.cols(); ++i)
    for (Eigen::Index j = i + 1; j < p.cols(); ++j)
      best = std::max(best, (p.col(i) - p.col(j)).norm());
  return best;
}

double support(const FinitePointSet& a, const Vector& u) {
  if (u.norm() == 0.0) throw std::invalid_argument("support direction must be nonzero");
  if (u.size() != a.dim()) throw std::invalid_argument("direction dimension mismatch");
  return (a.points().transpose() * u).maxCoeff();
}

double hausdorff_distance(const FinitePointSet& a, const FinitePointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  PointIndex ia(a.points());
  PointIndex ib(b.points());
  double e = 0.0;
  // a candidate below the running maximum cannot raise it, so each query may
  // stop at the first such witness
  for (Eigen::Index i = 0; i < a.points().cols(); ++i)
    e = std::max(e, ib.min_distance(a.points().col(i), e));
  for (Eigen::Index j = 0; j < b.points().cols(); ++j)
    e = std::max(e, ia.min_distance(b.points().col(j), e));
  return e;
}

}  // namespace symlab
