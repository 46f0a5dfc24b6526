#include "symlab/sets/grid_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "symlab/sets/convex_hull.hpp"
#include "symlab/sets/point_index.hpp"

namespace symlab {

namespace {

constexpr std::size_t kRunPairGuard = 100'000'000;

std::vector<GridSet::Run> canonical_runs(std::vector<GridSet::Run> runs) {
  if (runs.empty()) throw std::invalid_argument("grid set must be nonempty");
  for (const auto& r : runs)
    if (r.x1 < r.x0) throw std::invalid_argument("run with x1 < x0");
  std::sort(runs.begin(), runs.end());
  std::vector<GridSet::Run> out;
  out.reserve(runs.size());
  out.push_back(runs.front());
  for (std::size_t i = 1; i < runs.size(); ++i) {
    auto& last = out.back();
    const auto& r = runs[i];
    if (r.z == last.z && r.y == last.y && r.x0 <= last.x1 + 1) {
      last.x1 = std::max(last.x1, r.x1);
    } else {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

GridSet GridSet::from_runs(int dim, const Dyadic& spacing, std::vector<Run> runs) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1..3");
  if (spacing.sign() <= 0) throw std::invalid_argument("grid spacing must be positive");
  GridSet g;
  g.dim_ = dim;
  g.h_ = spacing;
  g.runs_ = canonical_runs(std::move(runs));
  for (const auto& r : g.runs_) {
    if (dim < 3 && r.z != 0) throw std::invalid_argument("z coordinate in low dimension");
    if (dim < 2 && r.y != 0) throw std::invalid_argument("y coordinate in one dimension");
  }
  return g;
}

GridSet GridSet::from_cells(int dim, const Dyadic& spacing, const std::vector<Cell>& cells) {
  std::vector<Run> runs;
  runs.reserve(cells.size());
  for (const auto& c : cells) runs.push_back({c[2], c[1], c[0], c[0]});
  return from_runs(dim, spacing, std::move(runs));
}

GridSet GridSet::box(int dim, const Dyadic& spacing, const Cell& lo, const Cell& hi) {
  std::vector<Run> runs;
  std::int64_t zlo = dim >= 3 ? lo[2] : 0, zhi = dim >= 3 ? hi[2] : 0;
  std::int64_t ylo = dim >= 2 ? lo[1] : 0, yhi = dim >= 2 ? hi[1] : 0;
  for (std::int64_t z = zlo; z <= zhi; ++z)
    for (std::int64_t y = ylo; y <= yhi; ++y) runs.push_back({z, y, lo[0], hi[0]});
  return from_runs(dim, spacing, std::move(runs));
}

std::uint64_t GridSet::cell_count() const {
  std::uint64_t n = 0;
  for (const auto& r : runs_) n += static_cast<std::uint64_t>(r.length());
  return n;
}

bool GridSet::contains_cell(const Cell& c) const {
  Run probe{c[2], c[1], c[0], std::numeric_limits<std::int64_t>::max()};
  auto it = std::upper_bound(runs_.begin(), runs_.end(), probe);
  if (it == runs_.begin()) return false;
  --it;
  return it->z == c[2] && it->y == c[1] && it->x0 <= c[0] && c[0] <= it->x1;
}

Cell GridSet::min_corner() const {
  Cell m{runs_.front().x0, 0, 0};
  m[1] = runs_.front().y;
  m[2] = runs_.front().z;
  for (const auto& r : runs_) {
    m[0] = std::min(m[0], r.x0);
    m[1] = std::min(m[1], r.y);
    m[2] = std::min(m[2], r.z);
  }
  return m;
}

Cell GridSet::max_corner() const {
  Cell m{runs_.front().x1, runs_.front().y, runs_.front().z};
  for (const auto& r : runs_) {
    m[0] = std::max(m[0], r.x1);
    m[1] = std::max(m[1], r.y);
    m[2] = std::max(m[2], r.z);
  }
  return m;
}

void GridSet::for_each_cell(const std::function<void(const Cell&)>& fn) const {
  for (const auto& r : runs_)
    for (std::int64_t x = r.x0; x <= r.x1; ++x) fn(Cell{x, r.y, r.z});
}

std::vector<Cell> GridSet::cells(std::size_t guard) const {
  if (cell_count() > guard) throw std::overflow_error("grid cell enumeration exceeds guard");
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(cell_count()));
  for_each_cell([&](const Cell& c) { out.push_back(c); });
  return out;
}

std::vector<Vector> GridSet::corner_points() const {
  double h = h_.to_double();
  std::vector<Vector> pts;
  auto add = [&](double x, double y, double z) {
    Vector v(dim_);
    v[0] = x;
    if (dim_ >= 2) v[1] = y;
    if (dim_ >= 3) v[2] = z;
    pts.push_back(v);
  };
  for (const auto& r : runs_) {
    for (double x : {static_cast<double>(r.x0) * h, static_cast<double>(r.x1 + 1) * h}) {
      double y0 = static_cast<double>(r.y) * h, y1 = static_cast<double>(r.y + 1) * h;
      double z0 = static_cast<double>(r.z) * h, z1 = static_cast<double>(r.z + 1) * h;
      if (dim_ == 1) add(x, 0, 0);
      else if (dim_ == 2) { add(x, y0, 0); add(x, y1, 0); }
      else { add(x, y0, z0); add(x, y0, z1); add(x, y1, z0); add(x, y1, z1); }
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    for (Eigen::Index d = 0; d < a.size(); ++d)
      if (a[d] != b[d]) return a[d] < b[d];
    return false;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

GridSet minkowski_sum(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (!(a.spacing() == b.spacing())) throw std::invalid_argument("grid spacing mismatch");
  std::size_t pairs = a.runs().size() * b.runs().size();
  if (pairs > kRunPairGuard) throw std::overflow_error("grid sum exceeds work guard");
  int dy_hi = a.dim() >= 2 ? 1 : 0;
  int dz_hi = a.dim() >= 3 ? 1 : 0;
  std::vector<GridSet::Run> runs;
  runs.reserve(pairs * (dy_hi + 1) * (dz_hi + 1));
  for (const auto& p : a.runs())
    for (const auto& q : b.runs()) {
      std::int64_t x0 = p.x0 + q.x0, x1 = p.x1 + q.x1 + 1;
      for (int dz = 0; dz <= dz_hi; ++dz)
        for (int dy = 0; dy <= dy_hi; ++dy)
          runs.push_back({p.z + q.z + dz, p.y + q.y + dy, x0, x1});
    }
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

GridSet reflected(const GridSet& a, const Subspace& h) {
  if (!h.axis_aligned())
    throw std::invalid_argument("grid reflection needs an axis-aligned subspace");
  check_dim(h, a.dim());
  bool fx = !h.keeps_axis(0);
  bool fy = a.dim() >= 2 && !h.keeps_axis(1);
  bool fz = a.dim() >= 3 && !h.keeps_axis(2);
  std::vector<GridSet::Run> runs;
  runs.reserve(a.runs().size());
  for (const auto& r : a.runs()) {
    GridSet::Run o = r;
    if (fx) { o.x0 = -1 - r.x1; o.x1 = -1 - r.x0; }  // cube [c,c+1] -> cell -c-1
    if (fy) o.y = -1 - r.y;
    if (fz) o.z = -1 - r.z;
    runs.push_back(o);
  }
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

GridSet translated_cells(const GridSet& a, const Cell& offset) {
  std::vector<GridSet::Run> runs = a.runs();
  for (auto& r : runs) {
    r.x0 += offset[0];
    r.x1 += offset[0];
    r.y += offset[1];
    r.z += offset[2];
  }
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

GridSet transformed(const GridSet& a, const Isometry& iso) {
  int n = a.dim();
  if (iso.dim() != n) throw std::invalid_argument("isometry dimension mismatch");
  if (!iso.is_signed_permutation())
    throw std::invalid_argument("grid isometries need a signed-permutation linear part");
  double h = a.spacing().to_double();
  std::array<int, 3> src{0, 0, 0};
  std::array<int, 3> sgn{1, 1, 1};
  Cell shift{0, 0, 0};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      double v = iso.linear(r, c);
      if (std::abs(v) > 0.5) {
        src[static_cast<std::size_t>(r)] = c;
        sgn[static_cast<std::size_t>(r)] = v > 0 ? 1 : -1;
      }
    }
    double cells = iso.offset[r] / h;
    double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9)
      throw std::invalid_argument("grid isometry offset must be a multiple of the spacing");
    shift[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(rounded);
  }
  std::vector<GridSet::Run> runs;
  std::size_t guard = 8'000'000;
  if (a.cell_count() > guard) throw std::overflow_error("grid transform exceeds work guard");
  a.for_each_cell([&](const Cell& c) {
    Cell o{0, 0, 0};
    for (int r = 0; r < n; ++r) {
      std::int64_t v = c[static_cast<std::size_t>(src[static_cast<std::size_t>(r)])];
      // cube [v, v+1] maps to [-v-1, -v] under sign flip
      o[static_cast<std::size_t>(r)] =
          (sgn[static_cast<std::size_t>(r)] > 0 ? v : -v - 1) + shift[static_cast<std::size_t>(r)];
    }
    runs.push_back({o[2], o[1], o[0], o[0]});
  });
  return GridSet::from_runs(n, a.spacing(), std::move(runs));
}

GridSet with_spacing_halved(const GridSet& a) {
  return GridSet::from_runs(a.dim(), a.spacing().halved(), a.runs());
}

GridSet refined(const GridSet& a) {
  std::vector<GridSet::Run> runs;
  runs.reserve(a.runs().size() * 4);
  int dy_hi = a.dim() >= 2 ? 1 : 0;
  int dz_hi = a.dim() >= 3 ? 1 : 0;
  for (const auto& r : a.runs())
    for (int dz = 0; dz <= dz_hi; ++dz)
      for (int dy = 0; dy <= dy_hi; ++dy)
        runs.push_back({2 * r.z + dz, 2 * r.y + dy, 2 * r.x0, 2 * r.x1 + 1});
  return GridSet::from_runs(a.dim(), a.spacing().halved(), std::move(runs));
}

GridSet scaled_pow2(const GridSet& a, int k) {
  Dyadic h = a.spacing();
  for (int i = 0; i < k; ++i) h = h.doubled();
  for (int i = 0; i > k; --i) h = h.halved();
  return GridSet::from_runs(a.dim(), h, a.runs());
}

std::pair<GridSet, GridSet> align_spacing(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.spacing().mantissa() != b.spacing().mantissa())
    throw std::invalid_argument("grid spacings are not power-of-two related");
  GridSet fa = a, fb = b;
  while (fa.spacing().exponent() > fb.spacing().exponent()) fa = refined(fa);
  while (fb.spacing().exponent() > fa.spacing().exponent()) fb = refined(fb);
  return {fa, fb};
}

Dyadic volume(const GridSet& a) {
  Dyadic v(static_cast<std::int64_t>(a.cell_count()));
  for (int d = 0; d < a.dim(); ++d) v = v * a.spacing();
  return v;
}

double diameter(const GridSet& a) {
  std::vector<Vector> corners = a.corner_points();
  if (a.dim() == 1) {
    double lo = corners.front()[0], hi = lo;
    for (const auto& p : corners) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
    return hi - lo;
  }
  std::vector<Eigen::Vector2d> flat;
  if (a.dim() == 2) {
    flat.reserve(corners.size());
    for (const auto& p : corners) flat.emplace_back(p[0], p[1]);
    std::vector<Eigen::Vector2d> h = hull_ccw(flat);
    double best = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        best = std::max(best, (h[i] - h[j]).norm());
    return best;
  }
  // 3-D: per-slab 2-D hulls prune the corner cloud before the 3-D hull.
  std::vector<Eigen::Vector3d> candidates;
  std::unordered_set<std::int64_t> zs;
  for (const auto& r : a.runs()) zs.insert(r.z);
  double h = a.spacing().to_double();
  for (std::int64_t z : zs) {
    std::vector<Eigen::Vector2d> slab;
    for (const auto& r : a.runs()) {
      if (r.z != z) continue;
      for (double x : {static_cast<double>(r.x0) * h, static_cast<double>(r.x1 + 1) * h})
        for (double y : {static_cast<double>(r.y) * h, static_cast<double>(r.y + 1) * h})
          slab.emplace_back(x, y);
    }
    for (const auto& p : hull_ccw(slab)) {
      candidates.emplace_back(p.x(), p.y(), static_cast<double>(z) * h);
      candidates.emplace_back(p.x(), p.y(), static_cast<double>(z + 1) * h);
    }
  }
  std::vector<Vector> pts;
  pts.reserve(candidates.size());
  for (const auto& c : candidates) pts.push_back(Vector(c));
  Hull3d hull = hull_3d(pts);
  const auto& v = hull.vertices;
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      best = std::max(best, (v[i] - v[j]).norm());
  return best;
}

bool subset(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim() || !(a.spacing() == b.spacing()))
    throw std::invalid_argument("subset needs matching representation");
  for (const auto& r : a.runs()) {
    GridSet::Run probe{r.z, r.y, r.x0, std::numeric_limits<std::int64_t>::max()};
    auto it = std::upper_bound(b.runs().begin(), b.runs().end(), probe);
    if (it == b.runs().begin()) return false;
    --it;
    // Runs are maximal and disjoint: a contiguous range is covered by one run.
    if (it->z != r.z || it->y != r.y || it->x0 > r.x0 || it->x1 < r.x1) return false;
  }
  return true;
}

GridSet union_of(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim() || !(a.spacing() == b.spacing()))
    throw std::invalid_argument("union needs matching representation");
  std::vector<GridSet::Run> runs = a.runs();
  runs.insert(runs.end(), b.runs().begin(), b.runs().end());
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

GridSet dilated_chebyshev(const GridSet& a, std::int64_t r) {
  std::int64_t dy_hi = a.dim() >= 2 ? r : 0;
  std::int64_t dz_hi = a.dim() >= 3 ? r : 0;
  std::vector<GridSet::Run> runs;
  for (const auto& run : a.runs())
    for (std::int64_t dz = -dz_hi; dz <= dz_hi; ++dz)
      for (std::int64_t dy = -dy_hi; dy <= dy_hi; ++dy)
        runs.push_back({run.z + dz, run.y + dy, run.x0 - r, run.x1 + r});
  return GridSet::from_runs(a.dim(), a.spacing(), std::move(runs));
}

bool collar_equal(const GridSet& a, const GridSet& b, std::int64_t r) {
  auto [fa, fb] = align_spacing(a, b);
  return subset(fa, dilated_chebyshev(fb, r)) && subset(fb, dilated_chebyshev(fa, r));
}

namespace {

Eigen::MatrixXd sample_centers(const GridSet& g, std::size_t budget) {
  double h = g.spacing().to_double();
  std::uint64_t cells = g.cell_count();
  std::int64_t stride = cells > budget ? static_cast<std::int64_t>(cells / budget + 1) : 1;
  std::vector<Vector> samples;
  for (const auto& r : g.runs()) {
    for (std::int64_t x = r.x0;; x += stride) {
      bool last = x >= r.x1;
      std::int64_t xx = last ? r.x1 : x;
      Vector v(g.dim());
      v[0] = (static_cast<double>(xx) + 0.5) * h;
      if (g.dim() >= 2) v[1] = (static_cast<double>(r.y) + 0.5) * h;
      if (g.dim() >= 3) v[2] = (static_cast<double>(r.z) + 0.5) * h;
      samples.push_back(v);
      if (last) break;
    }
  }
  Eigen::MatrixXd m(g.dim(), static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    m.col(static_cast<Eigen::Index>(i)) = samples[i];
  return m;
}

}  // namespace

ApproxDistance hausdorff_distance(const GridSet& a, const GridSet& b,
                                  std::size_t sample_budget) {
  auto [fa, fb] = align_spacing(a, b);
  if (fa == fb) return {0.0, 0.0};  // symmetrization fixed points are exact
  double h = fa.spacing().to_double();
  Eigen::MatrixXd sa = sample_centers(fa, sample_budget / 2);
  Eigen::MatrixXd sb = sample_centers(fb, sample_budget / 2);
  PointIndex ia(sa), ib(sb);
  double e = 0.0;
  for (Eigen::Index i = 0; i < sa.cols(); ++i)
    e = std::max(e, ib.min_distance(sa.col(i), e));
  for (Eigen::Index j = 0; j < sb.cols(); ++j)
    e = std::max(e, ia.min_distance(sb.col(j), e));
  double root_n = std::sqrt(static_cast<double>(fa.dim()));
  std::uint64_t cells = std::max(fa.cell_count(), fb.cell_count());
  double stride_slack =
      cells > sample_budget / 2
          ? 0.5 * h * static_cast<double>(cells / (sample_budget / 2) + 1)
          : 0.0;
  return {e, h * root_n + stride_slack};
}

GridSet to_grid(const FinitePointSet& a, const Dyadic& spacing) {
  double h = spacing.to_double();
  std::vector<Cell> cells;
  cells.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector p = a.point(i);
    Cell c{0, 0, 0};
    for (int d = 0; d < a.dim(); ++d)
      c[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(std::floor(p[d] / h));
    cells.push_back(c);
  }
  return GridSet::from_cells(a.dim(), spacing, cells);
}

GridSet to_grid(const ConvexPolygon& poly, const Dyadic& spacing) {
  double h = spacing.to_double();
  const auto& v = poly.vertices();
  if (poly.is_point()) {
    Cell c{static_cast<std::int64_t>(std::floor(v[0].x() / h)),
           static_cast<std::int64_t>(std::floor(v[0].y() / h)), 0};
    return GridSet::from_cells(2, spacing, {c});
  }
  if (poly.is_segment()) {
    Eigen::Vector2d d = v[1] - v[0];
    int steps = std::max(2, static_cast<int>(std::ceil(4.0 * d.norm() / h)));
    std::vector<Cell> cells;
    for (int k = 0; k <= steps; ++k) {
      Eigen::Vector2d p = v[0] + (static_cast<double>(k) / steps) * d;
      cells.push_back({static_cast<std::int64_t>(std::floor(p.x() / h)),
                       static_cast<std::int64_t>(std::floor(p.y() / h)), 0});
    }
    return GridSet::from_cells(2, spacing, cells);
  }
  double ymin = v[0].y(), ymax = ymin;
  for (const auto& p : v) { ymin = std::min(ymin, p.y()); ymax = std::max(ymax, p.y()); }
  std::int64_t row_lo = static_cast<std::int64_t>(std::floor(ymin / h));
  std::int64_t row_hi = static_cast<std::int64_t>(std::ceil(ymax / h));
  std::vector<GridSet::Run> runs;
  std::size_t n = v.size();
  for (std::int64_t row = row_lo; row <= row_hi; ++row) {
    double slab_lo = static_cast<double>(row) * h;
    double slab_hi = slab_lo + h;
    if (slab_hi <= ymin || slab_lo >= ymax) continue;  // no interior y-overlap
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    auto take = [&](double x) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); };
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = v[i];
      const auto& q = v[(i + 1) % n];
      if (p.y() >= slab_lo && p.y() <= slab_hi) take(p.x());
      for (double yc : {slab_lo, slab_hi}) {
        if ((p.y() - yc) * (q.y() - yc) < 0.0) {
          double t = (yc - p.y()) / (q.y() - p.y());
          take(p.x() + t * (q.x() - p.x()));
        }
      }
    }
    if (!(xmax > xmin)) continue;
    // Cells whose cube has interior overlap with (xmin, xmax).
    std::int64_t c0 = static_cast<std::int64_t>(std::floor(xmin / h));
    if ((static_cast<double>(c0) + 1.0) * h <= xmin) ++c0;
    std::int64_t c1 = static_cast<std::int64_t>(std::floor(xmax / h));
    if (static_cast<double>(c1) * h >= xmax) --c1;
    if (c1 < c0) continue;
    runs.push_back({0, row, c0, c1});
  }
  return GridSet::from_runs(2, spacing, std::move(runs));
}

}  // namespace symlab
