#include "symlab/symmetrize/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace symlab {

FinitePointSet minkowski_symmetrize(const FinitePointSet& a, const Subspace& h) {
  check_dim(h, a.dim());
  FinitePointSet sum = minkowski_sum(a, reflected(a, h));
  double pitch = a.snap_resolution();
  return resnapped(scaled(sum, 0.5), pitch);
}

IntervalUnion minkowski_symmetrize(const IntervalUnion& a, const Subspace& h) {
  check_dim(h, 1);
  if (h.dim() != 0)
    throw std::invalid_argument("interval unions symmetrize through the origin only");
  return central_symmetrize(a);
}

IntervalUnion central_symmetrize(const IntervalUnion& a) {
  return halved(minkowski_sum(a, negated(a)));
}

GridSet minkowski_symmetrize(const GridSet& a, const Subspace& h) {
  check_dim(h, a.dim());
  if (!h.axis_aligned())
    throw std::invalid_argument("grid symmetrization needs an axis-aligned subspace");
  return with_spacing_halved(minkowski_sum(a, reflected(a, h)));
}

ConvexPolygon minkowski_symmetrize(const ConvexPolygon& a, const Subspace& h) {
  check_dim(h, 2);
  return scaled(minkowski_sum(a, reflected(a, h)), 0.5);
}

AnySet minkowski_symmetrize(const AnySet& a, const Subspace& h) {
  return std::visit([&](const auto& s) -> AnySet { return minkowski_symmetrize(s, h); }, a);
}

AnySet central_symmetrize(const AnySet& a) {
  return minkowski_symmetrize(a, Subspace::origin(dim_of(a)));
}

namespace {

// Section of a fiber slab in reduced coordinates, encoded as a grid of the
// section dimension with unit spacing.
struct SectionKey {
  std::vector<std::int64_t> fiber;
  friend auto operator<=>(const SectionKey&, const SectionKey&) = default;
};

std::vector<int> section_axes_of(const Subspace& h, int n) {
  std::vector<int> axes;
  for (int d = 0; d < n; ++d)
    if (!h.keeps_axis(d)) axes.push_back(d);
  return axes;
}

std::vector<int> fiber_axes_of(const Subspace& h, int n) {
  std::vector<int> axes;
  for (int d = 0; d < n; ++d)
    if (h.keeps_axis(d)) axes.push_back(d);
  return axes;
}

// Single-run-per-row description of a 2-D section over contiguous rows.
struct RowProfile {
  std::int64_t y0 = 0;
  std::vector<std::int64_t> lo, hi;
  bool valid = false;
};

RowProfile extract_profile(const std::vector<GridSet::Run>& runs) {
  RowProfile p;
  p.y0 = runs.front().y;
  std::int64_t expect = p.y0;
  for (const auto& r : runs) {
    if (r.y != expect) return p;  // gap or duplicate row
    p.lo.push_back(r.x0);
    p.hi.push_back(r.x1);
    ++expect;
  }
  p.valid = true;
  return p;
}

bool convex_profile(const RowProfile& p) {
  for (std::size_t i = 2; i < p.lo.size(); ++i) {
    if (p.lo[i] - p.lo[i - 1] < p.lo[i - 1] - p.lo[i - 2]) return false;
    if (p.hi[i] - p.hi[i - 1] > p.hi[i - 1] - p.hi[i - 2]) return false;
  }
  return true;
}

// Min-plus convolution of convex sequences: the difference multisets merge.
std::vector<std::int64_t> minplus_convex(const std::vector<std::int64_t>& f,
                                         const std::vector<std::int64_t>& g) {
  std::vector<std::int64_t> out;
  out.reserve(f.size() + g.size() - 1);
  out.push_back(f.front() + g.front());
  std::size_t i = 1, j = 1;
  while (i < f.size() || j < g.size()) {
    std::int64_t df = i < f.size() ? f[i] - f[i - 1] : std::numeric_limits<std::int64_t>::max();
    std::int64_t dg = j < g.size() ? g[j] - g[j - 1] : std::numeric_limits<std::int64_t>::max();
    if (df <= dg) { out.push_back(out.back() + df); ++i; }
    else { out.push_back(out.back() + dg); ++j; }
  }
  return out;
}

// Cell-exact runs of (S + (-S)) for a convex section given by its profile:
// the realized sum of cubes dilates rows and extends x by one.
std::vector<GridSet::Run> convex_central_sum(const RowProfile& p) {
  std::size_t n = p.lo.size();
  std::vector<std::int64_t> neg_lo(n), neg_hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_lo[i] = -1 - p.hi[n - 1 - i];  // cube negation of row y is row -1-y
    neg_hi[i] = -1 - p.lo[n - 1 - i];
  }
  std::vector<std::int64_t> lo = minplus_convex(p.lo, neg_lo);
  std::vector<std::int64_t> neg_f(n), neg_g(n);
  for (std::size_t i = 0; i < n; ++i) { neg_f[i] = -p.hi[i]; neg_g[i] = -neg_hi[i]; }
  std::vector<std::int64_t> hi = minplus_convex(neg_f, neg_g);
  for (auto& v : hi) v = -v;

  std::int64_t conv_y0 = p.y0 + (-1 - (p.y0 + static_cast<std::int64_t>(n) - 1));
  std::vector<GridSet::Run> out;
  std::int64_t rows = static_cast<std::int64_t>(lo.size());
  for (std::int64_t r = 0; r <= rows; ++r) {  // {0,1} row closure
    std::int64_t l = std::numeric_limits<std::int64_t>::max();
    std::int64_t h = std::numeric_limits<std::int64_t>::min();
    if (r < rows) { l = lo[static_cast<std::size_t>(r)]; h = hi[static_cast<std::size_t>(r)]; }
    if (r > 0) {
      l = std::min(l, lo[static_cast<std::size_t>(r - 1)]);
      h = std::max(h, hi[static_cast<std::size_t>(r - 1)]);
    }
    out.push_back({0, conv_y0 + r, l, h + 1});
  }
  return out;
}

std::vector<GridSet::Run> central_section_sum(const GridSet& sec, const Subspace& origin) {
  if (sec.dim() == 2) {
    RowProfile p = extract_profile(sec.runs());
    if (p.valid && convex_profile(p)) return convex_central_sum(p);
  }
  return minkowski_sum(sec, reflected(sec, origin)).runs();
}

}  // namespace

GridSet fiber_symmetrize(const GridSet& a, const Subspace& h) {
  int n = a.dim();
  check_dim(h, n);
  if (!h.axis_aligned())
    throw std::invalid_argument("fiber symmetrization needs an axis-aligned subspace");
  if (h.dim() < 1 || h.dim() > n - 1)
    throw std::invalid_argument("fiber subspace dimension must be in 1..n-1");

  std::vector<int> sec_axes = section_axes_of(h, n);
  std::vector<int> fib_axes = fiber_axes_of(h, n);
  int sec_dim = static_cast<int>(sec_axes.size());

  // Fast path keeps the run axis inside the section; otherwise runs expand to
  // cells first (guarded).
  bool run_axis_in_section = !h.keeps_axis(0);
  std::map<SectionKey, std::vector<GridSet::Run>> sections;
  auto cell_axis = [](const Cell& c, int axis) { return c[static_cast<std::size_t>(axis)]; };

  if (run_axis_in_section) {
    for (const auto& r : a.runs()) {
      Cell c{r.x0, r.y, r.z};
      SectionKey key;
      for (int ax : fib_axes) key.fiber.push_back(cell_axis(c, ax));
      std::int64_t sec_y = 0;
      if (sec_dim == 2) {
        int other = sec_axes[0] == 0 ? sec_axes[1] : sec_axes[0];
        sec_y = cell_axis(c, other);
      }
      sections[key].push_back({0, sec_y, r.x0, r.x1});
    }
  } else {
    if (a.cell_count() > 8'000'000)
      throw std::overflow_error("fiber slab extraction exceeds work guard");
    a.for_each_cell([&](const Cell& c) {
      SectionKey key;
      for (int ax : fib_axes) key.fiber.push_back(cell_axis(c, ax));
      std::int64_t sx = cell_axis(c, sec_axes[0]);
      std::int64_t sy = sec_dim == 2 ? cell_axis(c, sec_axes[1]) : 0;
      sections[key].push_back({0, sy, sx, sx});
    });
  }

  // Centrally symmetrize each distinct section once.
  std::map<std::vector<GridSet::Run>, std::vector<GridSet::Run>> cache;
  Subspace sec_origin = Subspace::origin(sec_dim);
  std::vector<GridSet::Run> out;
  for (auto& [key, runs] : sections) {
    GridSet sec = GridSet::from_runs(sec_dim, Dyadic(1), runs);
    auto it = cache.find(sec.runs());
    if (it == cache.end()) {
      it = cache.emplace(sec.runs(), central_section_sum(sec, sec_origin)).first;
    }
    // Reassemble at half spacing: fiber coordinates refine to {2k, 2k+1}.
    std::size_t combos = static_cast<std::size_t>(1) << fib_axes.size();
    for (const auto& sr : it->second) {
      for (std::size_t mask = 0; mask < combos; ++mask) {
        Cell c{0, 0, 0};
        for (std::size_t fi = 0; fi < fib_axes.size(); ++fi)
          c[static_cast<std::size_t>(fib_axes[fi])] =
              2 * key.fiber[fi] + ((mask >> fi) & 1);
        c[static_cast<std::size_t>(sec_axes[0])] = sr.x0;  // placeholder, fixed below
        if (sec_dim == 2) c[static_cast<std::size_t>(sec_axes[1])] = sr.y;
        if (sec_axes[0] == 0) {
          out.push_back({c[2], c[1], sr.x0, sr.x1});
        } else {
          for (std::int64_t x = sr.x0; x <= sr.x1; ++x) {
            c[static_cast<std::size_t>(sec_axes[0])] = x;
            out.push_back({c[2], c[1], c[0], c[0]});
          }
        }
      }
    }
  }
  return GridSet::from_runs(n, a.spacing().halved(), std::move(out));
}

GridSet steiner_symmetrize_grid(const GridSet& a, const Subspace& h) {
  int n = a.dim();
  check_dim(h, n);
  if (!h.axis_aligned())
    throw std::invalid_argument("grid rearrangement needs an axis-aligned subspace");
  if (h.dim() != n - 1)
    throw std::invalid_argument("line rearrangement needs a subspace of dimension n-1");
  int missing = -1;
  for (int d = 0; d < n; ++d)
    if (!h.keeps_axis(d)) missing = d;

  struct Line {
    std::int64_t lo = 0, hi = 0, count = 0;
    bool init = false;
  };
  std::map<std::array<std::int64_t, 2>, Line> lines;
  auto feed = [&](std::array<std::int64_t, 2> key, std::int64_t lo, std::int64_t hi) {
    Line& l = lines[key];
    if (!l.init) { l.lo = lo; l.hi = hi; l.init = true; }
    else { l.lo = std::min(l.lo, lo); l.hi = std::max(l.hi, hi); }
    l.count += hi - lo + 1;
  };

  if (missing == 0) {
    for (const auto& r : a.runs()) feed({r.y, r.z}, r.x0, r.x1);
  } else {
    if (a.cell_count() > 8'000'000)
      throw std::overflow_error("line extraction exceeds work guard");
    a.for_each_cell([&](const Cell& c) {
      std::array<std::int64_t, 2> key{0, 0};
      int k = 0;
      for (int d = 0; d < n; ++d)
        if (d != missing) key[static_cast<std::size_t>(k++)] = c[static_cast<std::size_t>(d)];
      std::int64_t v = c[static_cast<std::size_t>(missing)];
      feed(key, v, v);
    });
  }

  std::vector<GridSet::Run> out;
  for (const auto& [key, l] : lines) {
    std::int64_t extent = l.hi - l.lo + 1;
    std::int64_t start = l.lo + (extent - l.count) / 2;  // lower-index bias on ties
    if (missing == 0) {
      std::int64_t y = key[0], z = key[1];
      out.push_back({z, y, start, start + l.count - 1});
    } else {
      Cell c{0, 0, 0};
      int k = 0;
      for (int d = 0; d < n; ++d)
        if (d != missing) c[static_cast<std::size_t>(d)] = key[static_cast<std::size_t>(k++)];
      for (std::int64_t v = start; v < start + l.count; ++v) {
        c[static_cast<std::size_t>(missing)] = v;
        out.push_back({c[2], c[1], c[0], c[0]});
      }
    }
  }
  return GridSet::from_runs(n, a.spacing(), std::move(out));
}

namespace {

AnySet transform_set(const AnySet& a, const Isometry& iso) {
  if (const auto* p = std::get_if<FinitePointSet>(&a)) return transformed(*p, iso);
  if (const auto* g = std::get_if<GridSet>(&a)) return transformed(*g, iso);
  if (const auto* poly = std::get_if<ConvexPolygon>(&a)) {
    ConvexPolygon t = transformed(*poly, Eigen::Matrix2d(iso.linear));
    return translated(t, Eigen::Vector2d(iso.offset[0], iso.offset[1]));
  }
  const IntervalUnion& i = std::get<IntervalUnion>(a);
  double lin = iso.linear(0, 0);
  if (std::abs(std::abs(lin) - 1.0) > 1e-12)
    throw std::invalid_argument("interval isometries are +-x plus translation");
  IntervalUnion t = lin > 0 ? i : negated(i);
  return translated(t, Dyadic::from_double(iso.offset[0]));
}

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

}  // namespace

AnySet isometry_mean(const AnySet& a, const std::vector<Isometry>& isometries) {
  if (isometries.empty()) throw std::invalid_argument("isometry mean needs at least one map");
  int n = dim_of(a);
  for (const auto& iso : isometries)
    if (iso.dim() != n) throw std::invalid_argument("isometry dimension mismatch");
  AnySet acc = transform_set(a, isometries[0]);
  for (std::size_t j = 1; j < isometries.size(); ++j)
    acc = minkowski_sum(acc, transform_set(a, isometries[j]));
  std::size_t m = isometries.size();
  if (m == 1) return acc;
  if (std::holds_alternative<GridSet>(acc) || std::holds_alternative<IntervalUnion>(acc)) {
    if (!is_pow2(m))
      throw std::invalid_argument("exact representations need a power-of-two mean");
  }
  if (is_pow2(m)) {
    int k = 0;
    while ((static_cast<std::size_t>(1) << k) < m) ++k;
    return scale(acc, Scalar(Dyadic::from_parts(1, -k)));
  }
  return scale(acc, Scalar::real(1.0 / static_cast<double>(m)));
}

AnySet blaschke_rotation_mean(const AnySet& a, int n_rotations) {
  if (n_rotations < 1) throw std::invalid_argument("rotation count must be positive");
  if (dim_of(a) != 2) throw std::invalid_argument("rotation means are 2-D");
  std::vector<Isometry> rots;
  rots.reserve(static_cast<std::size_t>(n_rotations));
  for (int k = 0; k < n_rotations; ++k)
    rots.push_back(Isometry::rotation(2.0 * M_PI * k / n_rotations));
  return isometry_mean(a, rots);
}

}  // namespace symlab
