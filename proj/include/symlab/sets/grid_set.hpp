#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "symlab/core/dyadic.hpp"
#include "symlab/core/subspace.hpp"
#include "symlab/sets/convex_polygon.hpp"
#include "symlab/sets/finite_point_set.hpp"

namespace symlab {

using Cell = std::array<std::int64_t, 3>;  // (x, y, z); unused axes are 0

/// Occupancy set on a dyadic lattice in R^1..R^3. The realized compact set is
/// the union of closed cubes of side `spacing` at the stored cells. Cells are
/// run-length encoded along x, sorted by (z, y, x0), disjoint and maximal,
/// which keeps refined symmetrization iterates compact. All set operations
/// are exact.
class GridSet {
 public:
  struct Run {
    std::int64_t z = 0;
    std::int64_t y = 0;
    std::int64_t x0 = 0;
    std::int64_t x1 = 0;  // inclusive

    std::int64_t length() const { return x1 - x0 + 1; }
    friend bool operator==(const Run&, const Run&) = default;
    friend auto operator<=>(const Run&, const Run&) = default;
  };

  static GridSet from_cells(int dim, const Dyadic& spacing, const std::vector<Cell>& cells);
  static GridSet from_runs(int dim, const Dyadic& spacing, std::vector<Run> runs);
  /// Solid box of cells, corners inclusive.
  static GridSet box(int dim, const Dyadic& spacing, const Cell& lo, const Cell& hi);

  int dim() const { return dim_; }
  const Dyadic& spacing() const { return h_; }
  const std::vector<Run>& runs() const { return runs_; }

  std::uint64_t cell_count() const;
  bool contains_cell(const Cell& c) const;
  Cell min_corner() const;
  Cell max_corner() const;  // inclusive cell coordinates

  void for_each_cell(const std::function<void(const Cell&)>& fn) const;
  std::vector<Cell> cells(std::size_t guard = 4'000'000) const;

  /// Cube corner points of run boundaries (deduped), spanning the realized set.
  std::vector<Vector> corner_points() const;

  friend bool operator==(const GridSet& a, const GridSet& b) {
    return a.dim_ == b.dim_ && a.h_ == b.h_ && a.runs_ == b.runs_;
  }

 private:
  GridSet() = default;
  int dim_ = 1;
  Dyadic h_ = Dyadic(1);
  std::vector<Run> runs_;
};

/// Exact realized Minkowski sum at the common spacing: cell sums dilated by
/// the {0,1}^n offsets (a sum of two side-h cubes is a side-2h cube).
GridSet minkowski_sum(const GridSet& a, const GridSet& b);

GridSet reflected(const GridSet& a, const Subspace& h);  // axis-aligned h only
GridSet translated_cells(const GridSet& a, const Cell& offset);
/// Isometries whose linear part is a signed permutation and whose offset is a
/// whole number of cells map cubes to cubes exactly.
GridSet transformed(const GridSet& a, const Isometry& iso);

/// Same cells at half spacing: the exact realization of scaling by 1/2.
GridSet with_spacing_halved(const GridSet& a);
/// Same realized set re-expressed on the half-spacing lattice (cells split).
GridSet refined(const GridSet& a);
/// Scale by 2^k (spacing change only).
GridSet scaled_pow2(const GridSet& a, int k);

/// Re-expresses both sets on their common finer lattice.
std::pair<GridSet, GridSet> align_spacing(const GridSet& a, const GridSet& b);

Dyadic volume(const GridSet& a);
double diameter(const GridSet& a);

bool subset(const GridSet& a, const GridSet& b);  // same spacing required
GridSet union_of(const GridSet& a, const GridSet& b);
GridSet dilated_chebyshev(const GridSet& a, std::int64_t r);
/// Cell-set equality up to an r-cell Chebyshev collar.
bool collar_equal(const GridSet& a, const GridSet& b, std::int64_t r = 1);

struct ApproxDistance {
  double value = 0.0;
  double error = 0.0;  // one-sided bound on |value - true distance|
};

/// Hausdorff distance between realized sets, sampled at cell resolution.
ApproxDistance hausdorff_distance(const GridSet& a, const GridSet& b,
                                  std::size_t sample_budget = 2'000'000);

GridSet to_grid(const FinitePointSet& a, const Dyadic& spacing);
GridSet to_grid(const ConvexPolygon& a, const Dyadic& spacing);

}  // namespace symlab
