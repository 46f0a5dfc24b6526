#pragma once

#include <Eigen/Dense>
#include <vector>

#include "symlab/core/subspace.hpp"

namespace symlab {

/// Finite compact set in R^n (n in {1,2,3}), points stored as matrix columns
/// in canonical lexicographic order. Carries the lattice pitch delta used to
/// prune Minkowski sums; pitches are powers of two so dyadic inputs snap to
/// themselves and iterated averaging stays bit-exact until it outruns the
/// lattice.
class FinitePointSet {
 public:
  /// snap < 0 picks the default pitch: largest power of two at or below
  /// 1e-6 * diameter (0, i.e. no pruning, for singletons). snap == 0 disables
  /// pruning.
  static FinitePointSet from_points(int dim, const std::vector<Vector>& points,
                                    double snap = -1.0);
  static FinitePointSet from_matrix(Eigen::MatrixXd points, double snap);

  int dim() const { return static_cast<int>(pts_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(pts_.cols()); }
  const Eigen::MatrixXd& points() const { return pts_; }
  Vector point(std::size_t i) const { return pts_.col(static_cast<Eigen::Index>(i)); }
  double snap_resolution() const { return snap_; }
  FinitePointSet with_snap(double snap) const;

  bool contains(const Vector& x, double tol = 0.0) const;

  /// Exact coordinate equality of the canonical forms.
  friend bool operator==(const FinitePointSet& a, const FinitePointSet& b) {
    return a.pts_.rows() == b.pts_.rows() && a.pts_.cols() == b.pts_.cols() &&
           a.pts_ == b.pts_;
  }

 private:
  FinitePointSet() = default;
  Eigen::MatrixXd pts_;
  double snap_ = 0.0;
};

/// Pairwise sums, snapped to the coarser operand lattice and deduped.
/// Throws when the pair enumeration would exceed the work guard.
FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b);

/// Number of pairwise sums minkowski_sum would enumerate.
std::size_t minkowski_sum_cost(const FinitePointSet& a, const FinitePointSet& b);

FinitePointSet translated(const FinitePointSet& a, const Vector& v);
/// Rounds every coordinate to the given lattice pitch (no-op for pitch <= 0).
FinitePointSet resnapped(const FinitePointSet& a, double pitch);
FinitePointSet scaled(const FinitePointSet& a, double t);  // t >= 0
FinitePointSet reflected(const FinitePointSet& a, const Subspace& h);
FinitePointSet transformed(const FinitePointSet& a, const Isometry& iso);

double diameter(const FinitePointSet& a);
double support(const FinitePointSet& a, const Vector& direction);

/// Exact discrete Hausdorff distance.
double hausdorff_distance(const FinitePointSet& a, const FinitePointSet& b);

}  // namespace symlab
