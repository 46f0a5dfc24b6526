#pragma once

#include "symlab/sets/any_set.hpp"

namespace symlab {

/// Half the sum of a set with its reflection: the averaged reflection
/// symmetral. Point sets are re-snapped to their lattice pitch afterwards
/// (exact while the iterate stays on the lattice); grids halve their spacing,
/// keeping cells exact; interval unions accept only the origin subspace.
FinitePointSet minkowski_symmetrize(const FinitePointSet& a, const Subspace& h);
IntervalUnion minkowski_symmetrize(const IntervalUnion& a, const Subspace& h);
GridSet minkowski_symmetrize(const GridSet& a, const Subspace& h);
ConvexPolygon minkowski_symmetrize(const ConvexPolygon& a, const Subspace& h);
AnySet minkowski_symmetrize(const AnySet& a, const Subspace& h);

/// Reflection through the origin: (A + (-A)) / 2.
AnySet central_symmetrize(const AnySet& a);
IntervalUnion central_symmetrize(const IntervalUnion& a);

/// Per-fiber averaged point reflection about the base subspace: cells are
/// grouped by their coordinates along `h` and each slab section is centrally
/// symmetrized within the orthogonal fiber. Spacing halves once globally.
GridSet fiber_symmetrize(const GridSet& a, const Subspace& h);

/// Volume-exact rearrangement: every line section orthogonal to `h` becomes a
/// centered run of equal cell count. Ties bias toward the lower index.
GridSet steiner_symmetrize_grid(const GridSet& a, const Subspace& h);

/// (1/m) * (A_1 A + ... + A_m A). Exactness requires representations that
/// support the isometries; non-power-of-two m falls back to binary64 scaling.
AnySet isometry_mean(const AnySet& a, const std::vector<Isometry>& isometries);

/// (1/N) * sum of the N-fold uniform rotation copies about the origin.
AnySet blaschke_rotation_mean(const AnySet& a, int n_rotations);

}  // namespace symlab
