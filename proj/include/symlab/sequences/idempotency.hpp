#pragma once

#include "symlab/core/scalar.hpp"
#include "symlab/sets/interval_union.hpp"

namespace symlab {

/// Outcome of iterating a 1-D symmetrization until it reaches the convex
/// envelope. half_width is half the envelope length; endpoint_run is the
/// longest interval of the set anchored at an extreme point; inner_radius is
/// half_width - endpoint_run / 2. `index` counts applications; certification
/// means the iterate reached the envelope exactly. When the endpoint-run
/// hypothesis holds, log_bound carries ceil(log2(4M/eps - 1)) + 1.
struct IdempotencyWitness {
  Scalar half_width;
  Scalar inner_radius;
  Scalar endpoint_run;
  int index = 0;
  bool certified = false;
  bool hypothesis_holds = false;
  int log_bound = -1;
};

/// Iterated point reflection through the origin, exact on dyadic intervals.
IdempotencyWitness idempotency_index_1d(const IntervalUnion& k, int cap);

/// Iterated halving means (no reflection); the hypothesis needs intervals at
/// both extremes. `index` counts doublings of the summand count.
IdempotencyWitness mean_index_1d(const IntervalUnion& k, int cap);

}  // namespace symlab
