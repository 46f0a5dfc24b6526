#include "symlab/sequences/idempotency.hpp"

#include <cmath>
#include <stdexcept>

#include "symlab/symmetrize/symmetrize.hpp"

namespace symlab {

namespace {

constexpr std::size_t kPieceGuard = 20'000;

struct EndpointRuns {
  Dyadic left;   // length of the interval anchored at min
  Dyadic right;  // length of the interval anchored at max
};

EndpointRuns endpoint_runs(const IntervalUnion& k) {
  return {k.intervals().front().length(), k.intervals().back().length()};
}

int log_bound_from(const Dyadic& half_width, const Dyadic& eps) {
  double ratio = 4.0 * half_width.to_double() / eps.to_double() - 1.0;
  if (!(ratio > 1.0)) return 1;
  return static_cast<int>(std::ceil(std::log2(ratio))) + 1;
}

IdempotencyWitness make_witness(const IntervalUnion& k, bool both_ends_needed) {
  IdempotencyWitness w;
  Dyadic half = (k.max() - k.min()).halved();
  EndpointRuns runs = endpoint_runs(k);
  // One symmetrization (or centering) leaves a symmetric pair of endpoint
  // runs: the inner radius is half_width minus half the absorbed run mass.
  Dyadic inner;
  bool ok;
  if (both_ends_needed) {
    Dyadic r = min(runs.left, runs.right);
    ok = r.sign() > 0;
    inner = half - r;
  } else {
    ok = runs.left.sign() > 0 || runs.right.sign() > 0;
    inner = half - (runs.left + runs.right).halved();
  }
  if (inner.sign() < 0) inner = Dyadic(0);
  Dyadic eps = (half - inner).doubled();
  w.hypothesis_holds = ok;
  w.half_width = Scalar(half);
  w.inner_radius = Scalar(inner);
  w.endpoint_run = Scalar(eps);
  if (ok && half.sign() > 0 && eps.sign() > 0) w.log_bound = log_bound_from(half, eps);
  return w;
}

}  // namespace

IdempotencyWitness idempotency_index_1d(const IntervalUnion& k, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  IdempotencyWitness w = make_witness(k, /*both_ends_needed=*/false);

  // Fixed points of the origin symmetrization are symmetric segments.
  if (k.is_single_interval() && k.min() == -k.max()) {
    w.index = 0;
    w.certified = true;
    return w;
  }
  // Finite sets stay finite under Minkowski sums while the envelope has
  // positive length, so pure singleton data can never stabilize.
  if (k.all_singletons() && k.piece_count() >= 2) {
    w.index = cap;
    w.certified = false;
    return w;
  }

  Dyadic half = (k.max() - k.min()).halved();
  IntervalUnion target = IntervalUnion::segment(-half, half);
  IntervalUnion s = k;
  for (int j = 1; j <= cap; ++j) {
    if (s.piece_count() * s.piece_count() > kPieceGuard * kPieceGuard) break;
    s = central_symmetrize(s);
    if (s == target) {
      w.index = j;
      w.certified = true;
      return w;
    }
  }
  w.index = cap;
  w.certified = false;
  return w;
}

IdempotencyWitness mean_index_1d(const IntervalUnion& k, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  IdempotencyWitness w = make_witness(k, /*both_ends_needed=*/true);

  if (k.is_single_interval()) {
    w.index = 0;
    w.certified = true;
    return w;
  }
  if (k.all_singletons() && k.piece_count() >= 2) {
    w.index = cap;
    w.certified = false;
    return w;
  }

  IntervalUnion target = convex_hull(k);
  IntervalUnion s = k;
  for (int j = 1; j <= cap; ++j) {
    if (s.piece_count() * s.piece_count() > kPieceGuard * kPieceGuard) break;
    s = halved(minkowski_sum(s, s));  // doubles the summand count
    if (s == target) {
      w.index = j;
      w.certified = true;
      return w;
    }
  }
  w.index = cap;
  w.certified = false;
  return w;
}

}  // namespace symlab
