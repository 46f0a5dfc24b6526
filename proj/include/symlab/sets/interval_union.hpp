#pragma once

#include <cstddef>
#include <vector>

#include "symlab/core/dyadic.hpp"

namespace symlab {

/// Nonempty compact subset of R stored as maximal disjoint closed intervals
/// with exact dyadic endpoints, sorted increasingly. Singletons are degenerate
/// intervals. All operations are exact.
class IntervalUnion {
 public:
  struct Interval {
    Dyadic lo;
    Dyadic hi;

    Dyadic length() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  explicit IntervalUnion(std::vector<Interval> intervals);
  static IntervalUnion point(Dyadic x) { return IntervalUnion({{x, x}}); }
  static IntervalUnion segment(Dyadic lo, Dyadic hi) { return IntervalUnion({{lo, hi}}); }

  const std::vector<Interval>& intervals() const { return parts_; }
  std::size_t piece_count() const { return parts_.size(); }

  Dyadic min() const { return parts_.front().lo; }
  Dyadic max() const { return parts_.back().hi; }

  bool contains(const Dyadic& x) const;
  bool is_single_interval() const { return parts_.size() == 1; }
  bool all_singletons() const;

  /// Total measure, exact.
  Dyadic total_length() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion negated(const IntervalUnion& a);
IntervalUnion halved(const IntervalUnion& a);
IntervalUnion scaled(const IntervalUnion& a, const Dyadic& t);  // t >= 0
IntervalUnion translated(const IntervalUnion& a, const Dyadic& v);
IntervalUnion convex_hull(const IntervalUnion& a);

/// Exact Hausdorff distance between interval unions.
Dyadic hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b);

double diameter(const IntervalUnion& a);

/// Largest distance from a point of the real line to the set, exact.
Dyadic distance_to(const IntervalUnion& a, const Dyadic& x);

}  // namespace symlab
