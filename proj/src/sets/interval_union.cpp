#include "symlab/sets/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace symlab {

namespace {

std::vector<IntervalUnion::Interval> merged(std::vector<IntervalUnion::Interval> parts) {
  if (parts.empty()) throw std::invalid_argument("interval union must be nonempty");
  for (const auto& p : parts)
    if (p.hi < p.lo) throw std::invalid_argument("interval with hi < lo");
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });
  std::vector<IntervalUnion::Interval> out;
  out.push_back(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    // Touching intervals merge: the representation keeps hi_j < lo_{j+1} strict.
    if (parts[i].lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, parts[i].hi);
    } else {
      out.push_back(parts[i]);
    }
  }
  return out;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> intervals)
    : parts_(merged(std::move(intervals))) {}

bool IntervalUnion::contains(const Dyadic& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Dyadic& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return !(it->hi < x);
}

bool IntervalUnion::all_singletons() const {
  for (const auto& p : parts_)
    if (!p.is_point()) return false;
  return true;
}

Dyadic IntervalUnion::total_length() const {
  Dyadic sum;
  for (const auto& p : parts_) sum += p.length();
  return sum;
}

IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.piece_count() * b.piece_count());
  for (const auto& p : a.intervals())
    for (const auto& q : b.intervals())
      parts.push_back({p.lo + q.lo, p.hi + q.hi});
  return IntervalUnion(std::move(parts));
}

IntervalUnion negated(const IntervalUnion& a) {
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.piece_count());
  for (const auto& p : a.intervals()) parts.push_back({-p.hi, -p.lo});
  return IntervalUnion(std::move(parts));
}

IntervalUnion halved(const IntervalUnion& a) {
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.piece_count());
  for (const auto& p : a.intervals()) parts.push_back({p.lo.halved(), p.hi.halved()});
  return IntervalUnion(std::move(parts));
}

IntervalUnion scaled(const IntervalUnion& a, const Dyadic& t) {
  if (t.sign() < 0) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.piece_count());
  for (const auto& p : a.intervals()) parts.push_back({p.lo * t, p.hi * t});
  return IntervalUnion(std::move(parts));
}

IntervalUnion translated(const IntervalUnion& a, const Dyadic& v) {
  std::vector<IntervalUnion::Interval> parts;
  parts.reserve(a.piece_count());
  for (const auto& p : a.intervals()) parts.push_back({p.lo + v, p.hi + v});
  return IntervalUnion(std::move(parts));
}

IntervalUnion convex_hull(const IntervalUnion& a) {
  return IntervalUnion::segment(a.min(), a.max());
}

Dyadic distance_to(const IntervalUnion& a, const Dyadic& x) {
  if (a.contains(x)) return Dyadic();
  const auto& parts = a.intervals();
  auto it = std::upper_bound(parts.begin(), parts.end(), x,
                             [](const Dyadic& v, const auto& p) { return v < p.lo; });
  Dyadic best;
  bool has = false;
  if (it != parts.end()) {
    best = it->lo - x;
    has = true;
  }
  if (it != parts.begin()) {
    Dyadic d = x - std::prev(it)->hi;
    if (!has || d < best) best = d;
  }
  return best;
}

namespace {

// sup over points of b of the distance to a; the supremum is attained at an
// endpoint of b or at a gap midpoint of a lying inside b.
Dyadic excess(const IntervalUnion& a, const IntervalUnion& b) {
  Dyadic e;
  for (const auto& p : b.intervals()) {
    e = max(e, distance_to(a, p.lo));
    e = max(e, distance_to(a, p.hi));
  }
  const auto& parts = a.intervals();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    Dyadic mid = (parts[i].hi + parts[i + 1].lo).halved();
    if (b.contains(mid)) e = max(e, distance_to(a, mid));
  }
  return e;
}

}  // namespace

Dyadic hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b) {
  return max(excess(a, b), excess(b, a));
}

double diameter(const IntervalUnion& a) { return (a.max() - a.min()).to_double(); }

}  // namespace symlab
