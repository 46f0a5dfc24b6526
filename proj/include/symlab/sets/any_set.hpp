#pragma once

#include <string>
#include <variant>

#include "symlab/sets/hausdorff.hpp"

namespace symlab {

using AnySet = std::variant<FinitePointSet, IntervalUnion, GridSet, ConvexPolygon>;

inline int dim_of(const AnySet& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) return 1;
        else if constexpr (std::is_same_v<T, ConvexPolygon>) return 2;
        else return v.dim();
      },
      s);
}

inline std::string rep_name(const AnySet& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) return "pointset";
        else if constexpr (std::is_same_v<T, IntervalUnion>) return "intervals";
        else if constexpr (std::is_same_v<T, GridSet>) return "grid";
        else return "polygon";
      },
      s);
}

AnySet minkowski_sum(const AnySet& a, const AnySet& b);
AnySet scale(const AnySet& a, const Scalar& t);
AnySet translate(const AnySet& a, const Vector& v);
AnySet reflect_set(const AnySet& a, const Subspace& h);
AnySet convex_hull_of(const AnySet& a);

Scalar volume(const AnySet& a);
double diameter(const AnySet& a);
double support_function(const AnySet& a, const Vector& direction);
double mean_width_2d(const AnySet& a);

ApproxDistance hausdorff_distance(const AnySet& a, const AnySet& b);

/// 2-D hull as a polygon regardless of representation.
ConvexPolygon hull_polygon(const AnySet& a);

}  // namespace symlab
