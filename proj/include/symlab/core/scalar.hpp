#pragma once

#include <cmath>
#include <variant>

#include "symlab/core/dyadic.hpp"

namespace symlab {

inline constexpr double kDefaultTolerance = 1e-9;

/// Scalar value tagged by representation: exact dyadic or binary64.
/// Arithmetic stays exact while both operands are dyadic and the operation
/// is closed over dyadics; otherwise the result degrades to binary64.
class Scalar {
 public:
  Scalar() : v_(Dyadic()) {}
  Scalar(Dyadic d) : v_(d) {}
  Scalar(double x) : v_(x) {}
  Scalar(int x) : v_(Dyadic(x)) {}

  static Scalar real(double x) { return Scalar(x); }

  bool is_dyadic() const { return std::holds_alternative<Dyadic>(v_); }
  const Dyadic& dyadic() const { return std::get<Dyadic>(v_); }

  double value() const {
    return is_dyadic() ? std::get<Dyadic>(v_).to_double() : std::get<double>(v_);
  }

  Scalar operator-() const {
    return is_dyadic() ? Scalar(-dyadic()) : Scalar(-value());
  }
  Scalar halved() const {
    return is_dyadic() ? Scalar(dyadic().halved()) : Scalar(value() / 2.0);
  }
  Scalar abs() const {
    return is_dyadic() ? Scalar(dyadic().abs()) : Scalar(std::abs(value()));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_dyadic() && b.is_dyadic()) return Scalar(a.dyadic() + b.dyadic());
    return Scalar(a.value() + b.value());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_dyadic() && b.is_dyadic()) return Scalar(a.dyadic() * b.dyadic());
    return Scalar(a.value() * b.value());
  }

  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_dyadic() && b.is_dyadic()) return a.dyadic() < b.dyadic();
    return a.value() < b.value();
  }

 private:
  std::variant<Dyadic, double> v_;
};

/// Exact when both sides are dyadic; tolerance-based otherwise.
inline bool approx_equal(const Scalar& a, const Scalar& b,
                         double tol = kDefaultTolerance) {
  if (a.is_dyadic() && b.is_dyadic()) return a.dyadic() == b.dyadic();
  return std::abs(a.value() - b.value()) <= tol;
}

inline bool approx_equal(double a, double b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol;
}

}  // namespace symlab
