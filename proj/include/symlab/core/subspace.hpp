#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "symlab/core/scalar.hpp"

namespace symlab {

using Vector = Eigen::VectorXd;

/// Linear subspace of R^n given by an orthonormal basis, used as the mirror
/// of reflections. dim 0 encodes the origin (point reflection). Axis-aligned
/// subspaces keep an exact coordinate mask so reflections of dyadic data are
/// bit-exact.
class Subspace {
 public:
  static Subspace origin(int ambient_dim);
  /// Span of the given coordinate axes (0-based).
  static Subspace coordinate(int ambient_dim, std::vector<int> axes);
  static Subspace x_axis(int ambient_dim = 2) { return coordinate(ambient_dim, {0}); }
  static Subspace y_axis(int ambient_dim = 2) { return coordinate(ambient_dim, {1}); }
  static Subspace z_axis() { return coordinate(3, {2}); }
  /// Line through the origin in R^2 at the given angle (radians).
  static Subspace line_2d(double angle);
  /// Orthonormalized span of arbitrary vectors (binary64 path).
  static Subspace span(int ambient_dim, const std::vector<Vector>& vectors,
                       double tol = kDefaultTolerance);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  bool axis_aligned() const { return axis_aligned_; }
  /// Axis-aligned only: whether coordinate axis j lies in the subspace.
  bool keeps_axis(int j) const { return keep_.at(static_cast<size_t>(j)); }

  std::string label() const { return label_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.cols() == b.basis_.cols() &&
           ((a.basis_ - b.basis_).size() == 0 ||
            (a.basis_ - b.basis_).cwiseAbs().maxCoeff() == 0.0);
  }

 private:
  Subspace() = default;

  int ambient_ = 0;
  Eigen::MatrixXd basis_;   // ambient x dim, orthonormal columns
  bool axis_aligned_ = false;
  std::vector<bool> keep_;  // axis membership mask when axis_aligned_
  std::string label_;
};

inline void check_dim(const Subspace& h, Eigen::Index n) {
  if (h.ambient_dim() != n) throw std::invalid_argument("subspace/vector dimension mismatch");
}

/// Orthogonal projection x|H. Exact (coordinate masking) for axis-aligned H.
template <typename D>
Vector project(const Eigen::MatrixBase<D>& x, const Subspace& h) {
  check_dim(h, x.size());
  if (h.axis_aligned()) {
    Vector p = x;
    for (int j = 0; j < x.size(); ++j)
      if (!h.keeps_axis(j)) p[j] = 0.0;
    return p;
  }
  return h.basis() * (h.basis().transpose() * x);
}

/// Reflection 2(x|H) - x. Exact sign flips for axis-aligned H.
template <typename D>
Vector reflect(const Eigen::MatrixBase<D>& x, const Subspace& h) {
  check_dim(h, x.size());
  if (h.axis_aligned()) {
    Vector r = x;
    for (int j = 0; j < x.size(); ++j)
      if (!h.keeps_axis(j)) r[j] = -r[j];
    return r;
  }
  Vector p = h.basis() * (h.basis().transpose() * x);
  return 2.0 * p - x;
}

inline Eigen::Matrix2d rotation_2d(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

/// Affine isometry x -> Qx + t with orthogonal Q.
struct Isometry {
  Eigen::MatrixXd linear;
  Vector offset;

  static Isometry identity(int n) {
    return {Eigen::MatrixXd::Identity(n, n), Vector::Zero(n)};
  }
  static Isometry reflection(const Subspace& h);
  static Isometry rotation(double theta) {
    return {rotation_2d(theta), Vector::Zero(2)};
  }
  static Isometry translation(const Vector& v) {
    return {Eigen::MatrixXd::Identity(v.size(), v.size()), v};
  }

  int dim() const { return static_cast<int>(linear.rows()); }

  Vector apply(const Vector& x) const { return linear * x + offset; }

  /// this ∘ other
  Isometry compose(const Isometry& other) const {
    return {linear * other.linear, linear * other.offset + offset};
  }

  /// Linear part maps cells to cells on any dyadic grid.
  bool is_signed_permutation(double tol = kDefaultTolerance) const;
};

}  // namespace symlab
