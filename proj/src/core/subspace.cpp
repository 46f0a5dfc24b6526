#include "symlab/core/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace symlab {

Subspace Subspace::origin(int ambient_dim) {
  if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_.resize(ambient_dim, 0);
  s.axis_aligned_ = true;
  s.keep_.assign(static_cast<size_t>(ambient_dim), false);
  s.label_ = "o";
  return s;
}

Subspace Subspace::coordinate(int ambient_dim, std::vector<int> axes) {
  std::sort(axes.begin(), axes.end());
  if (std::adjacent_find(axes.begin(), axes.end()) != axes.end())
    throw std::invalid_argument("duplicate axis");
  if (!axes.empty() && (axes.front() < 0 || axes.back() >= ambient_dim))
    throw std::invalid_argument("axis out of range");
  if (static_cast<int>(axes.size()) >= ambient_dim)
    throw std::invalid_argument("subspace dimension must be below ambient");
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Eigen::MatrixXd::Zero(ambient_dim, static_cast<int>(axes.size()));
  s.axis_aligned_ = true;
  s.keep_.assign(static_cast<size_t>(ambient_dim), false);
  static const char* names = "xyz";
  for (size_t k = 0; k < axes.size(); ++k) {
    s.basis_(axes[k], static_cast<int>(k)) = 1.0;
    s.keep_[static_cast<size_t>(axes[k])] = true;
    s.label_ += axes[k] < 3 ? std::string(1, names[axes[k]]) : std::to_string(axes[k]);
  }
  if (s.label_.empty()) s.label_ = "o";
  return s;
}

Subspace Subspace::line_2d(double angle) {
  Subspace s;
  s.ambient_ = 2;
  s.basis_.resize(2, 1);
  s.basis_ << std::cos(angle), std::sin(angle);
  s.keep_.assign(2, false);
  // Snap exact axis directions so dyadic inputs stay exact.
  const double eps = 1e-15;
  if (std::abs(s.basis_(1, 0)) < eps) return coordinate(2, {0});
  if (std::abs(s.basis_(0, 0)) < eps) return coordinate(2, {1});
  s.axis_aligned_ = false;
  s.label_ = "angle:" + std::to_string(angle * 180.0 / M_PI);
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vector>& vectors, double tol) {
  if (static_cast<int>(vectors.size()) >= ambient_dim)
    throw std::invalid_argument("subspace dimension must be below ambient");
  std::vector<Vector> basis;
  for (const Vector& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("vector dimension mismatch");
    Vector u = v;
    for (const Vector& b : basis) u -= b.dot(u) * b;
    double nrm = u.norm();
    if (nrm <= tol) throw std::invalid_argument("spanning vectors are linearly dependent");
    basis.push_back(u / nrm);
  }
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_.resize(ambient_dim, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) s.basis_.col(static_cast<int>(k)) = basis[k];

  // Detect an axis-aligned frame and snap it exact.
  std::vector<int> axes;
  bool aligned = true;
  for (int c = 0; c < s.basis_.cols() && aligned; ++c) {
    int hit = -1;
    for (int r = 0; r < ambient_dim; ++r) {
      double a = std::abs(s.basis_(r, c));
      if (a > 1.0 - 1e-12) hit = r;
      else if (a > 1e-12) { hit = -1; break; }
    }
    if (hit < 0) aligned = false;
    else axes.push_back(hit);
  }
  if (aligned) return coordinate(ambient_dim, axes);
  s.axis_aligned_ = false;
  s.keep_.assign(static_cast<size_t>(ambient_dim), false);
  s.label_ = "span" + std::to_string(basis.size());
  return s;
}

Isometry Isometry::reflection(const Subspace& h) {
  int n = h.ambient_dim();
  Eigen::MatrixXd q;
  if (h.axis_aligned()) {
    q = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) q(j, j) = h.keeps_axis(j) ? 1.0 : -1.0;
  } else {
    q = 2.0 * h.basis() * h.basis().transpose() - Eigen::MatrixXd::Identity(n, n);
  }
  return {q, Vector::Zero(n)};
}

bool Isometry::is_signed_permutation(double tol) const {
  int n = dim();
  for (int c = 0; c < n; ++c) {
    int hits = 0;
    for (int r = 0; r < n; ++r) {
      double a = std::abs(linear(r, c));
      if (std::abs(a - 1.0) <= tol) ++hits;
      else if (a > tol) return false;
    }
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace symlab
