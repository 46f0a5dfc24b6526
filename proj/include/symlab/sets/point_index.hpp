#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <limits>
#include <unordered_map>
#include <vector>

namespace symlab {

/// Uniform-bucket nearest-neighbor index over low-dimensional points
/// (dim 1..3). Queries expand bucket rings until the ring bound exceeds the
/// best distance found, so results are exact.
class PointIndex {
 public:
  explicit PointIndex(Eigen::MatrixXd points) : pts_(std::move(points)) {
    const auto n = pts_.cols();
    Eigen::VectorXd lo = pts_.rowwise().minCoeff();
    Eigen::VectorXd hi = pts_.rowwise().maxCoeff();
    origin_ = lo;
    double extent = (hi - lo).maxCoeff();
    double per_axis = std::pow(static_cast<double>(n), 1.0 / pts_.rows());
    cell_ = extent > 0.0 ? std::max(extent / std::max(per_axis, 1.0), 1e-300) : 1.0;
    buckets_.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) buckets_[key_of(pts_.col(i))].push_back(i);
  }

  /// Distance from q to the closest indexed point. When early_stop is given,
  /// the search may return any candidate distance <= early_stop (an upper
  /// bound on the minimum), which is all a running-maximum caller needs.
  double min_distance(const Eigen::VectorXd& q, double early_stop = -1.0) const {
    std::array<std::int64_t, 3> c = cell_of(q);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t ring = 0;; ++ring) {
      if (best < static_cast<double>(ring - 1) * cell_) break;
      if (early_stop >= 0.0 && best <= early_stop) break;
      if (!scan_ring(q, c, ring, best) && ring > max_ring_) break;
    }
    return best;
  }

 private:
  std::array<std::int64_t, 3> cell_of(const Eigen::VectorXd& p) const {
    std::array<std::int64_t, 3> c{0, 0, 0};
    for (Eigen::Index d = 0; d < pts_.rows(); ++d)
      c[static_cast<std::size_t>(d)] =
          static_cast<std::int64_t>(std::floor((p[d] - origin_[d]) / cell_));
    return c;
  }

  std::uint64_t key_of(const Eigen::VectorXd& p) const {
    auto c = cell_of(p);
    return key(c);
  }

  static std::uint64_t key(const std::array<std::int64_t, 3>& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }

  // Scans the cells at Chebyshev distance `ring` from c; returns whether any
  // indexed cell was seen.
  bool scan_ring(const Eigen::VectorXd& q, const std::array<std::int64_t, 3>& c,
                 std::int64_t ring, double& best) const {
    bool seen = false;
    int dims = static_cast<int>(pts_.rows());
    std::int64_t r = ring;
    auto visit = [&](std::int64_t dx, std::int64_t dy, std::int64_t dz) {
      std::array<std::int64_t, 3> cc{c[0] + dx, c[1] + dy, c[2] + dz};
      auto it = buckets_.find(key(cc));
      if (it == buckets_.end()) return;
      seen = true;
      for (Eigen::Index idx : it->second)
        best = std::min(best, (pts_.col(idx) - q).norm());
    };
    if (dims == 1) {
      if (r == 0) visit(0, 0, 0);
      else { visit(r, 0, 0); visit(-r, 0, 0); }
      return seen;
    }
    std::int64_t zlo = dims == 3 ? -r : 0, zhi = dims == 3 ? r : 0;
    for (std::int64_t dz = zlo; dz <= zhi; ++dz)
      for (std::int64_t dy = -r; dy <= r; ++dy)
        for (std::int64_t dx = -r; dx <= r; ++dx) {
          std::int64_t cheb = std::max({std::llabs(dx), std::llabs(dy), std::llabs(dz)});
          if (cheb != r) continue;
          visit(dx, dy, dz);
        }
    return seen;
  }

  Eigen::MatrixXd pts_;
  Eigen::VectorXd origin_;
  double cell_ = 1.0;
  std::int64_t max_ring_ = 1 << 24;
  std::unordered_map<std::uint64_t, std::vector<Eigen::Index>> buckets_;
};

}  // namespace symlab
