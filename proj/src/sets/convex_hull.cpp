#include "symlab/sets/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace symlab {

namespace {

using Eigen::Vector3d;

struct Face {
  int a, b, c;
  Vector3d n;  // unit outward
  double d;
  bool alive = true;
  std::vector<int> conflicts;
};

Vector3d unit_normal(const Vector3d& p, const Vector3d& q, const Vector3d& r) {
  Vector3d n = (q - p).cross(r - p);
  double len = n.norm();
  return len > 0.0 ? Vector3d(n / len) : Vector3d::Zero();
}

}  // namespace

Hull3d hull_3d(const std::vector<Vector>& input) {
  std::vector<Vector3d> pts;
  pts.reserve(input.size());
  for (const auto& p : input) {
    if (p.size() != 3) throw std::invalid_argument("hull_3d needs 3-D points");
    pts.emplace_back(p[0], p[1], p[2]);
  }
  std::sort(pts.begin(), pts.end(), [](const Vector3d& a, const Vector3d& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Hull3d out;
  if (pts.size() < 4) {
    for (const auto& p : pts) out.vertices.push_back(Vector(p));
    return out;
  }

  Vector3d lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) { lo = lo.cwiseMin(p); hi = hi.cwiseMax(p); }
  double scale = (hi - lo).norm();
  double eps = std::max(1e-12 * scale, 1e-300);

  // Initial simplex: extreme pair, then farthest from line, then from plane.
  int i0 = 0, i1 = 0;
  double best = -1.0;
  for (int axis = 0; axis < 3; ++axis) {
    int lo_i = 0, hi_i = 0;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i][axis] < pts[lo_i][axis]) lo_i = i;
      if (pts[i][axis] > pts[hi_i][axis]) hi_i = i;
    }
    double d = (pts[hi_i] - pts[lo_i]).norm();
    if (d > best) { best = d; i0 = lo_i; i1 = hi_i; }
  }
  if (best <= eps) return out;  // all points coincide at scale
  int i2 = -1;
  best = eps;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    double d = (pts[i] - pts[i0]).cross(pts[i1] - pts[i0]).norm();
    if (d > best) { best = d; i2 = i; }
  }
  if (i2 < 0) return out;  // collinear
  Vector3d n0 = unit_normal(pts[i0], pts[i1], pts[i2]);
  int i3 = -1;
  best = eps;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    double d = std::abs(n0.dot(pts[i] - pts[i0]));
    if (d > best) { best = d; i3 = i; }
  }
  if (i3 < 0) return out;  // coplanar
  out.full_dim = true;

  std::vector<Face> faces;
  auto make_face = [&](int a, int b, int c, const Vector3d& inside) {
    Face f{a, b, c, unit_normal(pts[a], pts[b], pts[c]), 0.0, true, {}};
    f.d = f.n.dot(pts[a]);
    if (f.n.dot(inside) > f.d) {  // flip outward
      std::swap(f.b, f.c);
      f.n = -f.n;
      f.d = f.n.dot(pts[f.a]);
    }
    faces.push_back(std::move(f));
    return static_cast<int>(faces.size()) - 1;
  };

  Vector3d inner = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  make_face(i0, i1, i2, inner);
  make_face(i0, i1, i3, inner);
  make_face(i0, i2, i3, inner);
  make_face(i1, i2, i3, inner);

  auto visible = [&](const Face& f, int p) { return f.n.dot(pts[p]) - f.d > eps; };

  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    for (auto& f : faces)
      if (visible(f, p)) { f.conflicts.push_back(p); break; }
  }

  // Directed edge -> alive face owning it.
  std::map<std::pair<int, int>, int> edge_face;
  auto register_face = [&](int fi) {
    const Face& f = faces[static_cast<std::size_t>(fi)];
    edge_face[{f.a, f.b}] = fi;
    edge_face[{f.b, f.c}] = fi;
    edge_face[{f.c, f.a}] = fi;
  };
  for (int fi = 0; fi < 4; ++fi) register_face(fi);

  std::vector<int> pending{0, 1, 2, 3};
  while (!pending.empty()) {
    int fi = pending.back();
    pending.pop_back();
    if (!faces[static_cast<std::size_t>(fi)].alive ||
        faces[static_cast<std::size_t>(fi)].conflicts.empty())
      continue;
    // Farthest conflict point of this face.
    int p = -1;
    double far = -1.0;
    for (int q : faces[static_cast<std::size_t>(fi)].conflicts) {
      double d = faces[static_cast<std::size_t>(fi)].n.dot(pts[q]) -
                 faces[static_cast<std::size_t>(fi)].d;
      if (d > far) { far = d; p = q; }
    }
    // BFS over faces visible from p.
    std::vector<int> stack{fi};
    std::set<int> vis;
    vis.insert(fi);
    std::vector<std::pair<int, int>> horizon;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      const Face& f = faces[static_cast<std::size_t>(cur)];
      for (auto [u, w] : {std::pair{f.a, f.b}, std::pair{f.b, f.c}, std::pair{f.c, f.a}}) {
        auto it = edge_face.find({w, u});  // neighbor owns the reverse edge
        if (it == edge_face.end()) continue;
        int nb = it->second;
        if (vis.count(nb)) continue;
        if (visible(faces[static_cast<std::size_t>(nb)], p)) {
          vis.insert(nb);
          stack.push_back(nb);
        } else {
          horizon.emplace_back(u, w);
        }
      }
    }
    std::vector<int> orphans;
    for (int dead : vis) {
      Face& f = faces[static_cast<std::size_t>(dead)];
      f.alive = false;
      edge_face.erase({f.a, f.b});
      edge_face.erase({f.b, f.c});
      edge_face.erase({f.c, f.a});
      for (int q : f.conflicts)
        if (q != p) orphans.push_back(q);
      f.conflicts.clear();
    }
    for (auto [u, w] : horizon) {
      int nf = make_face(u, w, p, inner);
      register_face(nf);
      pending.push_back(nf);
    }
    for (int q : orphans) {
      for (int nf = static_cast<int>(faces.size()) - static_cast<int>(horizon.size());
           nf < static_cast<int>(faces.size()); ++nf) {
        if (faces[static_cast<std::size_t>(nf)].alive &&
            visible(faces[static_cast<std::size_t>(nf)], q)) {
          faces[static_cast<std::size_t>(nf)].conflicts.push_back(q);
          break;
        }
      }
    }
  }

  std::set<int> used;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    out.facets.push_back({f.n, f.d});
    used.insert(f.a);
    used.insert(f.b);
    used.insert(f.c);
  }
  for (int i : used) out.vertices.push_back(Vector(pts[static_cast<std::size_t>(i)]));
  return out;
}

double hull_signed_distance(const Hull3d& h, const Eigen::Vector3d& x) {
  if (h.facets.empty()) throw std::invalid_argument("hull has no facets");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& f : h.facets) worst = std::max(worst, f.normal.dot(x) - f.offset);
  return worst;
}

}  // namespace symlab
