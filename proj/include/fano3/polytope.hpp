#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "fano3/linalg.hpp"
#include "fano3/matrix.hpp"

namespace fano3 {

/// One facet of a lattice polytope. The primitive normal u satisfies
/// <u, x> >= level on the whole polytope, with equality exactly on the facet;
/// when the origin is interior the level is negative, and the polytope is
/// reflexive iff every level is -1.
struct Facet {
  Vec3 normal;
  Integer level;
  std::vector<int> vertices;  // incident vertex indices in cyclic order
};

/// Full-dimensional lattice polytope in Z^3 with the origin strictly
/// interior. Construct through convex_hull_3d; instances are immutable.
class LatticePolytope {
 public:
  static constexpr int dim = 3;

  int vertex_count() const { return vertices_.cols(); }
  const IntMatrix& vertices() const { return vertices_; }
  Vec3 vertex(int i) const { return vertices_.column3(i); }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Vec3& p) const {
    for (const Facet& f : facets_)
      if (dot3(f.normal, p) < f.level) return false;
    return true;
  }

  friend LatticePolytope convex_hull_3d(const IntMatrix& points);

 private:
  LatticePolytope(IntMatrix vertices, std::vector<Facet> facets)
      : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  IntMatrix vertices_;
  std::vector<Facet> facets_;
};

namespace detail {

// Orders the points of a supporting plane cyclically and keeps only the
// strict 2D hull vertices. The cycle is counterclockwise in a chart chosen
// so that the orientation is consistent with the facet normal.
inline std::vector<int> facet_cycle(const std::vector<Vec3>& pts,
                                    const std::vector<int>& idx, const Vec3& normal) {
  int k = 0;
  while (normal[size_t(k)] == 0) ++k;
  int i = (k + 1) % 3, j = (k + 2) % 3;  // (i, j, k) is a cyclic permutation
  const bool flip = normal[size_t(k)] < 0;

  struct P2 { Integer x, y; int id; };
  std::vector<P2> q;
  q.reserve(idx.size());
  for (int id : idx) q.push_back({pts[size_t(id)][size_t(i)], pts[size_t(id)][size_t(j)], id});
  std::sort(q.begin(), q.end(), [](const P2& a, const P2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });

  auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  // monotone chain, strict turns only
  std::vector<P2> hull;
  for (const P2& p : q) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  size_t lower = hull.size() + 1;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();

  std::vector<int> cycle;
  cycle.reserve(hull.size());
  for (const P2& p : hull) cycle.push_back(p.id);
  if (flip) std::reverse(cycle.begin(), cycle.end());
  // rotate so the cycle starts at the smallest index, for determinism
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mn, cycle.end());
  return cycle;
}

}  // namespace detail

/// Exact convex hull of the columns of a 3xn matrix. Every column must be a
/// vertex of the hull and the origin must be strictly interior.
inline LatticePolytope convex_hull_3d(const IntMatrix& points) {
  if (points.rows() != 3) throw DimensionMismatch("expected a 3xn vertex matrix");
  const int n = points.cols();
  std::vector<Vec3> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[size_t(i)] = points.column3(i);

  if (n < 4) throw DegenerateSpan();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[size_t(i)] == p[size_t(j)]) throw RedundantColumn(j);

  // full-dimensionality
  {
    IntMatrix diff(3, n - 1);
    for (int j = 1; j < n; ++j) {
      Vec3 d = sub3(p[size_t(j)], p[0]);
      for (int i = 0; i < 3; ++i) diff.at(i, j - 1) = d[size_t(i)];
    }
    if (smith_normal_form(diff).rank < 3) throw DegenerateSpan();
  }

  // supporting planes from point triples
  std::map<std::pair<Vec3, Integer>, std::vector<int>> planes;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec3 nrm = cross3(sub3(p[size_t(b)], p[size_t(a)]), sub3(p[size_t(c)], p[size_t(a)]));
        if (is_zero3(nrm)) continue;
        bool above = false, below = false;
        for (int l = 0; l < n && !(above && below); ++l) {
          Integer s = dot3(nrm, sub3(p[size_t(l)], p[size_t(a)]));
          if (s > 0) above = true;
          else if (s < 0) below = true;
        }
        if (above && below) continue;
        Vec3 u = primitive3(below ? neg3(nrm) : nrm);  // polytope on the >= side
        Integer level = dot3(u, p[size_t(a)]);
        auto key = std::make_pair(u, level);
        if (planes.count(key)) continue;
        std::vector<int> on;
        for (int l = 0; l < n; ++l)
          if (dot3(u, p[size_t(l)]) == level) on.push_back(l);
        planes.emplace(std::move(key), std::move(on));
      }

  std::vector<Facet> facets;
  std::vector<char> is_vertex(size_t(n), 0);
  for (auto& [key, on] : planes) {
    Facet f;
    f.normal = key.first;
    f.level = key.second;
    f.vertices = detail::facet_cycle(p, on, f.normal);
    for (int id : f.vertices) is_vertex[size_t(id)] = 1;
    facets.push_back(std::move(f));
  }

  for (const Facet& f : facets)
    if (f.level >= 0) throw OriginNotInterior();
  for (int i = 0; i < n; ++i)
    if (!is_vertex[size_t(i)]) throw RedundantColumn(i);

  return LatticePolytope(points, std::move(facets));
}

/// True iff every facet lies at level -1, i.e. the dual is a lattice polytope.
inline bool is_reflexive(const LatticePolytope& poly) {
  for (const Facet& f : poly.facets())
    if (f.level != -1) return false;
  return true;
}

/// Polar dual {u : <u, x> >= -1 on p}. Throws NotReflexive when the dual is
/// not a lattice polytope (facet normals are primitive, so that happens
/// exactly when some facet level differs from -1).
inline LatticePolytope dual_polytope(const LatticePolytope& poly) {
  if (!is_reflexive(poly))
    throw NotReflexive("dual vertices are not lattice points");
  IntMatrix duals(3, int(poly.facets().size()));
  for (int j = 0; j < int(poly.facets().size()); ++j)
    for (int i = 0; i < 3; ++i) duals.at(i, j) = poly.facets()[size_t(j)].normal[size_t(i)];
  return convex_hull_3d(duals);
}

/// All lattice points of the polytope in lexicographic order.
inline std::vector<Vec3> lattice_points(const LatticePolytope& poly) {
  Vec3 lo = poly.vertex(0), hi = poly.vertex(0);
  for (int i = 1; i < poly.vertex_count(); ++i) {
    Vec3 v = poly.vertex(i);
    for (int c = 0; c < 3; ++c) {
      lo[size_t(c)] = std::min(lo[size_t(c)], v[size_t(c)]);
      hi[size_t(c)] = std::max(hi[size_t(c)], v[size_t(c)]);
    }
  }
  std::vector<Vec3> out;
  for (Integer x = lo[0]; x <= hi[0]; ++x)
    for (Integer y = lo[1]; y <= hi[1]; ++y)
      for (Integer z = lo[2]; z <= hi[2]; ++z) {
        Vec3 q{x, y, z};
        if (poly.contains(q)) out.push_back(q);
      }
  return out;
}

/// Normalized volume (3! times the Euclidean volume), computed by coning the
/// facet fans over the origin.
inline Integer normalized_volume(const LatticePolytope& poly) {
  Integer vol = 0;
  for (const Facet& f : poly.facets()) {
    const auto& cyc = f.vertices;
    for (size_t t = 1; t + 1 < cyc.size(); ++t)
      vol += abs_int(det3(poly.vertex(cyc[0]), poly.vertex(cyc[t]), poly.vertex(cyc[t + 1])));
  }
  return vol;
}

}  // namespace fano3
