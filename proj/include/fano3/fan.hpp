#pragma once

#include <array>
#include <vector>

#include "fano3/polytope.hpp"

namespace fano3 {

enum class FacetKind { SmoothTriangle, NodeQuad, Other };

/// Classification of one facet of a reflexive fan polytope. For a NodeQuad
/// with cyclic vertices (A, B, C, D) the lattice relation A + C = B + D holds
/// and the two diagonals are (A, C) and (B, D).
struct FacetClass {
  FacetKind kind = FacetKind::Other;
  std::vector<int> vertex_indices;       // cyclic order, as on the polytope
  std::array<int, 2> diag_ac{-1, -1};
  std::array<int, 2> diag_bd{-1, -1};
};

struct NodalProfile {
  int v = 0;          // vertices of the fan polytope
  int p = 0;          // quadrangular facets, i.e. nodes
  int f = 0;          // torus-fixed points: triangles + quads
  bool is_nodal = false;
  bool is_smooth = false;
};

/// Classifies every facet of a reflexive polytope. A triangle is smooth iff
/// its vertices form a lattice basis; a quadrilateral is a node iff the
/// diagonal sums agree and one corner triple is a lattice basis; everything
/// else is worse than an ordinary double point.
inline std::pair<std::vector<FacetClass>, NodalProfile> classify_facets(
    const LatticePolytope& poly) {
  if (!is_reflexive(poly)) throw NotReflexive();
  std::vector<FacetClass> out;
  NodalProfile prof;
  prof.v = poly.vertex_count();
  prof.f = int(poly.facets().size());
  bool any_other = false;
  for (const Facet& f : poly.facets()) {
    FacetClass fc;
    fc.vertex_indices = f.vertices;
    const auto& c = f.vertices;
    if (c.size() == 3) {
      Integer d = det3(poly.vertex(c[0]), poly.vertex(c[1]), poly.vertex(c[2]));
      fc.kind = abs_int(d) == 1 ? FacetKind::SmoothTriangle : FacetKind::Other;
    } else if (c.size() == 4) {
      Vec3 a = poly.vertex(c[0]), b = poly.vertex(c[1]);
      Vec3 cc = poly.vertex(c[2]), d = poly.vertex(c[3]);
      if (add3(a, cc) == add3(b, d) && abs_int(det3(a, b, d)) == 1) {
        fc.kind = FacetKind::NodeQuad;
        fc.diag_ac = {c[0], c[2]};
        fc.diag_bd = {c[1], c[3]};
      }
    }
    if (fc.kind == FacetKind::NodeQuad) ++prof.p;
    if (fc.kind == FacetKind::Other) any_other = true;
    out.push_back(std::move(fc));
  }
  prof.is_nodal = !any_other;
  prof.is_smooth = prof.is_nodal && prof.p == 0;
  return {std::move(out), prof};
}

/// Smooth simplicial fan of a small crepant resolution: the rays are exactly
/// the polytope vertices, triangle facets give one cone each and node quads
/// two cones split along the chosen diagonal.
struct ResolvedFan {
  IntMatrix rays;                            // 3 x v
  std::vector<std::array<int, 3>> max_cones;
  std::vector<bool> diagonal_flipped;        // per quad, in facet order

  Vec3 ray(int i) const { return rays.column3(i); }
  int ray_count() const { return rays.cols(); }
};

/// Splits each quad along the diagonal containing its lexicographically
/// smallest vertex; `flips` toggles the choice per quad (in facet order).
inline ResolvedFan crepant_resolution(const LatticePolytope& poly,
                                      const std::vector<bool>& flips = {}) {
  auto [facets, prof] = classify_facets(poly);
  if (!prof.is_nodal) throw NotNodal();
  if (!flips.empty() && int(flips.size()) != prof.p)
    throw DimensionMismatch("expected one flip flag per quad facet");

  ResolvedFan fan;
  fan.rays = poly.vertices();
  int quad_index = 0;
  for (const FacetClass& fc : facets) {
    const auto& c = fc.vertex_indices;
    if (fc.kind == FacetKind::SmoothTriangle) {
      fan.max_cones.push_back({c[0], c[1], c[2]});
      continue;
    }
    // node quad: default diagonal is the one through the lex-smallest vertex
    int lex = c[0];
    for (int id : c)
      if (poly.vertex(id) < poly.vertex(lex)) lex = id;
    bool use_ac = (lex == fc.diag_ac[0] || lex == fc.diag_ac[1]);
    if (!flips.empty() && flips[size_t(quad_index)]) use_ac = !use_ac;
    fan.diagonal_flipped.push_back(!flips.empty() && flips[size_t(quad_index)]);
    ++quad_index;
    if (use_ac) {
      fan.max_cones.push_back({c[0], c[1], c[2]});
      fan.max_cones.push_back({c[0], c[2], c[3]});
    } else {
      fan.max_cones.push_back({c[1], c[2], c[3]});
      fan.max_cones.push_back({c[1], c[3], c[0]});
    }
  }

  // every cone unimodular, and the cones tile N_R: the determinant sum must
  // equal the normalized volume of the polytope
  Integer vol = 0;
  for (const auto& cone : fan.max_cones) {
    Integer d = abs_int(det3(fan.ray(cone[0]), fan.ray(cone[1]), fan.ray(cone[2])));
    if (d != 1) throw NotNodal("resolution produced a non-unimodular cone");
    vol += d;
  }
  if (vol != normalized_volume(poly))
    throw InconsistentSystem("resolution cones do not tile the fan of the polytope");
  return fan;
}

/// The linear relation v - p = 3 + rho - b between the combinatorial data of
/// a nodal fan polytope and the invariants of the smoothing.
inline bool check_relation_v_p_rho_b(const NodalProfile& prof, long long rho, long long b) {
  return prof.v - prof.p == 3 + rho - b;
}

}  // namespace fano3
