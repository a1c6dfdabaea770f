#pragma once

#include <vector>

#include "fano3/intersection.hpp"

namespace fano3 {

/// Cl(X) = Z^v / (principal divisors), presented through the Smith
/// decomposition of the v x 3 pairing matrix. The chosen basis consists of
/// Weil divisor representatives; `project` maps a Weil vector to its
/// coordinates in that basis.
struct ClassGroup {
  int v = 0;
  int rank = 0;         // v - 3
  IntMatrix basis;      // v x rank, columns are Weil representatives
  IntMatrix coord_map;  // rank x v, coordinates of a class in the basis

  std::vector<Integer> project(const std::vector<Integer>& weil) const {
    return coord_map * weil;
  }
};

inline ClassGroup class_group(const ResolvedFan& fan) {
  const int v = fan.ray_count();
  IntMatrix pairing = fan.rays.transpose();  // v x 3, columns generate the relations
  SmithDecomposition s = smith_normal_form(pairing);
  if (s.rank != 3) throw TorsionDetected("rays do not span the lattice");
  for (int i = 0; i < 3; ++i)
    if (s.invariant_factors[size_t(i)] != 1)
      throw TorsionDetected("class group has torsion");

  // left * pairing * right = diag(1,1,1); classes of (left^-1) e_3..e_{v-1}
  // form a basis of the quotient and rows 3.. of left give the coordinates.
  IntMatrix left_inv = inverse_unimodular(s.left);
  ClassGroup cl;
  cl.v = v;
  cl.rank = v - 3;
  cl.basis = IntMatrix(v, cl.rank);
  cl.coord_map = IntMatrix(cl.rank, v);
  for (int j = 0; j < cl.rank; ++j)
    for (int i = 0; i < v; ++i) cl.basis.at(i, j) = left_inv.at(i, 3 + j);
  for (int i = 0; i < cl.rank; ++i)
    for (int j = 0; j < v; ++j) cl.coord_map.at(i, j) = s.left.at(3 + i, j);
  return cl;
}

/// One row per node: +1 at the vertices of one diagonal, -1 at the other.
/// A Weil divisor is Cartier at the node iff the row pairs to zero with it.
inline IntMatrix node_condition_map(const LatticePolytope& poly,
                                    const std::vector<FacetClass>& facets) {
  int p = 0;
  for (const FacetClass& fc : facets)
    if (fc.kind == FacetKind::NodeQuad) ++p;
  IntMatrix map(p, poly.vertex_count());
  int r = 0;
  for (const FacetClass& fc : facets) {
    if (fc.kind != FacetKind::NodeQuad) continue;
    map.at(r, fc.diag_ac[0]) = 1;
    map.at(r, fc.diag_ac[1]) = 1;
    map.at(r, fc.diag_bd[0]) = -1;
    map.at(r, fc.diag_bd[1]) = -1;
    ++r;
  }
  return map;
}

/// Pic(X) as the saturated kernel of the node-condition map acting on Cl(X),
/// together with the Gram matrix (-K).G_i.G_j of the chosen basis.
struct PicardLattice {
  int rho = 0;
  IntMatrix basis_weil;    // v x rho Weil representatives
  IntMatrix coords_in_cl;  // (v-3) x rho
  IntMatrix gram;          // rho x rho
};

inline PicardLattice picard_lattice(const ClassGroup& cl, const IntMatrix& node_map,
                                    const IntersectionTensor& tensor) {
  if (node_map.cols() != cl.v) throw DimensionMismatch("node map has wrong width");
  IntMatrix induced = node_map * cl.basis;  // p x (v-3)
  IntMatrix kernel = kernel_lattice(induced);

  PicardLattice pic;
  pic.rho = kernel.cols();
  pic.coords_in_cl = kernel;
  pic.basis_weil = cl.basis * kernel;

  // every basis element must satisfy every node condition exactly
  for (int j = 0; j < pic.rho; ++j) {
    std::vector<Integer> g = pic.basis_weil.column(j);
    for (const Integer& r : node_map * g)
      if (r != 0) throw InconsistentSystem("Picard basis element fails a node condition");
  }

  WeilDivisor minus_k = WeilDivisor::anticanonical(cl.v);
  pic.gram = IntMatrix(pic.rho, pic.rho);
  for (int i = 0; i < pic.rho; ++i)
    for (int j = i; j < pic.rho; ++j) {
      Integer val = triple_product(tensor, minus_k, {pic.basis_weil.column(i)},
                                   {pic.basis_weil.column(j)});
      pic.gram.at(i, j) = val;
      pic.gram.at(j, i) = val;
    }
  return pic;
}

/// The invariants (rho, r, deg, b, d) that pin down the smoothing among the
/// smooth Fano threefold families.
struct PrincipalInvariants {
  long long rho = 0;
  long long r = 0;    // Fano index
  long long deg = 0;  // (-K)^3
  long long b = 0;    // half third Betti number of the smoothing
  long long d = 0;    // det of the Gram matrix on Pic

  bool operator==(const PrincipalInvariants&) const = default;
};

/// Everything the downstream consumers need from one polytope.
struct Analysis {
  NodalProfile profile;
  std::vector<FacetClass> facets;
  ResolvedFan fan;
  PicardLattice pic;
  PrincipalInvariants inv;
};

inline Analysis analyze_polytope(const LatticePolytope& poly,
                                 const std::vector<bool>& flips = {}) {
  Analysis a;
  std::tie(a.facets, a.profile) = classify_facets(poly);
  if (!a.profile.is_nodal) throw NotNodal();
  a.fan = crepant_resolution(poly, flips);
  IntersectionTensor tensor = intersection_tensor(a.fan);
  ClassGroup cl = class_group(a.fan);
  IntMatrix node_map = node_condition_map(poly, a.facets);
  a.pic = picard_lattice(cl, node_map, tensor);

  const int v = a.profile.v;
  WeilDivisor minus_k = WeilDivisor::anticanonical(v);
  for (const Integer& r : node_map * minus_k.coeff)
    if (r != 0) throw AntiCanonicalNotCartier();

  a.inv.rho = a.pic.rho;
  a.inv.deg = to_longlong(triple_product(tensor, minus_k, minus_k, minus_k));
  a.inv.b = a.profile.p + a.inv.rho - (v - 3);

  // coordinates of -K in the Picard basis; gcd gives the Fano index
  std::vector<Integer> ck = cl.project(minus_k.coeff);
  auto y = solve_integer(a.pic.coords_in_cl, ck);
  if (!y) throw AntiCanonicalNotCartier("-K does not lie in the Picard lattice");
  Integer r = gcd_all(*y);
  if (r == 0) throw InconsistentSystem("-K is trivial in Pic");
  a.inv.r = to_longlong(r);
  a.inv.d = to_longlong(determinant(a.pic.gram));

  // tripwires: the node-count relation and r^3 | deg hold by construction
  if (!check_relation_v_p_rho_b(a.profile, a.inv.rho, a.inv.b))
    throw InconsistentSystem("v - p = 3 + rho - b violated");
  if (a.inv.deg % (a.inv.r * a.inv.r * a.inv.r) != 0)
    throw InconsistentSystem("deg is not divisible by r^3");
  return a;
}

inline PrincipalInvariants principal_invariants(const LatticePolytope& poly,
                                                const std::vector<bool>& flips = {}) {
  return analyze_polytope(poly, flips).inv;
}

/// A small smoothing keeps (rho, r, deg, d); b already refers to the
/// smoothing, so this is the identity on the tuple.
inline PrincipalInvariants smoothing_invariants(const PrincipalInvariants& x) { return x; }

}  // namespace fano3
