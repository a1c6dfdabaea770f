#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "fano3/fan.hpp"

namespace fano3 {

/// Integer combination of the torus-invariant divisors D_0 .. D_{v-1}.
struct WeilDivisor {
  std::vector<Integer> coeff;

  static WeilDivisor zero(int v) { return {std::vector<Integer>(size_t(v), Integer(0))}; }
  static WeilDivisor anticanonical(int v) {
    return {std::vector<Integer>(size_t(v), Integer(1))};
  }
  int size() const { return int(coeff.size()); }
};

/// Symmetric triple-intersection tensor x_{ijk} = D_i . D_j . D_k of a smooth
/// complete toric threefold. Characterized by: x = 1 on distinct cone triples,
/// x = 0 when the distinct rays involved span no cone, and for every lattice
/// covector m and every pair (j2, j3):  sum_j <m, ray_j> x_{j j2 j3} = 0.
class IntersectionTensor {
 public:
  explicit IntersectionTensor(int v) : v_(v), x_(size_t(v) * v * v) {}

  int ray_count() const { return v_; }

  const Integer& operator()(int i, int j, int k) const {
    return x_[index(i, j, k)];
  }

  Integer& at(int i, int j, int k) { return x_[index(i, j, k)]; }

  /// Writes the value into all permutations of (i, j, k).
  void set_sym(int i, int j, int k, const Integer& val) {
    int id[3] = {i, j, k};
    std::sort(id, id + 3);
    do {
      x_[index(id[0], id[1], id[2])] = val;
    } while (std::next_permutation(id, id + 3));
  }

 private:
  size_t index(int i, int j, int k) const {
    return (size_t(i) * v_ + j) * v_ + k;
  }
  int v_;
  std::vector<Integer> x_;
};

namespace detail {

// Integer solution of alpha * a + beta * b = w for independent a, b; throws
// when w is outside the span or the solution is not integral.
inline std::pair<Integer, Integer> solve_in_plane(const Vec3& a, const Vec3& b, const Vec3& w) {
  Vec3 n = cross3(a, b);
  if (is_zero3(n)) throw InconsistentSystem("wall rays are collinear");
  if (dot3(n, w) != 0) throw InconsistentSystem("wall relation is not coplanar");
  // pick a coordinate pair with an invertible 2x2 minor
  for (int c = 0; c < 3; ++c) {
    if (n[size_t(c)] == 0) continue;
    int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
    Integer det = a[size_t(r1)] * b[size_t(r2)] - a[size_t(r2)] * b[size_t(r1)];
    Integer na = w[size_t(r1)] * b[size_t(r2)] - w[size_t(r2)] * b[size_t(r1)];
    Integer nb = a[size_t(r1)] * w[size_t(r2)] - a[size_t(r2)] * w[size_t(r1)];
    if (na % det != 0 || nb % det != 0)
      throw InconsistentSystem("wall relation has no integral solution");
    return {na / det, nb / det};
  }
  throw InconsistentSystem("wall rays are collinear");
}

}  // namespace detail

/// Builds the tensor by local propagation: mixed entries x_{iij} come from
/// the two cones adjacent to the wall {i, j}, then x_{iii} from the relation
/// around the ray i. A final pass verifies every linearity relation exactly.
inline IntersectionTensor intersection_tensor(const ResolvedFan& fan) {
  const int v = fan.ray_count();
  IntersectionTensor x(v);

  std::map<std::pair<int, int>, std::vector<int>> walls;
  for (const auto& cone : fan.max_cones) {
    int c[3] = {cone[0], cone[1], cone[2]};
    std::sort(c, c + 3);
    x.set_sym(c[0], c[1], c[2], 1);
    walls[{c[0], c[1]}].push_back(c[2]);
    walls[{c[0], c[2]}].push_back(c[1]);
    walls[{c[1], c[2]}].push_back(c[0]);
  }

  for (const auto& [wall, opp] : walls) {
    if (opp.size() != 2)
      throw InconsistentSystem("fan is not complete: wall not shared by two cones");
    auto [i, j] = wall;
    Vec3 w = neg3(add3(fan.ray(opp[0]), fan.ray(opp[1])));
    auto [alpha, beta] = detail::solve_in_plane(fan.ray(i), fan.ray(j), w);
    x.set_sym(i, i, j, alpha);
    x.set_sym(i, j, j, beta);
  }

  for (int i = 0; i < v; ++i) {
    Vec3 acc{Integer(0), Integer(0), Integer(0)};
    for (int l = 0; l < v; ++l) {
      if (l == i) continue;
      const Integer& c = x(l, i, i);
      if (c == 0) continue;
      Vec3 r = fan.ray(l);
      for (int t = 0; t < 3; ++t) acc[size_t(t)] += c * r[size_t(t)];
    }
    Vec3 ri = fan.ray(i);
    int c0 = 0;
    while (ri[size_t(c0)] == 0) ++c0;
    if (-acc[size_t(c0)] % ri[size_t(c0)] != 0)
      throw InconsistentSystem("self-intersection is not integral");
    Integer xiii = -acc[size_t(c0)] / ri[size_t(c0)];
    for (int t = 0; t < 3; ++t)
      if (xiii * ri[size_t(t)] != -acc[size_t(t)])
        throw InconsistentSystem("self-intersection relation is inconsistent");
    x.set_sym(i, i, i, xiii);
  }

  // certify: every linearity relation must vanish exactly
  for (int c = 0; c < 3; ++c)
    for (int j2 = 0; j2 < v; ++j2)
      for (int j3 = j2; j3 < v; ++j3) {
        Integer s = 0;
        for (int j = 0; j < v; ++j) s += fan.ray(j)[size_t(c)] * x(j, j2, j3);
        if (s != 0) throw InconsistentSystem("tensor violates a linearity relation");
      }
  return x;
}

inline Integer triple_product(const IntersectionTensor& x, const WeilDivisor& d1,
                              const WeilDivisor& d2, const WeilDivisor& d3) {
  const int v = x.ray_count();
  if (d1.size() != v || d2.size() != v || d3.size() != v)
    throw DimensionMismatch("divisor length does not match the ray count");
  Integer total = 0;
  for (int i = 0; i < v; ++i) {
    if (d1.coeff[size_t(i)] == 0) continue;
    for (int j = 0; j < v; ++j) {
      if (d2.coeff[size_t(j)] == 0) continue;
      Integer ab = d1.coeff[size_t(i)] * d2.coeff[size_t(j)];
      for (int k = 0; k < v; ++k) {
        const Integer& t = x(i, j, k);
        if (t == 0 || d3.coeff[size_t(k)] == 0) continue;
        total += ab * d3.coeff[size_t(k)] * t;
      }
    }
  }
  return total;
}

/// div(x^m) = sum_i <m, ray_i> D_i.
inline WeilDivisor principal_divisor(const ResolvedFan& fan, const Vec3& m) {
  WeilDivisor d = WeilDivisor::zero(fan.ray_count());
  for (int i = 0; i < fan.ray_count(); ++i) d.coeff[size_t(i)] = dot3(m, fan.ray(i));
  return d;
}

}  // namespace fano3
