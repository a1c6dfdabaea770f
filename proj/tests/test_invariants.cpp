#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fano3/invariants.hpp"
#include "support/fixtures.hpp"

using namespace fano3;

namespace {

// canonical basis matrix of the lattice spanned by the columns
IntMatrix column_lattice_canon(const IntMatrix& m) {
  HermiteResult h = hermite_normal_form(m.transpose());
  IntMatrix out(m.rows(), h.rank);
  for (int j = 0; j < h.rank; ++j)
    for (int i = 0; i < m.rows(); ++i) out.at(i, j) = h.h.at(j, i);
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 15; ++step) {
    int i = int(rng() % n), j = int(rng() % n);
    if (i != j) detail::add_row(u, i, j, Integer(int(rng() % 5) - 2));
    if (step % 4 == 0 && n > 1) detail::swap_rows(u, int(rng() % n), int(rng() % n));
  }
  return u;
}

}  // namespace

TEST_CASE("class_group ranks") {
  auto rank_of = [](const IntMatrix& m) {
    return class_group(crepant_resolution(convex_hull_3d(m))).rank;
  };
  REQUIRE(rank_of(fixtures::p3_simplex()) == 1);
  REQUIRE(rank_of(fixtures::case46()) == 6);
  REQUIRE(rank_of(fixtures::f1_polytope()) == 4);
}

TEST_CASE("class_group basis and coordinates are mutually inverse") {
  ResolvedFan fan = crepant_resolution(convex_hull_3d(fixtures::case46()));
  ClassGroup cl = class_group(fan);
  // coord_map . basis = identity on the quotient coordinates
  IntMatrix prod = cl.coord_map * cl.basis;
  REQUIRE(prod == IntMatrix::identity(cl.rank));
  // principal divisors project to zero
  for (int c = 0; c < 3; ++c) {
    Vec3 m{Integer(c == 0), Integer(c == 1), Integer(c == 2)};
    auto coords = cl.project(principal_divisor(fan, m).coeff);
    for (const Integer& x : coords) REQUIRE(x == 0);
  }
}

TEST_CASE("node_condition_map") {
  SECTION("smooth polytope gives an empty map") {
    LatticePolytope oct = convex_hull_3d(fixtures::octahedron());
    auto [fcs, prof] = classify_facets(oct);
    IntMatrix nm = node_condition_map(oct, fcs);
    REQUIRE(nm.rows() == 0);
    REQUIRE(nm.cols() == 6);
  }
  SECTION("f1 polytope: 3 rows, +1 on one diagonal and -1 on the other") {
    LatticePolytope p = convex_hull_3d(fixtures::f1_polytope());
    auto [fcs, prof] = classify_facets(p);
    IntMatrix nm = node_condition_map(p, fcs);
    REQUIRE(nm.rows() == 3);
    REQUIRE(nm.cols() == 7);
    for (int r = 0; r < 3; ++r) {
      Integer sum = 0, abs_sum = 0;
      Vec3 signed_sum{Integer(0), Integer(0), Integer(0)};
      for (int j = 0; j < 7; ++j) {
        sum += nm.at(r, j);
        abs_sum += abs_int(nm.at(r, j));
        for (int c = 0; c < 3; ++c)
          signed_sum[size_t(c)] += nm.at(r, j) * p.vertex(j)[size_t(c)];
      }
      REQUIRE(sum == 0);
      REQUIRE(abs_sum == 4);
      REQUIRE(is_zero3(signed_sum));  // A + C - B - D = 0
    }
  }
  SECTION("principal divisors satisfy every node condition") {
    LatticePolytope p = convex_hull_3d(fixtures::case47());
    auto [fcs, prof] = classify_facets(p);
    IntMatrix nm = node_condition_map(p, fcs);
    ResolvedFan fan = crepant_resolution(p);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> d(-9, 9);
    for (int iter = 0; iter < 20; ++iter) {
      WeilDivisor pd = principal_divisor(fan, vec3(d(rng), d(rng), d(rng)));
      for (const Integer& x : nm * pd.coeff) REQUIRE(x == 0);
    }
  }
}

TEST_CASE("picard_lattice") {
  SECTION("case 4.6 has rho 2 and the paper's generators span the kernel") {
    LatticePolytope p = convex_hull_3d(fixtures::case46());
    Analysis a = analyze_polytope(p);
    REQUIRE(a.pic.rho == 2);

    ClassGroup cl = class_group(a.fan);
    // G1 = D1 + D4 + D5 + D8, G2 = -D1 + D6 + D9 (1-based indices)
    std::vector<Integer> g1(9, Integer(0)), g2(9, Integer(0));
    g1[0] = 1; g1[3] = 1; g1[4] = 1; g1[7] = 1;
    g2[0] = -1; g2[5] = 1; g2[8] = 1;
    IntMatrix paper(cl.rank, 2);
    auto c1 = cl.project(g1), c2 = cl.project(g2);
    for (int i = 0; i < cl.rank; ++i) {
      paper.at(i, 0) = c1[size_t(i)];
      paper.at(i, 1) = c2[size_t(i)];
    }
    REQUIRE(column_lattice_canon(paper) == column_lattice_canon(a.pic.coords_in_cl));
  }
  SECTION("f1 polytope: rho 1 with the stated generator") {
    LatticePolytope p = convex_hull_3d(fixtures::f1_polytope());
    Analysis a = analyze_polytope(p);
    REQUIRE(a.pic.rho == 1);
    // -D_xyz + D_{1/x} + D_{1/y} + D_{1/z}; fixture order xyz,x,y,z,1/x,1/y,1/z
    std::vector<Integer> g(7, Integer(0));
    g[0] = -1; g[4] = 1; g[5] = 1; g[6] = 1;
    ClassGroup cl = class_group(a.fan);
    auto coords = cl.project(g);
    IntMatrix paper(cl.rank, 1);
    for (int i = 0; i < cl.rank; ++i) paper.at(i, 0) = coords[size_t(i)];
    REQUIRE(column_lattice_canon(paper) == column_lattice_canon(a.pic.coords_in_cl));
  }
  SECTION("smooth polytope: Pic equals Cl") {
    Analysis a = analyze_polytope(convex_hull_3d(fixtures::octahedron()));
    REQUIRE(a.pic.rho == 3);
  }
}

TEST_CASE("principal invariants of the worked cases") {
  PrincipalInvariants i46 = principal_invariants(convex_hull_3d(fixtures::case46()));
  REQUIRE(i46 == PrincipalInvariants{2, 1, 30, 0, -24});
  PrincipalInvariants i47 = principal_invariants(convex_hull_3d(fixtures::case47()));
  REQUIRE(i47 == PrincipalInvariants{2, 1, 30, 0, -24});
  PrincipalInvariants i48 = principal_invariants(convex_hull_3d(fixtures::case48()));
  REQUIRE(i48 == PrincipalInvariants{2, 1, 30, 0, -21});
}

TEST_CASE("principal invariants of B5's degeneration and of P^3") {
  PrincipalInvariants f1 = principal_invariants(convex_hull_3d(fixtures::f1_polytope()));
  REQUIRE(f1 == PrincipalInvariants{1, 2, 40, 0, 10});
  PrincipalInvariants p3 = principal_invariants(convex_hull_3d(fixtures::p3_simplex()));
  REQUIRE(p3 == PrincipalInvariants{1, 4, 64, 0, 4});
  PrincipalInvariants oct = principal_invariants(convex_hull_3d(fixtures::octahedron()));
  REQUIRE(oct == PrincipalInvariants{3, 2, 48, 0, oct.d});
  REQUIRE(oct.deg == 48);
}

TEST_CASE("invariants and Gram matrix do not depend on the diagonal choices") {
  for (const IntMatrix& m : {fixtures::f1_polytope(), fixtures::case46(),
                             fixtures::case48()}) {
    LatticePolytope p = convex_hull_3d(m);
    auto [fcs, prof] = classify_facets(p);
    Analysis base = analyze_polytope(p);
    for (unsigned mask = 1; mask < (1u << prof.p); ++mask) {
      std::vector<bool> flips(static_cast<size_t>(prof.p));
      for (int q = 0; q < prof.p; ++q) flips[size_t(q)] = (mask >> q) & 1;
      Analysis flipped = analyze_polytope(p, flips);
      REQUIRE(flipped.inv == base.inv);
      REQUIRE(flipped.pic.gram == base.pic.gram);  // same canonical Pic basis
    }
  }
}

TEST_CASE("discriminant is invariant under unimodular change of Pic basis") {
  std::mt19937_64 rng(777);
  for (const IntMatrix& m : {fixtures::case46(), fixtures::case47(), fixtures::case48()}) {
    Analysis a = analyze_polytope(convex_hull_3d(m));
    Integer d0 = determinant(a.pic.gram);
    for (int iter = 0; iter < 25; ++iter) {
      IntMatrix u = random_unimodular(rng, a.pic.rho);
      IntMatrix g = u.transpose() * a.pic.gram * u;
      REQUIRE(determinant(g) == d0);
    }
  }
}

TEST_CASE("smoothing invariants transfer unchanged") {
  PrincipalInvariants x{1, 3, 54, 0, 6};
  REQUIRE(smoothing_invariants(x) == x);
  // b already encodes the smoothing: B4's degeneration has (v, p) = (8, 6)
  NodalProfile b4{.v = 8, .p = 6, .f = 6, .is_nodal = true, .is_smooth = false};
  REQUIRE(b4.p + 1 - (b4.v - 3) == 2);
}
