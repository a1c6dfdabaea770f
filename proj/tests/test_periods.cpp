#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fano3/periods.hpp"
#include "support/fixtures.hpp"

using namespace fano3;

namespace {

// Brute-force oracle without pruning: multiply out f^n fully.
Integer constant_term_naive(const LaurentPolynomial& f, int n) {
  std::map<LaurentPolynomial::Exponent, Integer> g{{{0, 0, 0}, Integer(1)}};
  for (int s = 0; s < n; ++s) {
    std::map<LaurentPolynomial::Exponent, Integer> next;
    for (const auto& [e, c] : g)
      for (const auto& [d, w] : f.terms)
        next[{e[0] + d[0], e[1] + d[1], e[2] + d[2]}] += c * w;
    g = std::move(next);
  }
  auto it = g.find({0, 0, 0});
  return it == g.end() ? Integer(0) : it->second;
}

LaurentPolynomial apply_gl(const LaurentPolynomial& f, const IntMatrix& u) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms) {
    std::vector<Integer> img = u * std::vector<Integer>{e[0], e[1], e[2]};
    out.add_term({to_longlong(img[0]), to_longlong(img[1]), to_longlong(img[2])}, c);
  }
  return out;
}

}  // namespace

TEST_CASE("laurent_from_polytope") {
  SECTION("f1 polytope gives exactly f1") {
    LaurentPolynomial f = laurent_from_polytope(convex_hull_3d(fixtures::f1_polytope()));
    REQUIRE(f.terms.size() == 7);
    LaurentPolynomial expect = parse_laurent("x*y*z + x + y + z + x^-1 + y^-1 + z^-1");
    REQUIRE(f.terms == expect.terms);
  }
  SECTION("octahedron") {
    LaurentPolynomial f = laurent_from_polytope(convex_hull_3d(fixtures::octahedron()));
    REQUIRE(f.terms == parse_laurent("x + y + z + x^-1 + y^-1 + z^-1").terms);
  }
  SECTION("P3 fan simplex") {
    LaurentPolynomial f = laurent_from_polytope(convex_hull_3d(fixtures::p3_simplex()));
    REQUIRE(f.terms == parse_laurent("x + y + z + x^-1*y^-1*z^-1").terms);
  }
  SECTION("reflexive polytopes have no interior points besides the origin") {
    for (const IntMatrix& m : {fixtures::f1_polytope(), fixtures::case46()}) {
      LatticePolytope p = convex_hull_3d(m);
      REQUIRE(laurent_from_polytope(p, true).terms ==
              laurent_from_polytope(p, false).terms);
    }
  }
}

TEST_CASE("constant_terms small cases") {
  SECTION("x + 1/x gives central binomial coefficients") {
    PeriodSequence s = constant_terms(parse_laurent("x + x^-1"), 4);
    REQUIRE(s.coefficients == std::vector<Integer>{1, 0, 2, 0, 6});
  }
  SECTION("x + y + 1/(xy)") {
    PeriodSequence s = constant_terms(parse_laurent("x + y + x^-1*y^-1"), 6);
    REQUIRE(s.coefficients == std::vector<Integer>{1, 0, 0, 6, 0, 0, 90});
  }
  SECTION("constant polynomial") {
    PeriodSequence s = constant_terms(parse_laurent("3"), 3);
    REQUIRE(s.coefficients == std::vector<Integer>{1, 3, 9, 27});
  }
}

TEST_CASE("f1 period sequence matches the displayed series and the closed form") {
  LaurentPolynomial f1 = laurent_from_polytope(convex_hull_3d(fixtures::f1_polytope()));
  PeriodSequence s = constant_terms(f1, 8);
  REQUIRE(s.coefficients ==
          std::vector<Integer>{1, 0, 6, 0, 114, 0, 2940, 0, 87570});
  for (int n = 0; n <= 8; ++n) REQUIRE(s.coefficients[size_t(n)] == f1_closed_form(n));
  REQUIRE(f1_closed_form(0) == 1);
  REQUIRE(f1_closed_form(2) == 6);
  REQUIRE(f1_closed_form(4) == 114);
  REQUIRE(f1_closed_form(7) == 0);
}

TEST_CASE("pruned power iteration agrees with the naive oracle") {
  std::mt19937_64 rng(60528);
  std::uniform_int_distribution<long long> coef(-3, 3), expo(-2, 2);
  for (int iter = 0; iter < 15; ++iter) {
    LaurentPolynomial f;
    int nterms = 2 + int(rng() % 4);
    for (int t = 0; t < nterms; ++t)
      f.add_term({expo(rng), expo(rng), expo(rng)}, coef(rng));
    PeriodSequence s = constant_terms(f, 6);
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(iter, n);
      REQUIRE(s.coefficients[size_t(n)] == constant_term_naive(f, n));
    }
  }
}

TEST_CASE("constant terms are invariant under exponent-lattice automorphisms") {
  std::mt19937_64 rng(11);
  LaurentPolynomial f1 = laurent_from_polytope(convex_hull_3d(fixtures::f1_polytope()));
  PeriodSequence base = constant_terms(f1, 6);
  for (int iter = 0; iter < 10; ++iter) {
    IntMatrix u = IntMatrix::identity(3);
    for (int step = 0; step < 6; ++step) {
      int i = int(rng() % 3), j = int(rng() % 3);
      if (i != j) detail::add_row(u, i, j, Integer(int(rng() % 3) - 1));
    }
    PeriodSequence s = constant_terms(apply_gl(f1, u), 6);
    REQUIRE(s.coefficients == base.coefficients);
  }
}

TEST_CASE("nonnegative coefficients for nonnegative polynomials") {
  LaurentPolynomial f = parse_laurent("x + y + z + x^-1*y^-1 + 2*z^-1");
  PeriodSequence s = constant_terms(f, 10);
  for (const Integer& c : s.coefficients) REQUIRE(c >= 0);
}

TEST_CASE("laurent parser") {
  LaurentPolynomial f = parse_laurent("2*x^2*y - z^-1 + 4 - x ");
  REQUIRE(f.terms.at({2, 1, 0}) == 2);
  REQUIRE(f.terms.at({0, 0, -1}) == -1);
  REQUIRE(f.terms.at({0, 0, 0}) == 4);
  REQUIRE(f.terms.at({1, 0, 0}) == -1);
  REQUIRE(parse_laurent("x - x").terms.empty());
  REQUIRE_THROWS_AS(parse_laurent(""), Error);
  REQUIRE_THROWS_AS(parse_laurent("x + + y"), Error);
  REQUIRE_THROWS_AS(parse_laurent("w"), Error);
  // cancellation inside one monomial: x * x^-1 = 1
  REQUIRE(parse_laurent("x*x^-1").terms.at({0, 0, 0}) == 1);
}
