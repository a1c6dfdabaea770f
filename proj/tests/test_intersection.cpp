#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fano3/intersection.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fano3;

namespace {

ResolvedFan fan_of(const IntMatrix& vertices) {
  return crepant_resolution(convex_hull_3d(vertices));
}

}  // namespace

TEST_CASE("intersection tensor of P^3") {
  ResolvedFan fan = fan_of(fixtures::p3_simplex());
  IntersectionTensor x = intersection_tensor(fan);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) REQUIRE(x(i, j, k) == 1);
  WeilDivisor mk = WeilDivisor::anticanonical(4);
  REQUIRE(triple_product(x, mk, mk, mk) == 64);
}

TEST_CASE("intersection tensor of P^1 x P^1 x P^1") {
  ResolvedFan fan = fan_of(fixtures::octahedron());
  IntersectionTensor x = intersection_tensor(fan);
  // rays come in opposite pairs (0,1), (2,3), (4,5); the product of three
  // divisors is 1 exactly when one ray is picked from each pair
  auto pair_of = [](int i) { return i / 2; };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        bool one_from_each = (pair_of(i) != pair_of(j)) && (pair_of(i) != pair_of(k)) &&
                             (pair_of(j) != pair_of(k));
        REQUIRE(x(i, j, k) == (one_from_each ? 1 : 0));
      }
  WeilDivisor mk = WeilDivisor::anticanonical(6);
  REQUIRE(triple_product(x, mk, mk, mk) == 48);
}

TEST_CASE("tensor vanishes outside cones and matches the full-system oracle") {
  for (const IntMatrix& m : {fixtures::p3_simplex(), fixtures::octahedron(),
                             fixtures::f1_polytope(), fixtures::case46()}) {
    ResolvedFan fan = fan_of(m);
    IntersectionTensor x = intersection_tensor(fan);
    const int v = fan.ray_count();

    std::set<std::array<int, 3>> cones;
    for (auto c : fan.max_cones) {
      std::sort(c.begin(), c.end());
      cones.insert(c);
    }
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j)
        for (int k = j + 1; k < v; ++k)
          REQUIRE(x(i, j, k) == (cones.count({i, j, k}) ? 1 : 0));

    auto oracle = oracles::solve_tensor_full_system(fan);
    REQUIRE(oracle.has_value());
    for (const auto& [t, val] : *oracle) {
      REQUIRE(boost::multiprecision::denominator(val) == 1);
      REQUIRE(x(t[0], t[1], t[2]) == boost::multiprecision::numerator(val));
    }
  }
}

TEST_CASE("linearity relations hold for random covectors") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (const IntMatrix& m : {fixtures::f1_polytope(), fixtures::case47()}) {
    ResolvedFan fan = fan_of(m);
    IntersectionTensor x = intersection_tensor(fan);
    const int v = fan.ray_count();
    for (int iter = 0; iter < 50; ++iter) {
      Vec3 mvec = vec3(d(rng), d(rng), d(rng));
      WeilDivisor pd = principal_divisor(fan, mvec);
      for (int j2 = 0; j2 < v; ++j2)
        for (int j3 = j2; j3 < v; ++j3) {
          Integer s = 0;
          for (int j = 0; j < v; ++j) s += pd.coeff[size_t(j)] * x(j, j2, j3);
          REQUIRE(s == 0);
        }
    }
  }
}

TEST_CASE("principal divisors") {
  ResolvedFan fan = fan_of(fixtures::f1_polytope());
  SECTION("zero covector gives the zero divisor") {
    WeilDivisor z = principal_divisor(fan, vec3(0, 0, 0));
    for (const Integer& c : z.coeff) REQUIRE(c == 0);
  }
  SECTION("coefficients are the pairings with the rays") {
    // rays of the f1 polytope in fixture order: xyz, x, y, z, 1/x, 1/y, 1/z
    WeilDivisor dx = principal_divisor(fan, vec3(1, 0, 0));
    REQUIRE(dx.coeff == std::vector<Integer>{1, 1, 0, 0, -1, 0, 0});
  }
  SECTION("products with principal divisors vanish") {
    IntersectionTensor x = intersection_tensor(fan);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> d(-4, 4);
    for (int iter = 0; iter < 20; ++iter) {
      WeilDivisor pd = principal_divisor(fan, vec3(d(rng), d(rng), d(rng)));
      WeilDivisor a = WeilDivisor::zero(7), b = WeilDivisor::zero(7);
      for (int i = 0; i < 7; ++i) {
        a.coeff[size_t(i)] = d(rng);
        b.coeff[size_t(i)] = d(rng);
      }
      REQUIRE(triple_product(x, pd, a, b) == 0);
    }
  }
  SECTION("product with the zero divisor vanishes") {
    IntersectionTensor x = intersection_tensor(fan);
    WeilDivisor mk = WeilDivisor::anticanonical(7);
    REQUIRE(triple_product(x, WeilDivisor::zero(7), mk, mk) == 0);
  }
  SECTION("dimension mismatch is rejected") {
    IntersectionTensor x = intersection_tensor(fan);
    REQUIRE_THROWS_AS(
        triple_product(x, WeilDivisor::zero(6), WeilDivisor::zero(7), WeilDivisor::zero(7)),
        DimensionMismatch);
  }
}
