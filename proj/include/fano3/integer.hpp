#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "fano3/errors.hpp"

namespace fano3 {

// All arithmetic in the library is exact. Floating point is never used.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec3 = std::array<Integer, 3>;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// gcd of a whole coefficient vector; 0 for the zero vector.
template <typename Range>
Integer gcd_all(const Range& values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd_int(g, v);
    if (g == 1) break;
  }
  return g;
}

inline long long to_longlong(const Integer& a) {
  if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
    throw Error("integer out of long long range: " + a.str());
  return static_cast<long long>(a);
}

inline Vec3 vec3(long long x, long long y, long long z) {
  return {Integer(x), Integer(y), Integer(z)};
}

inline Vec3 add3(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 sub3(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 neg3(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline Integer dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero3(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

/// Divide out the content; the zero vector is returned unchanged.
inline Vec3 primitive3(const Vec3& a) {
  Integer g = gcd_int(gcd_int(abs_int(a[0]), abs_int(a[1])), abs_int(a[2]));
  if (g <= 1) return a;
  return {a[0] / g, a[1] / g, a[2] / g};
}

inline Integer det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot3(a, cross3(b, c));
}

}  // namespace fano3
