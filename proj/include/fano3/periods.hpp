#pragma once

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "fano3/polytope.hpp"

namespace fano3 {

/// Sparse Laurent polynomial in x, y, z with integer coefficients.
struct LaurentPolynomial {
  using Exponent = std::array<long long, 3>;
  std::map<Exponent, Integer> terms;  // no zero coefficients stored

  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

/// Coefficient 1 on every nonzero lattice point of the polytope: the
/// polynomial sum_{m in P} x^m - 1 with the origin term cancelled. For a
/// reflexive polytope the origin is the only interior point, so the
/// include_interior flag has no effect there.
inline LaurentPolynomial laurent_from_polytope(const LatticePolytope& poly,
                                               bool include_interior = true) {
  LaurentPolynomial f;
  for (const Vec3& pt : lattice_points(poly)) {
    if (pt[0] == 0 && pt[1] == 0 && pt[2] == 0) continue;
    if (!include_interior) {
      bool boundary = false;
      for (const Facet& fa : poly.facets())
        if (dot3(fa.normal, pt) == fa.level) { boundary = true; break; }
      if (!boundary) continue;
    }
    f.add_term({to_longlong(pt[0]), to_longlong(pt[1]), to_longlong(pt[2])}, 1);
  }
  return f;
}

/// Constant terms c_n = [x^0] f^n for n = 0..n_max.
struct PeriodSequence {
  std::vector<Integer> coefficients;
};

/// Iterated sparse multiplication. Exponents that cannot return to the
/// origin within the remaining multiplications are pruned using the
/// coordinate range of the support.
inline PeriodSequence constant_terms(const LaurentPolynomial& f, int n_max) {
  if (n_max < 0) throw Error("n_max must be nonnegative");
  using Exp = LaurentPolynomial::Exponent;
  PeriodSequence out;
  out.coefficients.reserve(size_t(n_max) + 1);
  out.coefficients.emplace_back(1);  // f^0 = 1

  Exp lo{0, 0, 0}, hi{0, 0, 0};
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    for (int t = 0; t < 3; ++t) {
      lo[size_t(t)] = first ? e[size_t(t)] : std::min(lo[size_t(t)], e[size_t(t)]);
      hi[size_t(t)] = first ? e[size_t(t)] : std::max(hi[size_t(t)], e[size_t(t)]);
    }
    first = false;
  }

  std::map<Exp, Integer> power{{Exp{0, 0, 0}, Integer(1)}};
  for (int n = 1; n <= n_max; ++n) {
    std::map<Exp, Integer> next;
    const long long remaining = n_max - n;
    for (const auto& [e, c] : power)
      for (const auto& [d, w] : f.terms) {
        Exp s{e[0] + d[0], e[1] + d[1], e[2] + d[2]};
        bool reachable = true;
        for (int t = 0; t < 3 && reachable; ++t)
          reachable = s[size_t(t)] + remaining * hi[size_t(t)] >= 0 &&
                      s[size_t(t)] + remaining * lo[size_t(t)] <= 0;
        if (!reachable) continue;
        next[s] += c * w;
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    power = std::move(next);
    auto it = power.find(Exp{0, 0, 0});
    out.coefficients.push_back(it == power.end() ? Integer(0) : it->second);
  }
  return out;
}

/// Closed form for the period coefficients of
/// f1 = xyz + x + y + z + 1/x + 1/y + 1/z:
/// c_n = sum over a,b,c,d >= 0 with 2a+2b+2c+4d = n of
///       n! / (a! b! c! d! (a+d)! (b+d)! (c+d)!).
inline Integer f1_closed_form(int n) {
  if (n < 0) throw Error("n must be nonnegative");
  std::vector<Integer> fact(size_t(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[size_t(i)] = fact[size_t(i) - 1] * i;
  Integer total = 0;
  for (int d = 0; 4 * d <= n; ++d)
    for (int a = 0; 2 * a + 4 * d <= n; ++a)
      for (int b = 0; 2 * a + 2 * b + 4 * d <= n; ++b) {
        int rem = n - 2 * a - 2 * b - 4 * d;
        if (rem % 2 != 0) continue;
        int c = rem / 2;
        Integer term = fact[size_t(n)];
        term /= fact[size_t(a)];
        term /= fact[size_t(b)];
        term /= fact[size_t(c)];
        term /= fact[size_t(d)];
        term /= fact[size_t(a + d)];
        term /= fact[size_t(b + d)];
        term /= fact[size_t(c + d)];
        total += term;
      }
  return total;
}

/// Parses expressions like "x*y*z + x + 2*y^-2 - 3" into a Laurent
/// polynomial. Terms are joined by + or -; each term is a product of an
/// optional integer coefficient and variable powers x, y, z with optional
/// integer exponents after '^'.
inline LaurentPolynomial parse_laurent(const std::string& text) {
  LaurentPolynomial out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(unsigned(text[i]))) ++i; };
  auto parse_int = [&]() -> long long {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = (text[i++] == '-');
    if (i >= text.size() || !std::isdigit(unsigned(text[i])))
      throw Error("laurent parse error: integer expected at position " + std::to_string(i));
    long long v = 0;
    while (i < text.size() && std::isdigit(unsigned(text[i]))) v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };

  skip_ws();
  if (i >= text.size()) throw Error("laurent parse error: empty expression");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    Integer sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error("laurent parse error: expected + or - at position " + std::to_string(i));
    }
    first = false;
    skip_ws();

    Integer coeff = sign;
    LaurentPolynomial::Exponent exp{0, 0, 0};
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit(unsigned(text[i]))) {
        coeff *= parse_int();
        saw_factor = true;
      } else if (i < text.size() && (text[i] == 'x' || text[i] == 'y' || text[i] == 'z')) {
        int axis = text[i] == 'x' ? 0 : text[i] == 'y' ? 1 : 2;
        ++i;
        long long e = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          e = parse_int();
        }
        exp[size_t(axis)] += e;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      if (i < text.size() && (text[i] == 'x' || text[i] == 'y' || text[i] == 'z'))
        continue;  // implicit product like "2x"
      break;
    }
    if (!saw_factor)
      throw Error("laurent parse error: empty term at position " + std::to_string(i));
    out.add_term(exp, coeff);
  }
  return out;
}

}  // namespace fano3
