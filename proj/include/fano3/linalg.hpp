#pragma once

#include <optional>
#include <vector>

#include "fano3/matrix.hpp"

namespace fano3 {

/// Floor quotient for b > 0.
inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b < 0) --q;
  return q;
}

namespace detail {

inline void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
inline void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += c * row[b]
inline void add_row(IntMatrix& m, int a, int b, const Integer& c) {
  if (c == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}
inline void add_col(IntMatrix& m, int a, int b, const Integer& c) {
  if (c == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}
inline void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace detail

/// Row-style Hermite normal form: H = U * A with U unimodular, H in row
/// echelon form, pivots positive and entries above each pivot reduced into
/// [0, pivot).
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
  std::vector<int> pivot_cols;
};

inline HermiteResult hermite_normal_form(IntMatrix a) {
  using namespace detail;
  const int m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  int r = 0;
  std::vector<int> pivots;
  for (int j = 0; j < n && r < m; ++j) {
    // gcd-reduce column j among rows r..m-1
    while (true) {
      int p = -1;
      for (int i = r; i < m; ++i)
        if (a.at(i, j) != 0 && (p < 0 || abs_int(a.at(i, j)) < abs_int(a.at(p, j)))) p = i;
      if (p < 0) break;
      if (p != r) { swap_rows(a, r, p); swap_rows(u, r, p); }
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (a.at(i, j) == 0) continue;
        Integer q = a.at(i, j) / a.at(r, j);
        add_row(a, i, r, -q);
        add_row(u, i, r, -q);
        if (a.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(r, j) == 0) continue;
    if (a.at(r, j) < 0) { negate_row(a, r); negate_row(u, r); }
    for (int i = 0; i < r; ++i) {
      Integer q = fdiv(a.at(i, j), a.at(r, j));
      add_row(a, i, r, -q);
      add_row(u, i, r, -q);
    }
    pivots.push_back(j);
    ++r;
  }
  return {std::move(a), std::move(u), r, std::move(pivots)};
}

/// Smith normal form: left * A * right is diagonal with nonnegative invariant
/// factors, each dividing the next.
struct SmithDecomposition {
  std::vector<Integer> invariant_factors;  // length min(rows, cols)
  IntMatrix left;                          // rows x rows, unimodular
  IntMatrix right;                         // cols x cols, unimodular
  int rank = 0;
};

inline SmithDecomposition smith_normal_form(IntMatrix a) {
  using namespace detail;
  const int m = a.rows(), n = a.cols();
  const int k = std::min(m, n);
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  int t = 0;
  while (t < k) {
    // locate a nonzero entry of minimal magnitude in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a.at(i, j) != 0 &&
            (pi < 0 || abs_int(a.at(i, j)) < abs_int(a.at(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    if (pi != t) { swap_rows(a, t, pi); swap_rows(u, t, pi); }
    if (pj != t) { swap_cols(a, t, pj); swap_cols(v, t, pj); }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = a.at(i, t) / a.at(t, t);
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a.at(i, t) != 0) {  // remainder became the new, smaller pivot
          swap_rows(a, t, i); swap_rows(u, t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = a.at(t, j) / a.at(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a.at(t, j) != 0) {
          swap_cols(a, t, j); swap_cols(v, t, j);
          dirty = true;
        }
      }
    }

    // pivot must divide every remaining entry
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          add_row(a, t, i, 1);
          add_row(u, t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (a.at(t, t) < 0) { negate_row(a, t); negate_row(u, t); }
    ++t;
  }
  SmithDecomposition d;
  d.invariant_factors.resize(size_t(k));
  for (int i = 0; i < k; ++i) d.invariant_factors[size_t(i)] = a.at(i, i);
  d.left = std::move(u);
  d.right = std::move(v);
  d.rank = t;
  return d;
}

/// Z-basis of the saturated kernel {x : a.x = 0}, as columns, canonicalized
/// through the Hermite normal form of its transpose.
inline IntMatrix kernel_lattice(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const int n = a.cols();
  const int dim = n - s.rank;
  IntMatrix raw(n, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < n; ++i) raw.at(i, j) = s.right.at(i, s.rank + j);
  if (dim == 0) return raw;
  HermiteResult h = hermite_normal_form(raw.transpose());
  IntMatrix basis(n, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = h.h.at(j, i);
  return basis;
}

/// Exact inverse of a unimodular integer matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const int n = a.rows();
  // Gauss-Jordan over the rationals, then read back integers.
  std::vector<std::vector<Rational>> w(size_t(n), std::vector<Rational>(size_t(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[size_t(i)][size_t(j)] = Rational(a.at(i, j));
    w[size_t(i)][size_t(n + i)] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w[size_t(i)][size_t(c)] != 0) { p = i; break; }
    if (p < 0) throw Error("matrix is singular");
    std::swap(w[size_t(c)], w[size_t(p)]);
    Rational inv = Rational(1) / w[size_t(c)][size_t(c)];
    for (int j = 0; j < 2 * n; ++j) w[size_t(c)][size_t(j)] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[size_t(i)][size_t(c)] == 0) continue;
      Rational f = w[size_t(i)][size_t(c)];
      for (int j = 0; j < 2 * n; ++j) w[size_t(i)][size_t(j)] -= f * w[size_t(c)][size_t(j)];
    }
  }
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& q = w[size_t(i)][size_t(n + j)];
      if (boost::multiprecision::denominator(q) != 1)
        throw Error("matrix is not unimodular");
      r.at(i, j) = boost::multiprecision::numerator(q);
    }
  return r;
}

/// One integer solution of a.x = b, or nullopt when none exists.
inline std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a,
                                                         const std::vector<Integer>& b) {
  if (int(b.size()) != a.rows()) throw DimensionMismatch("solve_integer shape mismatch");
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Integer> c = s.left * b;
  const int n = a.cols();
  std::vector<Integer> y(size_t(n), Integer(0));
  for (int i = 0; i < int(c.size()); ++i) {
    if (i < s.rank) {
      const Integer& d = s.invariant_factors[size_t(i)];
      if (c[size_t(i)] % d != 0) return std::nullopt;
      y[size_t(i)] = c[size_t(i)] / d;
    } else if (c[size_t(i)] != 0) {
      return std::nullopt;
    }
  }
  return s.right * y;
}

}  // namespace fano3
