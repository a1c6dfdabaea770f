#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "fano3/integer.hpp"

namespace fano3 {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
      if (int(r.size()) != cols_) throw Error("ragged initializer");
      for (long long x : r) a_.emplace_back(x);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Builds a 3xn matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<Vec3>& cols) {
    IntMatrix m(3, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
      for (int i = 0; i < 3; ++i) m.at(i, j) = cols[size_t(j)][size_t(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Integer& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec3 column3(int j) const {
    if (rows_ != 3) throw DimensionMismatch("column3 on a matrix with " +
                                            std::to_string(rows_) + " rows");
    return {at(0, j), at(1, j), at(2, j)};
  }

  std::vector<Integer> column(int j) const {
    std::vector<Integer> c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[size_t(i)] = at(i, j);
    return c;
  }

  std::vector<Integer> row(int i) const {
    std::vector<Integer> r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[size_t(j)] = at(i, j);
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Integer& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  std::vector<Integer> operator*(const std::vector<Integer>& x) const {
    if (int(x.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Integer> y(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (int j = 0; j < cols_; ++j) s += at(i, j) * x[size_t(j)];
      y[size_t(i)] = s;
    }
    return y;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  /// Shape-then-entries lexicographic order; used for canonical forms.
  std::strong_ordering operator<=>(const IntMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    for (size_t t = 0; t < a_.size(); ++t)
      if (auto c = a_[t].compare(o.a_[t]); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ' ';
        s += at(i, j).str();
      }
      s += '\n';
    }
    return s;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> a_;
};

/// Fraction-free Bareiss determinant.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace fano3
