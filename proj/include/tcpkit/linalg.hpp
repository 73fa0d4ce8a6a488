#pragma once

#include "tcpkit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tcpkit {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("matrix data length does not match dimensions");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  std::vector<T> operator*(std::span<const T> x) const {
    if (x.size() != cols_) throw Error("matrix-vector dimension mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      T acc(0);
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& a = (*this)(r, c);
        if (a != 0) acc += a * x[c];
      }
      y[r] = acc;
    }
    return y;
  }
  std::vector<T> operator*(const std::vector<T>& x) const { return (*this) * std::span<const T>(x); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  bool is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && (*this)(r, c) != 0) return false;
    return true;
  }

  /// Exactly one entry equal to 1 in each row and column, all others 0.
  bool is_permutation() const {
    if (!is_square()) return false;
    std::vector<int> col_count(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      int ones = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& v = (*this)(r, c);
        if (v == 1) {
          ++ones;
          ++col_count[c];
        } else if (v != 0) {
          return false;
        }
      }
      if (ones != 1) return false;
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int k) { return k == 1; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Rational dot(const QVector& a, const QVector& b) {
  return dot<Rational>(std::span<const Rational>(a), std::span<const Rational>(b));
}

inline bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Scales a nonzero vector to the unique primitive integer vector in its ray.
inline QVector primitive(QVector v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  }
  for (auto& x : v) {
    x *= l;
    if (x != 0) g = boost::multiprecision::gcd(g, Integer(abs(boost::multiprecision::numerator(x))));
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Reduced row echelon form over the rationals. Returns pivot column indices.
inline std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMatrix a) { return rref(a).size(); }

/// Solution set {x : A x = b} as particular + span(nullspace); nullopt when inconsistent.
struct AffineSolution {
  QVector particular;
  std::vector<QVector> nullspace;  // primitive integer basis
};

inline std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error("solve_affine: rhs length mismatch");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = aug(r, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, free);
    sol.nullspace.push_back(primitive(std::move(v)));
  }
  return sol;
}

inline QMatrix to_rational(const Matrix<double>& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

inline Matrix<double> to_double(const QMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

}  // namespace tcpkit
