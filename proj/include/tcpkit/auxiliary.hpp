#pragma once

#include "tcpkit/complementarity.hpp"
#include "tcpkit/linalg.hpp"
#include "tcpkit/monomials.hpp"
#include "tcpkit/tensor.hpp"

#include <optional>
#include <utility>

namespace tcpkit {

/// Above this many monomials the square auxiliary matrix is not materialized.
inline constexpr std::size_t kDefaultDenseCap = 5000;

/// Coefficient of x^alpha in (A x^{m-1})_i: the sum of a_{i i2..im} over all
/// tails (i2..im) whose multiplicity vector is alpha. `row` is 0-based.
inline Rational aggregate_coefficient(const SparseTensor& t, int row, const MultiIndex& alpha) {
  if (row < 0 || row >= t.dim()) throw Error("aggregate_coefficient: row index out of range");
  if (static_cast<int>(alpha.size()) != t.dim())
    throw Error("aggregate_coefficient: multi-index length does not match tensor dimension");
  if (alpha.degree() != t.order() - 1)
    throw Error("aggregate_coefficient: multi-index degree " + std::to_string(alpha.degree()) +
                " != m-1 = " + std::to_string(t.order() - 1));
  Rational sum = 0;
  for (const auto& [idx, coef] : t.entries()) {
    if (idx[0] != row) continue;
    auto tail = std::span<const int>(idx).subspan(1);
    if (MultiIndex::from_tuple(tail, static_cast<std::size_t>(t.dim())) == alpha) sum += coef;
  }
  return sum;
}

/// The polynomial map x -> A x^{m-1} written as coef * lift(x), with coef n x N,
/// plus its square zero-row padding.
class AuxiliarySystem {
 public:
  explicit AuxiliarySystem(const SparseTensor& t, std::size_t dense_cap = kDefaultDenseCap)
      : source_(t), basis_(t.order(), t.dim()), dense_cap_(dense_cap) {
    const auto n = static_cast<std::size_t>(t.dim());
    coef_ = QMatrix(n, basis_.size());
    for (const auto& [idx, c] : t.entries()) {
      auto tail = std::span<const int>(idx).subspan(1);
      std::size_t col = basis_.column_of(MultiIndex::from_tuple(tail, n));
      coef_(static_cast<std::size_t>(idx[0]), col) += c;
    }
  }

  const SparseTensor& source() const { return source_; }
  const MonomialBasis& basis() const { return basis_; }
  const QMatrix& coef() const { return coef_; }
  std::size_t n() const { return coef_.rows(); }
  std::size_t N() const { return coef_.cols(); }
  bool dense_available() const { return N() <= dense_cap_; }

  /// Square N x N matrix: coef on top, N-n zero rows below.
  QMatrix abar() const {
    if (!dense_available())
      throw Error("auxiliary matrix has N = " + std::to_string(N()) + " > dense cap " + std::to_string(dense_cap_));
    QMatrix a(N(), N());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < N(); ++j) a(i, j) = coef_(i, j);
    return a;
  }

  /// (M(A) | B): the pure-power columns and the mixed-monomial columns.
  std::pair<QMatrix, QMatrix> split_blocks() const {
    QMatrix major(n(), n()), mixed(n(), N() - n());
    for (std::size_t i = 0; i < n(); ++i) {
      for (std::size_t j = 0; j < n(); ++j) major(i, j) = coef_(i, j);
      for (std::size_t j = n(); j < N(); ++j) mixed(i, j - n()) = coef_(i, j);
    }
    return {std::move(major), std::move(mixed)};
  }

  /// B = O after aggregation (mixed entries may cancel).
  bool mixed_block_zero() const {
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = n(); j < N(); ++j)
        if (coef_(i, j) != 0) return false;
    return true;
  }

 private:
  SparseTensor source_;
  MonomialBasis basis_;
  QMatrix coef_;
  std::size_t dense_cap_;
};

/// (q, 0) with N - n trailing zeros.
template <class S>
std::vector<S> pad_rhs(const std::vector<S>& q, std::size_t N) {
  if (N < q.size()) throw Error("pad_rhs: N = " + std::to_string(N) + " < n = " + std::to_string(q.size()));
  std::vector<S> out(q);
  out.resize(N, S(0));
  return out;
}

/// Keeps the first n components and zeros the rest.
template <class S>
std::vector<S> truncate(const std::vector<S>& y, std::size_t n) {
  if (n > y.size()) throw Error("truncate: n exceeds vector length");
  std::vector<S> out(y.size(), S(0));
  std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n), out.begin());
  return out;
}

/// Exact check that x solves TCP(q, A).
inline bool verify_tcp(const SparseTensor& t, const QVector& q, const QVector& x) {
  if (q.size() != x.size() || static_cast<int>(x.size()) != t.dim()) return false;
  QVector omega = apply_deg(t, x);
  for (std::size_t i = 0; i < omega.size(); ++i) omega[i] += q[i];
  return is_complementary(x, omega);
}

/// Lifts a verified TCP solution x to y = (x^alpha)_alpha, a solution of LCP(qbar, Abar).
inline QVector lift_solution(const AuxiliarySystem& aux, const QVector& q, const QVector& x) {
  if (!verify_tcp(aux.source(), q, x)) throw Error("lift_solution: x is not a solution of TCP(q, A)");
  return aux.basis().lift(x);
}

}  // namespace tcpkit
