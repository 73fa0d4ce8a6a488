#pragma once

#include "tcpkit/linalg.hpp"
#include "tcpkit/rational.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace tcpkit {

/// Multi-index into a tensor, 0-based internally.
using TensorIndex = std::vector<int>;

/// Order-m, dimension-n real tensor stored as a map from index tuples to
/// nonzero rational coefficients. Storing a zero removes the key.
class SparseTensor {
 public:
  SparseTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2) throw Error("tensor order must be >= 2, got " + std::to_string(order));
    if (dim < 1) throw Error("tensor dimension must be >= 1, got " + std::to_string(dim));
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::map<TensorIndex, Rational>& entries() const { return entries_; }

  Rational at(const TensorIndex& idx) const {
    check_index(idx);
    auto it = entries_.find(idx);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(const TensorIndex& idx, const Rational& value) {
    check_index(idx);
    if (value == 0)
      entries_.erase(idx);
    else
      entries_[idx] = value;
  }

  /// Adds to the stored coefficient; a sum of zero deletes the key.
  void add(const TensorIndex& idx, const Rational& value) {
    check_index(idx);
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    }
  }

  /// Convenience for 1-based literals, e.g. t.set1({1, 1, 1, 2}, -2).
  void set1(std::initializer_list<int> one_based, const Rational& value) {
    TensorIndex idx;
    for (int i : one_based) idx.push_back(i - 1);
    set(idx, value);
  }

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void check_index(const TensorIndex& idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw Error("index has " + std::to_string(idx.size()) + " components, tensor order is " +
                  std::to_string(order_));
    for (int i : idx)
      if (i < 0 || i >= dim_)
        throw Error("index component " + std::to_string(i + 1) + " outside [1, " + std::to_string(dim_) + "]");
  }

  int order_;
  int dim_;
  std::map<TensorIndex, Rational> entries_;
};

namespace detail {
template <class S>
S coeff_as(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>)
    return r;
  else
    return static_cast<S>(to_double(r));
}
}  // namespace detail

/// (A x^{m-1})_i = sum of a_{i i2..im} x_{i2} ... x_{im}.
template <class S>
std::vector<S> apply_deg(const SparseTensor& t, std::span<const S> x) {
  if (static_cast<int>(x.size()) != t.dim())
    throw Error("apply_deg: vector length " + std::to_string(x.size()) + " != tensor dimension " +
                std::to_string(t.dim()));
  std::vector<S> out(x.size(), S(0));
  for (const auto& [idx, coef] : t.entries()) {
    S prod = detail::coeff_as<S>(coef);
    for (std::size_t p = 1; p < idx.size() && prod != 0; ++p) prod *= x[idx[p]];
    out[idx[0]] += prod;
  }
  return out;
}

template <class S>
std::vector<S> apply_deg(const SparseTensor& t, const std::vector<S>& x) {
  return apply_deg<S>(t, std::span<const S>(x));
}

/// A x^m = sum of a_{i1..im} x_{i1} ... x_{im}.
template <class S>
S apply_full(const SparseTensor& t, std::span<const S> x) {
  if (static_cast<int>(x.size()) != t.dim())
    throw Error("apply_full: vector length " + std::to_string(x.size()) + " != tensor dimension " +
                std::to_string(t.dim()));
  S acc(0);
  for (const auto& [idx, coef] : t.entries()) {
    S prod = detail::coeff_as<S>(coef);
    for (std::size_t p = 0; p < idx.size() && prod != 0; ++p) prod *= x[idx[p]];
    acc += prod;
  }
  return acc;
}

template <class S>
S apply_full(const SparseTensor& t, const std::vector<S>& x) {
  return apply_full<S>(t, std::span<const S>(x));
}

/// Componentwise power x^{[k]}.
template <class S>
std::vector<S> power(const std::vector<S>& x, int k) {
  std::vector<S> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    S p(1);
    for (int e = 0; e < k; ++e) p *= x[i];
    out[i] = p;
  }
  return out;
}

/// Restriction of all indices to `subset` (0-based), reindexed in increasing order.
inline SparseTensor principal_subtensor(const SparseTensor& t, std::vector<int> subset) {
  if (subset.empty()) throw Error("principal_subtensor: index set is empty");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw Error("principal_subtensor: index set has duplicates");
  if (subset.front() < 0 || subset.back() >= t.dim())
    throw Error("principal_subtensor: index set is not contained in [1, " + std::to_string(t.dim()) + "]");
  std::vector<int> position(t.dim(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) position[subset[k]] = static_cast<int>(k);
  SparseTensor sub(t.order(), static_cast<int>(subset.size()));
  for (const auto& [idx, coef] : t.entries()) {
    TensorIndex mapped(idx.size());
    bool inside = true;
    for (std::size_t p = 0; p < idx.size() && inside; ++p) {
      mapped[p] = position[idx[p]];
      inside = mapped[p] >= 0;
    }
    if (inside) sub.set(mapped, coef);
  }
  return sub;
}

/// M(A)_{ij} = a_{ij...j}.
inline QMatrix majorization(const SparseTensor& t) {
  const auto n = static_cast<std::size_t>(t.dim());
  QMatrix m(n, n);
  for (const auto& [idx, coef] : t.entries()) {
    if (std::all_of(idx.begin() + 2, idx.end(), [&](int k) { return k == idx[1]; }))
      m(idx[0], idx[1]) = coef;
  }
  return m;
}

/// True iff every stored tuple has i2 = ... = im.
inline bool is_row_diagonal(const SparseTensor& t) {
  return std::all_of(t.entries().begin(), t.entries().end(), [](const auto& kv) {
    const auto& idx = kv.first;
    return std::all_of(idx.begin() + 1, idx.end(), [&](int k) { return k == idx[1]; });
  });
}

inline SparseTensor identity_tensor(int order, int dim) {
  SparseTensor t(order, dim);
  for (int i = 0; i < dim; ++i) t.set(TensorIndex(order, i), 1);
  return t;
}

/// Product M * I_m in the general tensor product sense: entries (i, j, ..., j) = M_ij.
inline SparseTensor matrix_times_identity(const QMatrix& m, int order) {
  if (!m.is_square()) throw Error("matrix_times_identity: matrix must be square");
  SparseTensor t(order, static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      TensorIndex idx(order, static_cast<int>(j));
      idx[0] = static_cast<int>(i);
      t.set(idx, m(i, j));
    }
  return t;
}

/// P A Q for diagonal P, Q: b_{i1..im} = p_{i1} a_{i1..im} q_{i2} ... q_{im}.
inline SparseTensor transform_diag(const SparseTensor& t, const QMatrix& p, const QMatrix& q) {
  const auto n = static_cast<std::size_t>(t.dim());
  if (p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n)
    throw Error("transform_diag: P and Q must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!p.is_diagonal() || !q.is_diagonal()) throw Error("transform_diag: P and Q must be diagonal");
  SparseTensor out(t.order(), t.dim());
  for (const auto& [idx, coef] : t.entries()) {
    Rational v = p(idx[0], idx[0]) * coef;
    for (std::size_t k = 1; k < idx.size(); ++k) v *= q(idx[k], idx[k]);
    out.set(idx, v);
  }
  return out;
}

/// Permutation with p_{i, sigma(i)} = 1, 0-based.
inline std::vector<int> permutation_of(const QMatrix& p) {
  if (!p.is_permutation()) throw Error("matrix is not a permutation matrix");
  std::vector<int> sigma(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j) == 1) sigma[i] = static_cast<int>(j);
  return sigma;
}

inline QMatrix permutation_matrix(const std::vector<int>& sigma) {
  QMatrix p(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) p(i, sigma[i]) = 1;
  return p;
}

/// P^T A P: entry at (sigma(i1), ..., sigma(im)) equals a_{i1..im}.
inline SparseTensor transform_perm(const SparseTensor& t, const QMatrix& p) {
  if (p.rows() != static_cast<std::size_t>(t.dim()))
    throw Error("transform_perm: permutation size does not match tensor dimension");
  const auto sigma = permutation_of(p);
  SparseTensor out(t.order(), t.dim());
  for (const auto& [idx, coef] : t.entries()) {
    TensorIndex mapped(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) mapped[k] = sigma[idx[k]];
    out.set(mapped, coef);
  }
  return out;
}

/// Flattened double-precision copy of a tensor for the sampling and Newton paths.
class FloatTensor {
 public:
  explicit FloatTensor(const SparseTensor& t) : order_(t.order()), dim_(t.dim()) {
    for (const auto& [idx, coef] : t.entries()) {
      index_.insert(index_.end(), idx.begin(), idx.end());
      coef_.push_back(to_double(coef));
    }
  }

  int order() const { return order_; }
  int dim() const { return dim_; }

  void apply_deg(std::span<const double> x, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    const auto m = static_cast<std::size_t>(order_);
    for (std::size_t e = 0; e < coef_.size(); ++e) {
      const int* idx = index_.data() + e * m;
      double prod = coef_[e];
      for (std::size_t p = 1; p < m; ++p) prod *= x[idx[p]];
      out[idx[0]] += prod;
    }
  }

  std::vector<double> apply_deg(std::span<const double> x) const {
    std::vector<double> out(dim_);
    apply_deg(x, out);
    return out;
  }

  double apply_full(std::span<const double> x) const {
    const auto m = static_cast<std::size_t>(order_);
    double acc = 0;
    for (std::size_t e = 0; e < coef_.size(); ++e) {
      const int* idx = index_.data() + e * m;
      double prod = coef_[e];
      for (std::size_t p = 0; p < m; ++p) prod *= x[idx[p]];
      acc += prod;
    }
    return acc;
  }

  /// Jacobian of x -> A x^{m-1}, row-major n x n.
  std::vector<double> jacobian(std::span<const double> x) const {
    const auto n = static_cast<std::size_t>(dim_);
    const auto m = static_cast<std::size_t>(order_);
    std::vector<double> jac(n * n, 0.0);
    for (std::size_t e = 0; e < coef_.size(); ++e) {
      const int* idx = index_.data() + e * m;
      for (std::size_t p = 1; p < m; ++p) {
        double prod = coef_[e];
        for (std::size_t r = 1; r < m; ++r)
          if (r != p) prod *= x[idx[r]];
        jac[static_cast<std::size_t>(idx[0]) * n + static_cast<std::size_t>(idx[p])] += prod;
      }
    }
    return jac;
  }

 private:
  int order_;
  int dim_;
  std::vector<int> index_;
  std::vector<double> coef_;
};

}  // namespace tcpkit
