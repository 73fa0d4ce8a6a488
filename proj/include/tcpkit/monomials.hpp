#pragma once

#include "tcpkit/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace tcpkit {

/// Exponent vector alpha in Z^n_+; the monomial x^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
      if (e < 0) throw Error("multi-index exponents must be nonnegative");
  }
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }
  int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

  int nonzero_count() const {
    return static_cast<int>(std::count_if(exp_.begin(), exp_.end(), [](int e) { return e != 0; }));
  }
  /// Exactly one nonzero component (which then equals the degree).
  bool is_pure_power() const { return nonzero_count() == 1; }

  /// Multiplicity vector of a tuple of variable indices (0-based).
  static MultiIndex from_tuple(std::span<const int> vars, std::size_t n) {
    std::vector<int> e(n, 0);
    for (int v : vars) ++e.at(static_cast<std::size_t>(v));
    return MultiIndex(std::move(e));
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exp_;
};

namespace detail {
inline void check_same_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size())
    throw Error("multi-index length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}
}  // namespace detail

/// Greater iff the leftmost nonzero entry of a - b is positive.
inline std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
  detail::check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

/// Total degree first, ties by lex.
inline std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
  detail::check_same_length(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return lex_compare(a, b);
}

/// Modified graded lex: pure powers rank above every multi-index with two or more
/// nonzero components; pure powers compare by lex, all others by grlex.
inline std::strong_ordering mglo_compare(const MultiIndex& a, const MultiIndex& b) {
  detail::check_same_length(a, b);
  const bool pa = a.is_pure_power(), pb = b.is_pure_power();
  if (pa && pb) return lex_compare(a, b);
  if (pa) return std::strong_ordering::greater;
  if (pb) return std::strong_ordering::less;
  return grlex_compare(a, b);
}

/// Product of powers, with 0^0 = 1.
template <class S>
S evaluate(const MultiIndex& alpha, std::span<const S> x) {
  if (alpha.size() != x.size())
    throw Error("evaluate: multi-index length " + std::to_string(alpha.size()) + " != vector length " +
                std::to_string(x.size()));
  S acc(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int e = 0; e < alpha[i]; ++e) acc *= x[i];
  return acc;
}

template <class S>
S evaluate(const MultiIndex& alpha, const std::vector<S>& x) {
  return evaluate<S>(alpha, std::span<const S>(x));
}

/// "x1^2*x3", zero exponents omitted, unit powers written bare; "1" for the zero index.
inline std::string monomial_label(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (alpha[i] != 1) s += "^" + std::to_string(alpha[i]);
  }
  return s.empty() ? "1" : s;
}

/// C(m+n-2, n-1): number of degree-(m-1) monomials in n variables.
inline std::size_t monomial_count(int m, int n) {
  if (m < 2 || n < 1) throw Error("monomial_count: need m >= 2 and n >= 1");
  const std::size_t top = static_cast<std::size_t>(m + n - 2);
  std::size_t k = static_cast<std::size_t>(n - 1);
  k = std::min(k, top - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

/// All degree-(m-1) monomials in n variables, strictly decreasing under mglo.
/// The first n labels are the pure powers x1^{m-1}, ..., xn^{m-1}.
class MonomialBasis {
 public:
  MonomialBasis(int m, int n) : m_(m), n_(n) {
    if (m < 2) throw Error("basis: order m must be >= 2");
    if (n < 1) throw Error("basis: dimension n must be >= 1");
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    enumerate(cur, 0, m - 1);
    std::sort(labels_.begin(), labels_.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return mglo_compare(a, b) > 0; });
    for (std::size_t j = 0; j < labels_.size(); ++j) column_.emplace(labels_[j].exponents(), j);
  }

  int order() const { return m_; }
  int dim() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<MultiIndex>& labels() const { return labels_; }
  const MultiIndex& operator[](std::size_t j) const { return labels_[j]; }

  std::size_t column_of(const MultiIndex& alpha) const {
    auto it = column_.find(alpha.exponents());
    if (it == column_.end()) throw Error("monomial " + monomial_label(alpha) + " is not in the basis");
    return it->second;
  }

  /// y_j = x^{alpha_j}; in particular y_i = x_i^{m-1} for the first n entries.
  template <class S>
  std::vector<S> lift(std::span<const S> x) const {
    if (static_cast<int>(x.size()) != n_)
      throw Error("lift: vector length " + std::to_string(x.size()) + " != " + std::to_string(n_));
    std::vector<S> y;
    y.reserve(labels_.size());
    for (const auto& alpha : labels_) y.push_back(evaluate<S>(alpha, x));
    return y;
  }

  template <class S>
  std::vector<S> lift(const std::vector<S>& x) const {
    return lift<S>(std::span<const S>(x));
  }

 private:
  void enumerate(std::vector<int>& cur, std::size_t pos, int remaining) {
    if (pos + 1 == cur.size()) {
      cur[pos] = remaining;
      labels_.emplace_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      enumerate(cur, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  }

  int m_;
  int n_;
  std::vector<MultiIndex> labels_;
  std::map<std::vector<int>, std::size_t> column_;
};

}  // namespace tcpkit
