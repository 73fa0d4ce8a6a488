#pragma once

// Random generators and brute-force reference implementations shared by the tests.

#include "tcpkit/tcpkit.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace tcpkit::testkit {

inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("TCPKIT_DATA");
  return std::string(dir ? dir : "data") + "/" + name;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  /// p/q with |p| <= num, 1 <= q <= den.
  Rational rational(int num = 5, int den = 4) { return Rational(integer(-num, num), integer(1, den)); }
  Rational nonneg(int num = 5, int den = 4) { return Rational(integer(0, num), integer(1, den)); }

  QVector vec(std::size_t n, int num = 5, int den = 4) {
    QVector v(n);
    for (auto& x : v) x = rational(num, den);
    return v;
  }

  QMatrix matrix(std::size_t k, int num = 3, int den = 1) {
    QMatrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = rational(num, den);
    return m;
  }

  /// Each index tuple is stored with probability `density`.
  SparseTensor tensor(int m, int n, double density = 0.4, int num = 3) {
    SparseTensor t(m, n);
    TensorIndex idx(static_cast<std::size_t>(m), 0);
    for (bool more = true; more;) {
      if (coin(density)) t.set(idx, Rational(integer(-num, num)));
      more = false;
      for (std::size_t p = 0; p < idx.size(); ++p) {
        if (++idx[p] < n) {
          more = true;
          break;
        }
        idx[p] = 0;
      }
    }
    return t;
  }

  /// Random even-order tensor with B = O: only (i, j, ..., j) entries plus cancelling mixed pairs.
  SparseTensor tensor_zero_b(int m, int n, int num = 3) {
    SparseTensor t(m, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (coin(0.6)) {
          TensorIndex idx(static_cast<std::size_t>(m), j);
          idx[0] = i;
          t.set(idx, Rational(integer(-num, num)));
        }
    if (n >= 2 && coin()) {
      // c x1^{m-2} x2 split over two orderings with opposite signs
      const int i = integer(0, n - 1);
      TensorIndex a(static_cast<std::size_t>(m), 0), b(static_cast<std::size_t>(m), 0);
      a[0] = b[0] = i;
      a[1] = 1;
      b[2] = 1;
      const Rational c = integer(1, 3);
      t.add(a, c);
      t.add(b, -c);
    }
    return t;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// (A x^{m-1})_i by looping over every index tuple, reading entries through at().
inline QVector dense_apply(const SparseTensor& t, const QVector& x) {
  const int m = t.order(), n = t.dim();
  QVector out(static_cast<std::size_t>(n), Rational(0));
  TensorIndex idx(static_cast<std::size_t>(m), 0);
  for (bool more = true; more;) {
    Rational prod = t.at(idx);
    for (int p = 1; p < m; ++p) prod *= x[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
    out[static_cast<std::size_t>(idx[0])] += prod;
    more = false;
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (++idx[p] < n) {
        more = true;
        break;
      }
      idx[p] = 0;
    }
  }
  return out;
}

/// Every complementary basis solved by Gaussian elimination; only the solutions of
/// nondegenerate bases (unique z for the support) are returned.
inline std::vector<QVector> brute_lcp_vertices(const QMatrix& M, const QVector& q) {
  const std::size_t k = q.size();
  std::vector<QVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    // Unknowns z_S; equations (M z + q)_i = 0 for i in S.
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) S.push_back(i);
    QMatrix a(S.size(), S.size());
    QVector b(S.size());
    for (std::size_t r = 0; r < S.size(); ++r) {
      for (std::size_t c = 0; c < S.size(); ++c) a(r, c) = M(S[r], S[c]);
      b[r] = -q[S[r]];
    }
    auto sol = solve_affine(a, b);
    if (!sol || !sol->nullspace.empty()) continue;
    QVector z(k, Rational(0));
    for (std::size_t r = 0; r < S.size(); ++r) z[S[r]] = sol->particular[r];
    LcpInstance inst(M, q);
    if (verify(inst, z) && std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tcpkit::testkit
