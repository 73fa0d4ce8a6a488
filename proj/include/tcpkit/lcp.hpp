#pragma once

#include "tcpkit/complementarity.hpp"
#include "tcpkit/cone.hpp"
#include "tcpkit/falsify.hpp"
#include "tcpkit/linalg.hpp"
#include "tcpkit/verdict.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tcpkit {

inline constexpr std::size_t kDefaultLcpEnumerationCap = 12;
inline constexpr std::size_t kDefaultAdequacyCap = 8;

/// LCP(q, M): z >= 0, w = M z + q >= 0, z^T w = 0.
struct LcpInstance {
  QMatrix M;
  QVector q;

  LcpInstance(QMatrix m, QVector rhs) : M(std::move(m)), q(std::move(rhs)) {
    if (!M.is_square()) throw Error("LCP matrix must be square");
    if (q.size() != M.rows()) throw Error("LCP: q has length " + std::to_string(q.size()) + ", matrix is " +
                                          std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
  }
  std::size_t size() const { return q.size(); }
  QVector w(const QVector& z) const {
    QVector out = M * z;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += q[i];
    return out;
  }
};

inline bool verify(const LcpInstance& inst, const QVector& z) {
  if (z.size() != inst.size()) return false;
  return is_complementary(z, inst.w(z));
}

inline bool verify(const Matrix<double>& M, const std::vector<double>& q, const std::vector<double>& z,
                   double tol = kFloatTolerance) {
  if (z.size() != q.size() || M.rows() != q.size()) return false;
  std::vector<double> w = M * z;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += q[i];
  return is_complementary(z, w, tol);
}

// ---------------------------------------------------------------------------
// Lemke

enum class LemkeStatus { Solved, RayTermination, IterationLimit };

inline const char* to_string(LemkeStatus s) {
  switch (s) {
    case LemkeStatus::Solved: return "solved";
    case LemkeStatus::RayTermination: return "ray-termination";
    case LemkeStatus::IterationLimit: return "iteration-limit";
  }
  return "?";
}

template <class T>
struct LemkeResult {
  LemkeStatus status = LemkeStatus::IterationLimit;
  std::vector<T> z, w;
  std::size_t pivots = 0;
};

namespace detail {

template <class T>
bool positive(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return v > 0;
  else
    return v > 1e-12;
}

/// Lexicographic comparison of rows (rhs, B^{-1}) scaled by 1/pivot.
template <class T>
bool lex_less(const Matrix<T>& tab, std::size_t a, const T& pa, std::size_t b, const T& pb, std::size_t rhs_col,
              std::size_t k) {
  auto cmp = [&](std::size_t col) {
    T va = tab(a, col) / pa, vb = tab(b, col) / pb;
    if constexpr (std::is_same_v<T, Rational>) {
      return va < vb ? -1 : (va > vb ? 1 : 0);
    } else {
      if (std::fabs(va - vb) <= 1e-12 * (1 + std::fabs(va) + std::fabs(vb))) return 0;
      return va < vb ? -1 : 1;
    }
  };
  if (int c = cmp(rhs_col)) return c < 0;
  for (std::size_t col = 0; col < k; ++col)
    if (int c = cmp(col)) return c < 0;
  return false;
}

}  // namespace detail

/// Lemke's complementary pivoting with covering vector 1 and a lexicographic ratio test.
/// Ray termination is evidence of infeasibility only for suitable matrix classes.
template <class T>
LemkeResult<T> lemke_solve(const Matrix<T>& M, const std::vector<T>& q, std::size_t max_pivots = 0) {
  const std::size_t k = q.size();
  if (!M.is_square() || M.rows() != k) throw Error("lemke_solve: dimension mismatch");
  if (max_pivots == 0) max_pivots = std::max<std::size_t>(1000, k < 20 ? (std::size_t{1} << k) * k : 1u << 20);
  LemkeResult<T> res;
  res.z.assign(k, T(0));
  res.w = q;
  if (std::all_of(q.begin(), q.end(), [](const T& v) { return v >= 0; })) {
    res.status = LemkeStatus::Solved;
    return res;
  }

  // Columns: w_0..w_{k-1}, z_0..z_{k-1}, z0, rhs.  Tableau rows hold B^{-1}[I, -M, -1 | q].
  const std::size_t z0 = 2 * k, rhs = 2 * k + 1;
  Matrix<T> tab(k, 2 * k + 2);
  std::vector<std::size_t> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    tab(i, i) = T(1);
    for (std::size_t j = 0; j < k; ++j) tab(i, k + j) = -M(i, j);
    tab(i, z0) = T(-1);
    tab(i, rhs) = q[i];
    basis[i] = i;
  }

  auto pivot = [&](std::size_t r, std::size_t col) {
    T p = tab(r, col);
    for (std::size_t c = 0; c < tab.cols(); ++c) tab(r, c) /= p;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r) continue;
      T f = tab(i, col);
      if (f == T(0)) continue;
      for (std::size_t c = 0; c < tab.cols(); ++c) tab(i, c) -= f * tab(r, c);
    }
    basis[r] = col;
    ++res.pivots;
  };

  // z0 enters at the lexicographically smallest row (rhs, B^{-1}); every entry of its column is -1.
  std::size_t r = 0;
  const T one(1);
  for (std::size_t i = 1; i < k; ++i)
    if (detail::lex_less(tab, i, one, r, one, rhs, k)) r = i;
  std::size_t leaving = basis[r];
  pivot(r, z0);

  while (res.pivots < max_pivots) {
    std::size_t entering = leaving < k ? leaving + k : leaving - k;
    std::optional<std::size_t> best;
    std::optional<std::size_t> z0_row;
    for (std::size_t i = 0; i < k; ++i) {
      if (!detail::positive(tab(i, entering))) continue;
      if (!best || detail::lex_less(tab, i, tab(i, entering), *best, tab(*best, entering), rhs, k)) best = i;
      if (basis[i] == z0) z0_row = i;
    }
    if (!best) {
      res.status = LemkeStatus::RayTermination;
      return res;
    }
    // Prefer letting z0 leave when it ties on the rhs ratio.
    if (z0_row && *z0_row != *best) {
      T a = tab(*z0_row, rhs) / tab(*z0_row, entering), b = tab(*best, rhs) / tab(*best, entering);
      bool tie;
      if constexpr (std::is_same_v<T, Rational>)
        tie = a == b;
      else
        tie = std::fabs(a - b) <= 1e-12 * (1 + std::fabs(a));
      if (tie) best = z0_row;
    }
    leaving = basis[*best];
    pivot(*best, entering);
    if (leaving == z0) {
      res.z.assign(k, T(0));
      res.w.assign(k, T(0));
      for (std::size_t i = 0; i < k; ++i) {
        if (basis[i] < k)
          res.w[basis[i]] = tab(i, rhs);
        else
          res.z[basis[i] - k] = tab(i, rhs);
      }
      // Recompute w from z so float results are self-consistent.
      std::vector<T> w = M * res.z;
      for (std::size_t i = 0; i < k; ++i) w[i] += q[i];
      res.w = std::move(w);
      res.status = LemkeStatus::Solved;
      return res;
    }
  }
  res.status = LemkeStatus::IterationLimit;
  return res;
}

inline LemkeResult<Rational> lemke_solve(const LcpInstance& inst, std::size_t max_pivots = 0) {
  return lemke_solve<Rational>(inst.M, inst.q, max_pivots);
}

// ---------------------------------------------------------------------------
// Exact enumeration

/// One complementary support's solution set {z : z_i = 0 off S, w_i = 0 on S, z >= 0, w >= 0},
/// kept both as base + affine directions and as a V-representation.
struct SolutionPiece {
  std::vector<std::size_t> support;  // 0-based
  QVector base;                      // one solution of the piece (a vertex)
  std::vector<QVector> directions;   // nullspace of the support system, before clipping by z, w >= 0
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  bool w_constant = true;            // w is the same at every point of the piece
};

namespace detail {

inline bool in_piece_equalities(const LcpInstance& inst, const std::vector<bool>& in_s, const QVector& z,
                                bool homogeneous) {
  QVector w = inst.M * z;
  if (!homogeneous)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += inst.q[i];
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!in_s[i] && z[i] != 0) return false;
    if (in_s[i] && w[i] != 0) return false;
  }
  return true;
}

inline bool piece_contained(const LcpInstance& inst, const SolutionPiece& p, const SolutionPiece& q) {
  std::vector<bool> in_q(inst.size(), false);
  for (auto i : q.support) in_q[i] = true;
  for (const auto& v : p.vertices)
    if (!in_piece_equalities(inst, in_q, v, false)) return false;
  for (const auto& r : p.rays)
    if (!in_piece_equalities(inst, in_q, r, true)) return false;
  return true;
}

inline std::optional<SolutionPiece> support_piece(const LcpInstance& inst, const std::vector<std::size_t>& s) {
  const std::size_t k = inst.size(), d = s.size();
  std::vector<bool> in_s(k, false);
  for (auto i : s) in_s[i] = true;
  std::vector<QVector> ineq_rows, eq_rows;
  QVector ineq_rhs, eq_rhs;
  for (std::size_t a = 0; a < d; ++a) {
    QVector e(d, Rational(0));
    e[a] = 1;
    ineq_rows.push_back(std::move(e));
    ineq_rhs.push_back(0);
  }
  for (std::size_t i = 0; i < k; ++i) {
    QVector row(d);
    for (std::size_t a = 0; a < d; ++a) row[a] = inst.M(i, s[a]);
    if (in_s[i]) {
      eq_rows.push_back(std::move(row));
      eq_rhs.push_back(-inst.q[i]);
    } else {
      ineq_rows.push_back(std::move(row));
      ineq_rhs.push_back(-inst.q[i]);
    }
  }
  Polyhedron poly;
  if (d == 0) {
    if (std::any_of(inst.q.begin(), inst.q.end(), [](const Rational& v) { return v < 0; })) return std::nullopt;
    poly.vertices.push_back({});
  } else {
    poly = polyhedron_generators(d, ineq_rows, ineq_rhs, eq_rows, eq_rhs);
  }
  if (poly.empty()) return std::nullopt;
  if (!poly.lineality.empty()) throw Error("support piece has lineality despite z >= 0");

  auto embed = [&](const QVector& v) {
    QVector out(k, Rational(0));
    for (std::size_t a = 0; a < d; ++a) out[s[a]] = v[a];
    return out;
  };
  SolutionPiece piece;
  piece.support = s;
  for (const auto& v : poly.vertices) piece.vertices.push_back(embed(v));
  for (const auto& r : poly.rays) piece.rays.push_back(embed(r));
  std::sort(piece.vertices.begin(), piece.vertices.end());
  std::sort(piece.rays.begin(), piece.rays.end());
  piece.base = piece.vertices.front();

  if (d > 0) {
    QMatrix mss(eq_rows.size(), d);
    for (std::size_t r = 0; r < eq_rows.size(); ++r)
      for (std::size_t a = 0; a < d; ++a) mss(r, a) = eq_rows[r][a];
    if (auto sol = solve_affine(mss, eq_rhs))
      for (const auto& n : sol->nullspace) piece.directions.push_back(embed(n));
  }

  const QVector w0 = inst.w(piece.base);
  for (const auto& v : piece.vertices)
    if (inst.w(v) != w0) piece.w_constant = false;
  for (const auto& r : piece.rays)
    if (!is_zero(inst.M * r)) piece.w_constant = false;
  return piece;
}

}  // namespace detail

/// The full solution set of LCP(q, M) as a union of polyhedral pieces, one per maximal
/// complementary support. Pieces contained in another piece are dropped.
inline std::vector<SolutionPiece> enumerate_solutions(const LcpInstance& inst,
                                                      std::size_t cap = kDefaultLcpEnumerationCap) {
  const std::size_t k = inst.size();
  if (k > cap) throw Error("LCP enumeration: size " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  std::vector<SolutionPiece> all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (auto p = detail::support_piece(inst, s)) all.push_back(std::move(*p));
  }
  // Larger supports first so equal sets keep the representative with the widest support.
  std::stable_sort(all.begin(), all.end(),
                   [](const SolutionPiece& a, const SolutionPiece& b) { return a.support.size() > b.support.size(); });
  std::vector<SolutionPiece> kept;
  for (auto& p : all) {
    bool contained = false;
    for (const auto& q : kept)
      if (detail::piece_contained(inst, p, q)) {
        contained = true;
        break;
      }
    if (!contained) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(),
            [](const SolutionPiece& a, const SolutionPiece& b) { return a.support < b.support; });
  return kept;
}

/// True when z lies in some piece.
inline bool pieces_contain(const LcpInstance& inst, const std::vector<SolutionPiece>& pieces, const QVector& z) {
  if (!verify(inst, z)) return false;
  QVector w = inst.w(z);
  for (const auto& p : pieces) {
    std::vector<bool> in_s(inst.size(), false);
    for (auto i : p.support) in_s[i] = true;
    bool ok = true;
    for (std::size_t i = 0; i < z.size() && ok; ++i) ok = in_s[i] ? w[i] == 0 : z[i] == 0;
    if (ok) return true;
  }
  return false;
}

struct WUniquenessReport {
  bool unique = true;
  bool vacuous = false;  // empty solution set
  std::vector<QVector> w_values;
  std::optional<std::pair<QVector, QVector>> witness_pair;  // two z with different w
};

inline WUniquenessReport w_unique(const LcpInstance& inst, std::size_t cap = kDefaultLcpEnumerationCap) {
  WUniquenessReport rep;
  auto pieces = enumerate_solutions(inst, cap);
  if (pieces.empty()) {
    rep.vacuous = true;
    return rep;
  }
  std::optional<QVector> first_z;
  for (const auto& p : pieces) {
    for (const auto& v : p.vertices) {
      QVector w = inst.w(v);
      if (std::find(rep.w_values.begin(), rep.w_values.end(), w) == rep.w_values.end()) {
        rep.w_values.push_back(w);
        if (!first_z)
          first_z = v;
        else if (!rep.witness_pair)
          rep.witness_pair = std::make_pair(*first_z, v);
      }
    }
    for (const auto& r : p.rays) {
      QVector mr = inst.M * r;
      if (is_zero(mr)) continue;
      QVector moved = p.base;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += r[i];
      QVector w = inst.w(moved);
      if (std::find(rep.w_values.begin(), rep.w_values.end(), w) == rep.w_values.end()) rep.w_values.push_back(w);
      if (!rep.witness_pair) rep.witness_pair = std::make_pair(p.base, moved);
    }
  }
  rep.unique = rep.w_values.size() <= 1;
  return rep;
}

// ---------------------------------------------------------------------------
// Matrix column adequacy

/// Exact decision for k <= cap: M is column adequate iff M r = 0 on every extreme ray of
/// every cone {sigma_i z_i >= 0, sigma_i (Mz)_i <= 0}. Cones for -sigma are mirror images,
/// so only sigma with sigma_1 = +1 are built. Above the cap, falls back to search.
inline Verdict matrix_column_adequate(const QMatrix& M, std::size_t cap = kDefaultAdequacyCap,
                                      const FalsifyConfig& search = {}) {
  if (!M.is_square()) throw Error("matrix_column_adequate: matrix must be square");
  const std::size_t k = M.rows();
  Verdict v;
  if (k > cap) {
    SparseTensor t(2, static_cast<int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t.set({static_cast<int>(i), static_cast<int>(j)}, M(i, j));
    v.counterexample = falsify(t, Condition::ColumnAdequate, search, &v.search);
    v.status = v.counterexample ? Status::Fails : Status::Unknown;
    v.note = "size " + std::to_string(k) + " exceeds the exact cone cap " + std::to_string(cap);
    return v;
  }
  ConeCertificate cert;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (k ? k - 1 : 0)); ++mask) {
    std::vector<int> sigma(k, 1);
    for (std::size_t i = 1; i < k; ++i) sigma[i] = (mask >> (i - 1) & 1) ? -1 : 1;
    auto dd = DoubleDescription::orthant(sigma);
    for (std::size_t i = 0; i < k; ++i) {
      QVector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = -sigma[i] * M(i, j);
      dd.add_inequality(row);
    }
    auto rays = dd.rays();
    for (const auto& r : rays) {
      QVector mr = M * r;
      if (is_zero(mr)) continue;
      Counterexample ce;
      ce.point = r;
      ce.image = mr;
      ce.condition = to_string(Condition::ColumnAdequate);
      for (std::size_t i = 0; i < k; ++i) ce.condition_values.push_back(r[i] * mr[i]);
      v.status = Status::Fails;
      v.counterexample = std::move(ce);
      return v;
    }
    cert.signs.push_back(sigma);
    cert.rays.push_back(std::move(rays));
  }
  v.status = Status::Holds;
  v.certificate = Certificate{"M r = 0 on every extreme ray of every sign-orthant cone", std::move(cert)};
  return v;
}

}  // namespace tcpkit
