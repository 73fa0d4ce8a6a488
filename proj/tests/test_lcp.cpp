#include "support.hpp"

#include <gtest/gtest.h>

using namespace tcpkit;
using tcpkit::testkit::Rng;

namespace {

/// Diagonally dominant with positive diagonal: a P-matrix, so LCP(q, M) has one solution.
QMatrix p_matrix(Rng& rng, std::size_t k) {
  QMatrix M = rng.matrix(k, 2);
  for (std::size_t i = 0; i < k; ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) off += abs(M(i, j));
    M(i, i) = off + rng.integer(1, 3);
  }
  return M;
}

/// A^T A: symmetric positive semidefinite, hence column adequate.
QMatrix symmetric_psd(Rng& rng, std::size_t k) {
  QMatrix A = rng.matrix(k, 2);
  QMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < k; ++r) out(i, j) += A(r, i) * A(r, j);
  return out;
}

QVector random_feasible_q(Rng& rng, const QMatrix& M) {
  const std::size_t k = M.rows();
  QVector z(k), w(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rng.coin())
      z[i] = rng.nonneg(4, 3);
    else
      w[i] = rng.nonneg(4, 3);
  }
  QVector mz = M * z, q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = w[i] - mz[i];
  return q;
}

}  // namespace

TEST(Lemke, SolvesPMatrixInstancesExactlyAndInFloat) {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 5));
    QMatrix M = p_matrix(rng, k);
    QVector q = rng.vec(k);
    auto r = lemke_solve(LcpInstance(M, q));
    ASSERT_EQ(r.status, LemkeStatus::Solved);
    EXPECT_TRUE(verify(LcpInstance(M, q), r.z));
    // Unique solution: agrees with the brute-force basis enumeration.
    EXPECT_EQ(testkit::brute_lcp_vertices(M, q), std::vector<QVector>{r.z});
    auto rf = lemke_solve(to_double(M), to_double(q));
    ASSERT_EQ(rf.status, LemkeStatus::Solved);
    EXPECT_TRUE(verify(to_double(M), to_double(q), rf.z, 1e-9));
  }
}

TEST(Lemke, ReportsRayTerminationOnInfeasibleInstances) {
  // w = -z - 1 can never be nonnegative.
  auto r = lemke_solve(LcpInstance(QMatrix{{-1}}, QVector{-1}));
  EXPECT_EQ(r.status, LemkeStatus::RayTermination);
  auto r2 = lemke_solve(LcpInstance(QMatrix{{0, 0}, {0, 0}}, QVector{1, -1}));
  EXPECT_EQ(r2.status, LemkeStatus::RayTermination);
}

TEST(Lemke, DegenerateInstancesTerminate) {
  // Many ties in the ratio test; the lexicographic rule must not cycle.
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 4;
    QMatrix M = symmetric_psd(rng, k);
    QVector q(k);
    for (auto& v : q) v = rng.integer(-1, 0);
    auto r = lemke_solve(LcpInstance(M, q));
    // PSD matrices are in the class where ray termination certifies infeasibility.
    if (r.status == LemkeStatus::Solved)
      EXPECT_TRUE(verify(LcpInstance(M, q), r.z));
    else
      EXPECT_EQ(r.status, LemkeStatus::RayTermination);
    EXPECT_EQ(r.status == LemkeStatus::Solved, !enumerate_solutions(LcpInstance(M, q)).empty());
  }
}

TEST(Enumeration, VerticesMatchBruteForce) {
  Rng rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
    QMatrix M = rng.matrix(k, 3);
    QVector q = rng.vec(k, 4, 1);
    LcpInstance inst(M, q);
    auto pieces = enumerate_solutions(inst);
    std::vector<QVector> verts;
    for (const auto& p : pieces) {
      for (const auto& v : p.vertices) {
        EXPECT_TRUE(verify(inst, v));
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
      }
      for (const auto& r : p.rays) {
        QVector moved = p.vertices.front();
        for (std::size_t i = 0; i < k; ++i) moved[i] += 3 * r[i];
        EXPECT_TRUE(verify(inst, moved));
      }
    }
    // Each isolated basic solution found by the oracle is some piece's vertex or lies in a piece.
    for (const auto& z : testkit::brute_lcp_vertices(M, q)) EXPECT_TRUE(pieces_contain(inst, pieces, z));
    if (pieces.empty()) {
      EXPECT_TRUE(testkit::brute_lcp_vertices(M, q).empty());
    }
  }
}

TEST(Enumeration, AuxiliaryFamilies) {
  LcpInstance inst(QMatrix{{1, 0, -2, 1}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, QVector{0, -1, 0, 0});
  auto pieces = enumerate_solutions(inst);
  ASSERT_EQ(pieces.size(), 2u);
  for (const auto& z : std::vector<QVector>{{3, 1, 2, 1}, {0, 1, 1, 5}, {0, 1, 0, 0}, {2, 1, 1, 0}})
    EXPECT_TRUE(pieces_contain(inst, pieces, z)) << to_string(z);
  for (const auto& z : std::vector<QVector>{{1, 1, 1, 0}, {0, 2, 0, 0}}) EXPECT_FALSE(pieces_contain(inst, pieces, z));
  EXPECT_THROW(enumerate_solutions(LcpInstance(QMatrix::identity(13), QVector(13, Rational(1)))), Error);
}

TEST(WUnique, AdequateMatricesGiveUniqueW) {
  Rng rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix M = symmetric_psd(rng, 3);
    LcpInstance inst(M, random_feasible_q(rng, M));
    auto rep = w_unique(inst);
    EXPECT_TRUE(rep.unique);
    EXPECT_FALSE(rep.vacuous);
    EXPECT_EQ(rep.w_values.size(), 1u);
  }
  auto empty = w_unique(LcpInstance(QMatrix{{-1}}, QVector{-1}));
  EXPECT_TRUE(empty.unique && empty.vacuous);
}

TEST(WUnique, ReportsWitnessPair) {
  LcpInstance inst(QMatrix{{0, 0}, {1, 0}}, QVector{0, 0});
  auto rep = w_unique(inst);
  ASSERT_FALSE(rep.unique);
  ASSERT_TRUE(rep.witness_pair);
  EXPECT_TRUE(verify(inst, rep.witness_pair->first));
  EXPECT_TRUE(verify(inst, rep.witness_pair->second));
  EXPECT_NE(inst.w(rep.witness_pair->first), inst.w(rep.witness_pair->second));
}

TEST(MatrixAdequacy, KnownClasses) {
  Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_EQ(matrix_column_adequate(p_matrix(rng, 3)).status, Status::Holds);
    EXPECT_EQ(matrix_column_adequate(symmetric_psd(rng, 3)).status, Status::Holds);
  }
  auto v = matrix_column_adequate(QMatrix{{0, 0}, {1, 0}});
  ASSERT_EQ(v.status, Status::Fails);
  ASSERT_TRUE(v.counterexample);
  const auto& z = v.counterexample->point;
  QVector mz = QMatrix{{0, 0}, {1, 0}} * z;
  EXPECT_FALSE(is_zero(mz));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(z[i] * mz[i], 0);
  EXPECT_EQ(matrix_column_adequate(QMatrix{{0, 0}, {0, 0}}).status, Status::Holds);
}

TEST(MatrixAdequacy, HoldsCertificateSurvivesRandomProbes) {
  Rng rng(97);
  int holds = 0;
  for (int trial = 0; trial < 60; ++trial) {
    QMatrix M = rng.matrix(3, 2);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        if (rng.integer(0, 2)) M(r, c) = 0;
    auto v = matrix_column_adequate(M);
    if (v.status == Status::Fails) {
      const auto& z = v.counterexample->point;
      QVector mz = M * z;
      EXPECT_FALSE(is_zero(mz));
      for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(z[i] * mz[i], 0);
      continue;
    }
    ASSERT_EQ(v.status, Status::Holds);
    ++holds;
    for (int probe = 0; probe < 300; ++probe) {
      QVector z = rng.vec(3, 3, 2);
      QVector mz = M * z;
      bool reversed = true;
      for (std::size_t i = 0; i < 3; ++i) reversed = reversed && z[i] * mz[i] <= 0;
      if (reversed) {
        EXPECT_TRUE(is_zero(mz));
      }
    }
  }
  EXPECT_GT(holds, 0);
}

TEST(MatrixAdequacy, AboveCapFallsBackToSearch) {
  QMatrix M(9, 9);
  M(1, 0) = 1;
  auto v = matrix_column_adequate(M, 8);
  EXPECT_EQ(v.status, Status::Fails);
  EXPECT_FALSE(v.note.empty());
  EXPECT_EQ(matrix_column_adequate(QMatrix::identity(9), 8).status, Status::Unknown);
}

TEST(Enumeration, FindsEveryGridSolution) {
  // Integer instances q = w0 - M z0 whose solutions include lattice points; every point of
  // {0,1,2}^k that solves the LCP must lie in some enumerated piece.
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = static_cast<std::size_t>(1 + trial % 6);
    QMatrix M = rng.matrix(k, 2);
    QVector z0(k), w0(k);
    for (std::size_t i = 0; i < k; ++i) (rng.coin() ? z0[i] : w0[i]) = rng.integer(0, 2);
    QVector mz = M * z0, q(k);
    for (std::size_t i = 0; i < k; ++i) q[i] = w0[i] - mz[i];
    LcpInstance inst(M, q);
    auto pieces = enumerate_solutions(inst);
    EXPECT_TRUE(pieces_contain(inst, pieces, z0));
    QVector z(k, Rational(0));
    for (bool more = true; more;) {
      if (verify(inst, z)) {
        EXPECT_TRUE(pieces_contain(inst, pieces, z)) << to_string(z);
      }
      more = false;
      for (auto& v : z) {
        if (v < 2) {
          v += 1;
          more = true;
          break;
        }
        v = 0;
      }
    }
  }
}

TEST(Enumeration, PieceInvariants) {
  Rng rng(103);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(2, 4));
    QMatrix M = rng.matrix(k, 1);
    LcpInstance inst(M, random_feasible_q(rng, M));
    for (const auto& p : enumerate_solutions(inst)) {
      EXPECT_TRUE(verify(inst, p.base));
      std::vector<bool> in_s(k, false);
      for (auto i : p.support) in_s[i] = true;
      for (const auto& d : p.directions) {
        QVector md = M * d;
        for (std::size_t i = 0; i < k; ++i) {
          if (!in_s[i]) {
            EXPECT_EQ(d[i], 0);
          }
          if (in_s[i]) {
            EXPECT_EQ(md[i], 0);
          }
        }
      }
      bool same_w = true;
      for (const auto& v : p.vertices) same_w = same_w && inst.w(v) == inst.w(p.vertices.front());
      for (const auto& r : p.rays) same_w = same_w && is_zero(M * r);
      EXPECT_EQ(p.w_constant, same_w);
    }
  }
}
