#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tcpkit;
using tcpkit::testkit::Rng;

namespace {

/// Extreme rays of the pointed cone {x : a.x >= 0 for a in rows} by brute force: every set
/// of d-1 linearly independent tight rows defines a line; keep the feasible directions.
std::set<QVector> brute_rays(const std::vector<QVector>& rows, std::size_t d) {
  std::set<QVector> out;
  const std::size_t k = rows.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != d - 1) continue;
    QMatrix a(d - 1, d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        for (std::size_t c = 0; c < d; ++c) a(r, c) = rows[i][c];
        ++r;
      }
    auto sol = solve_affine(a, QVector(d - 1, Rational(0)));
    if (!sol || sol->nullspace.size() != 1) continue;
    for (int s : {1, -1}) {
      QVector v = sol->nullspace[0];
      for (auto& x : v) x *= s;
      if (std::all_of(rows.begin(), rows.end(), [&](const QVector& row) { return dot(row, v) >= 0; }))
        out.insert(primitive(v));
    }
  }
  return out;
}

}  // namespace

TEST(DoubleDescription, OrthantStartsWithUnitRays) {
  auto dd = DoubleDescription::orthant({1, -1, 1});
  auto rays = dd.rays();
  std::set<QVector> got(rays.begin(), rays.end());
  EXPECT_EQ(got, (std::set<QVector>{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(dd.lineality().empty());
}

TEST(DoubleDescription, MatchesBruteForceOnRandomPointedCones) {
  Rng rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.integer(2, 4));
    std::vector<int> signs(d);
    for (auto& s : signs) s = rng.coin() ? 1 : -1;
    auto dd = DoubleDescription::orthant(signs);
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < d; ++i) {
      QVector e(d, Rational(0));
      e[i] = signs[i];
      rows.push_back(e);
    }
    const int extra = rng.integer(1, 4);
    for (int k = 0; k < extra; ++k) {
      QVector a = rng.vec(d, 3, 1);
      dd.add_inequality(a);
      rows.push_back(a);
    }
    auto rays = dd.rays();
    std::set<QVector> got;
    for (const auto& r : rays) got.insert(primitive(r));
    EXPECT_EQ(got.size(), rays.size()) << "duplicate rays";
    EXPECT_EQ(got, brute_rays(rows, d));
  }
}

TEST(DoubleDescription, EqualitiesAndLineality) {
  // Whole space, then x1 + x2 >= 0: one ray plus a lineality line.
  DoubleDescription dd(2);
  dd.add_inequality({1, 1});
  EXPECT_EQ(dd.lineality().size(), 1u);
  EXPECT_EQ(dd.rays().size(), 1u);
  EXPECT_EQ(dot(dd.rays()[0], QVector{1, 1}) > 0, true);
  dd.add_equality({1, -1});
  EXPECT_TRUE(dd.lineality().empty());
  ASSERT_EQ(dd.rays().size(), 1u);
  EXPECT_EQ(dd.rays()[0], (QVector{1, 1}));
}

TEST(Polyhedron, GeneratorsOfBoxAndHalfLine) {
  // 0 <= x <= 1, y >= 2 - x  -> vertices (0,2), (1,1); ray (0,1).
  auto p = polyhedron_generators(2, {{1, 0}, {-1, 0}, {1, 1}}, {0, -1, 2}, {}, {});
  std::set<QVector> v(p.vertices.begin(), p.vertices.end()), r(p.rays.begin(), p.rays.end());
  EXPECT_EQ(v, (std::set<QVector>{{0, 2}, {1, 1}}));
  EXPECT_EQ(r, (std::set<QVector>{{0, 1}}));
  auto empty = polyhedron_generators(1, {{1}, {-1}}, {1, 0}, {}, {});
  EXPECT_TRUE(empty.empty());
}
