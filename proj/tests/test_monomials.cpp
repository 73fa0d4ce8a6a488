#include "support.hpp"

#include <gtest/gtest.h>

using namespace tcpkit;

namespace {

std::vector<MultiIndex> all_indices(int degree, int n) {
  std::vector<MultiIndex> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // odometer over [0, degree]^n, filtered by total degree
  for (bool more = true; more;) {
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.emplace_back(e);
    more = false;
    for (auto& v : e) {
      if (++v <= degree) {
        more = true;
        break;
      }
      v = 0;
    }
  }
  return out;
}

}  // namespace

TEST(Orders, LexAndGrlexExamples) {
  EXPECT_TRUE(lex_compare({1, 2, 0}, {0, 3, 4}) > 0);
  EXPECT_TRUE(lex_compare({3, 2, 4}, {3, 2, 1}) > 0);
  EXPECT_TRUE(grlex_compare({1, 2, 3}, {3, 2, 0}) > 0);
  EXPECT_TRUE(grlex_compare({1, 2, 4}, {1, 1, 5}) > 0);
  EXPECT_TRUE(lex_compare({1, 1}, {1, 1}) == 0);
  EXPECT_THROW(lex_compare({1, 1}, {1, 1, 0}), Error);
  EXPECT_THROW(MultiIndex({1, -1}), Error);
}

TEST(Orders, AreStrictTotalOrders) {
  auto idx = all_indices(3, 3);
  for (auto cmp : {&lex_compare, &grlex_compare, &mglo_compare}) {
    for (const auto& a : idx)
      for (const auto& b : idx) {
        auto ab = cmp(a, b), ba = cmp(b, a);
        EXPECT_EQ(ab == 0, a == b);
        EXPECT_EQ(ab > 0, ba < 0);
        for (const auto& c : idx)
          if (ab > 0 && cmp(b, c) > 0) {
            EXPECT_TRUE(cmp(a, c) > 0);
          }
      }
  }
}

TEST(Orders, MgloRanksPurePowersFirst) {
  EXPECT_TRUE(mglo_compare({2, 0, 0}, {0, 2, 0}) > 0);
  EXPECT_TRUE(mglo_compare({2, 0, 0}, {2, 1, 0}) > 0);
  EXPECT_TRUE(mglo_compare({2, 2, 0}, {2, 1, 1}) > 0);
  EXPECT_TRUE(mglo_compare({0, 0, 1}, {5, 5, 0}) > 0);
}

TEST(Basis, SizeMatchesBinomialAndEnumeration) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n <= 4; ++n) {
      MonomialBasis b(m, n);
      EXPECT_EQ(b.size(), all_indices(m - 1, n).size());
      EXPECT_EQ(b.size(), monomial_count(m, n));
    }
  EXPECT_EQ(monomial_count(4, 2), 4u);
  EXPECT_EQ(monomial_count(3, 3), 6u);
  EXPECT_THROW(monomial_count(1, 2), Error);
}

TEST(Basis, StrictlyDecreasingWithPurePowersFirst) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 4; ++n) {
      MonomialBasis b(m, n);
      for (std::size_t j = 0; j + 1 < b.size(); ++j) EXPECT_TRUE(mglo_compare(b[j], b[j + 1]) > 0);
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = m - 1;
        EXPECT_EQ(b[static_cast<std::size_t>(i)], MultiIndex(e));
        EXPECT_EQ(b.column_of(MultiIndex(e)), static_cast<std::size_t>(i));
      }
    }
  MonomialBasis b(3, 3);
  std::vector<std::string> labels;
  for (const auto& a : b.labels()) labels.push_back(monomial_label(a));
  EXPECT_EQ(labels, (std::vector<std::string>{"x1^2", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"}));
  EXPECT_THROW(b.column_of({3, 0, 0}), Error);
}

TEST(Basis, LiftEvaluatesEveryMonomial) {
  MonomialBasis b(4, 2);
  EXPECT_EQ(b.lift(QVector{1, 1}), (QVector{1, 1, 1, 1}));
  EXPECT_EQ(b.lift(QVector{2, 3}), (QVector{8, 27, 12, 18}));
  EXPECT_THROW(b.lift(QVector{1}), Error);
}

TEST(Labels, OmitZeroAndUnitExponents) {
  EXPECT_EQ(monomial_label({2, 0, 1}), "x1^2*x3");
  EXPECT_EQ(monomial_label({0, 1}), "x2");
  EXPECT_EQ(monomial_label({0, 0}), "1");
}

TEST(MultiIndex, FromTupleCountsMultiplicities) {
  std::vector<int> tuple = {2, 0, 2};
  EXPECT_EQ(MultiIndex::from_tuple(tuple, 3), MultiIndex({1, 0, 2}));
  EXPECT_TRUE(MultiIndex({0, 3}).is_pure_power());
  EXPECT_FALSE(MultiIndex({1, 2}).is_pure_power());
}
