#include "support.hpp"

#include <gtest/gtest.h>

using namespace tcpkit;
using tcpkit::testkit::Rng;

namespace {

CheckConfig light_config() {
  CheckConfig cfg;
  cfg.search.seeds = 2;
  cfg.search.samples_per_seed = 1500;
  cfg.search.descent_starts = 4;
  cfg.search.descent_iterations = 150;
  return cfg;
}

QMatrix gram(Rng& rng, std::size_t k) {
  QMatrix A = rng.matrix(k, 2), M(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < k; ++r) M(i, j) += A(r, i) * A(r, j);
  return M;
}

/// Mix of undecidable general tensors and families the certificate paths can decide.
SparseTensor sample_tensor(Rng& rng, int kind) {
  const int n = rng.integer(2, 3);
  switch (kind % 4) {
    case 0: return rng.tensor(rng.integer(3, 4), n, 0.4);
    case 1: return rng.tensor_zero_b(4, n);
    case 2: return matrix_times_identity(gram(rng, static_cast<std::size_t>(n)), 4);
    default: return matrix_times_identity(rng.matrix(static_cast<std::size_t>(n), 2), 4);
  }
}

std::vector<SparseTensor> corpus_tensors() {
  return {corpus::subtensor_source(),  corpus::row_diagonal(),        corpus::majorization_source(),
          corpus::column_adequate_mixed(), corpus::psd_adequate(),    corpus::column_sufficient(),
          corpus::p0_not_adequate(),   corpus::weak_adequate(),       corpus::diagonal_order3(),
          corpus::mixed_order4(),      corpus::row_diagonal_block()};
}

/// Random exact probes of the defining implication; returns the first violation.
std::optional<QVector> probe(const SparseTensor& t, Condition cond, Rng& rng, int count) {
  const auto n = static_cast<std::size_t>(t.dim());
  for (int k = 0; k < count; ++k) {
    QVector x = rng.vec(n, 4, 3);
    if (k % 2 == 0)
      for (auto& v : x) v = abs(v);
    if (k % 5 == 0) x[static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1))] = 0;
    if (exact_violation(t, cond, x)) return x;
  }
  return std::nullopt;
}

const std::vector<std::pair<TensorClass, TensorClass>>& implications() {
  static const std::vector<std::pair<TensorClass, TensorClass>> chain = {
      {TensorClass::ColumnAdequate, TensorClass::ColumnSufficient},
      {TensorClass::ColumnSufficient, TensorClass::P0},
      {TensorClass::ColumnAdequate, TensorClass::P0},
      {TensorClass::P, TensorClass::P0},
      {TensorClass::P0, TensorClass::SemiPositive},
      {TensorClass::P, TensorClass::StrictlySemiPositive},
      {TensorClass::StrictlySemiPositive, TensorClass::SemiPositive},
      {TensorClass::WeakP, TensorClass::WeakP0},
  };
  return chain;
}

}  // namespace

TEST(ClassCheck, CorpusVerdicts) {
  const auto cfg = light_config();
  EXPECT_EQ(check_column_adequate(corpus::row_diagonal_block(), cfg).status, Status::Holds);
  EXPECT_EQ(check_column_adequate(corpus::column_sufficient(), cfg).status, Status::Fails);
  EXPECT_EQ(check_column_adequate(corpus::p0_not_adequate(), cfg).status, Status::Fails);
  EXPECT_EQ(check_column_adequate(corpus::weak_adequate(), cfg).status, Status::Fails);
  // Adequate, but the certificate path needs B = O and search cannot prove membership.
  EXPECT_EQ(check_column_adequate(corpus::column_adequate_mixed(), cfg).status, Status::Unknown);
  // A x^4 = x1^4 is a decoupled nonnegative form.
  EXPECT_EQ(check_psd(corpus::psd_adequate(), cfg).status, Status::Holds);
  EXPECT_EQ(check_psd(corpus::column_sufficient(), cfg).status, Status::Fails);
  EXPECT_EQ(check_psd(matrix_times_identity(QMatrix::identity(2), 4), cfg).status, Status::Holds);
  EXPECT_EQ(check_row_diagonal(corpus::row_diagonal()).status, Status::Holds);
  EXPECT_EQ(check_row_diagonal(corpus::row_diagonal_block()).status, Status::Fails);
  EXPECT_EQ(check_p(corpus::subtensor_source(), cfg).status, Status::Fails);
  EXPECT_EQ(parse_tensor_class("weak-p0"), TensorClass::WeakP0);
  EXPECT_THROW(parse_tensor_class("adequate"), Error);
}

TEST(ClassCheck, CertificatesSurviveExactProbes) {
  Rng rng(31);
  const auto cfg = light_config();
  std::vector<SparseTensor> tensors = corpus_tensors();
  for (int k = 0; k < 24; ++k) tensors.push_back(sample_tensor(rng, k));
  int holds = 0;
  for (const auto& t : tensors)
    for (const auto& [cls, name] : tensor_class_names()) {
      auto cond = condition_of(cls);
      if (!cond) continue;
      auto v = check(cls, t, cfg);
      if (v.status != Status::Holds) continue;
      ++holds;
      ASSERT_TRUE(v.certificate) << name;
      auto bad = probe(t, *cond, rng, 5000);
      EXPECT_FALSE(bad) << name << " holds but " << to_string(*bad) << " violates it";
    }
  EXPECT_GE(holds, 10);
}

TEST(ClassCheck, CounterexamplesReverify) {
  Rng rng(37);
  const auto cfg = light_config();
  std::vector<SparseTensor> tensors = corpus_tensors();
  for (int k = 0; k < 24; ++k) tensors.push_back(sample_tensor(rng, k));
  int fails = 0;
  for (const auto& t : tensors)
    for (const auto& [cls, name] : tensor_class_names()) {
      auto cond = condition_of(cls);
      if (!cond) continue;
      auto v = check(cls, t, cfg);
      if (v.status != Status::Fails) continue;
      ++fails;
      ASSERT_TRUE(v.counterexample) << name;
      EXPECT_TRUE(reverify(t, *cond, *v.counterexample)) << name << " " << to_string(v.counterexample->point);
    }
  EXPECT_GE(fails, 20);
}

TEST(ClassCheck, ImplicationChainIsRespected) {
  Rng rng(41);
  const auto cfg = light_config();
  std::vector<SparseTensor> tensors = corpus_tensors();
  for (int k = 0; k < 100; ++k) tensors.push_back(sample_tensor(rng, k));
  for (std::size_t idx = 0; idx < tensors.size(); ++idx) {
    const auto& t = tensors[idx];
    std::map<TensorClass, Status> s;
    for (const auto& [strong, weak] : implications()) {
      if (!s.count(strong)) s[strong] = check(strong, t, cfg).status;
      if (!s.count(weak)) s[weak] = check(weak, t, cfg).status;
      EXPECT_FALSE(s[strong] == Status::Holds && s[weak] == Status::Fails)
          << "tensor " << idx << ": " << to_string(strong) << " holds, " << to_string(weak) << " fails";
    }
  }
}

TEST(ClassCheck, SubtensorCounterexamplesPadToFullTensor) {
  Rng rng(43);
  const auto cfg = light_config();
  std::vector<SparseTensor> tensors = corpus_tensors();
  for (int k = 0; k < 12; ++k) tensors.push_back(rng.tensor(rng.integer(3, 4), 3, 0.4));
  int padded = 0;
  for (const auto& t : tensors) {
    const int n = t.dim();
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) J.push_back(i);
      auto sub = principal_subtensor(t, J);
      for (auto cls : {TensorClass::ColumnAdequate, TensorClass::P0, TensorClass::P, TensorClass::PSD}) {
        auto v = check(cls, sub, cfg);
        if (v.status != Status::Fails) continue;
        Counterexample ce = *v.counterexample;
        ce.point = detail::padded(ce.point, J, static_cast<std::size_t>(n));
        EXPECT_TRUE(reverify(t, *condition_of(cls), ce)) << to_string(cls);
        ++padded;
      }
    }
  }
  EXPECT_GT(padded, 10);
}

TEST(ClassCheck, VerdictsInvariantUnderScalingAndPermutation) {
  Rng rng(47);
  const auto cfg = light_config();
  int decided = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto t = sample_tensor(rng, trial);
    const auto n = static_cast<std::size_t>(t.dim());
    QVector p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = Rational(rng.integer(1, 4), rng.integer(1, 3));
      q[i] = Rational(rng.integer(1, 4), rng.integer(1, 3));
      if (rng.coin()) {
        p[i] = -p[i];
        q[i] = -q[i];
      }
    }
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng.engine());
    auto a = check_column_adequate(t, cfg);
    auto b = check_column_adequate(transform_diag(t, QMatrix::diagonal(p), QMatrix::diagonal(q)), cfg);
    auto c = check_column_adequate(transform_perm(t, permutation_matrix(sigma)), cfg);
    for (const auto* other : {&b, &c})
      if (a.status != Status::Unknown && other->status != Status::Unknown) {
        EXPECT_EQ(a.status, other->status) << "trial " << trial;
        ++decided;
      }
    if (a.status == Status::Fails && !a.counterexample->root_exponent) {
      // x counterexample for A  ->  Q^{-1} x for PAQ, relabeled x for the permuted tensor.
      const auto& x = a.counterexample->point;
      QVector y(n), z(n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] / q[i];
        z[static_cast<std::size_t>(sigma[i])] = x[i];
      }
      EXPECT_TRUE(exact_violation(transform_diag(t, QMatrix::diagonal(p), QMatrix::diagonal(q)),
                                  Condition::ColumnAdequate, y));
      EXPECT_TRUE(exact_violation(transform_perm(t, permutation_matrix(sigma)), Condition::ColumnAdequate, z));
    }
  }
  EXPECT_GT(decided, 20);
}

TEST(ClassCheck, WeakEqualsOrdinaryForEvenOrder) {
  Rng rng(53);
  const auto cfg = light_config();
  for (int trial = 0; trial < 20; ++trial) {
    auto t = trial % 2 ? rng.tensor(4, 2, 0.4) : rng.tensor_zero_b(4, rng.integer(2, 3));
    EXPECT_EQ(check_weak_column_adequate(t, cfg).status, check_column_adequate(t, cfg).status);
    EXPECT_EQ(check_weak_p0(t, cfg).status, check_p0(t, cfg).status);
  }
  // Odd order: the weak class really is weaker.
  EXPECT_EQ(check_column_adequate(corpus::weak_adequate(), cfg).status, Status::Fails);
  EXPECT_NE(check_weak_column_adequate(corpus::weak_adequate(), cfg).status, Status::Fails);
}

TEST(ClassCheck, FullFormAggregatesSymmetricEntries) {
  auto form = full_form(corpus::row_diagonal_block());
  for (const auto& [alpha, c] : form) EXPECT_NE(c, 0);
  SparseTensor t(2, 2);
  t.set1({1, 2}, 1);
  t.set1({2, 1}, -1);
  EXPECT_TRUE(full_form(t).empty());
  EXPECT_EQ(check_psd(t).status, Status::Holds);
}
