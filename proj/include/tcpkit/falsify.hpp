#pragma once

#include "tcpkit/rational.hpp"
#include "tcpkit/tensor.hpp"
#include "tcpkit/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tcpkit {

/// Defining conditions whose violations the falsifier searches for.
enum class Condition {
  ColumnAdequate,        // x_i (Ax)_i <= 0 for all i  =>  Ax = 0
  WeakColumnAdequate,    // x_i^{m-1} (Ax)_i <= 0 for all i  =>  Ax = 0
  ColumnSufficient,      // x_i (Ax)_i <= 0 for all i  =>  x_i (Ax)_i = 0 for all i
  P0,                    // x != 0  =>  some x_i != 0 with x_i (Ax)_i >= 0
  P,                     // x != 0  =>  some x_i != 0 with x_i (Ax)_i > 0
  WeakP0,                // as P0 with x_i^{m-1}
  WeakP,                 // as P with x_i^{m-1}
  PSD,                   // A x^m >= 0
  SemiPositive,          // x >= 0, x != 0  =>  some x_i > 0 with (Ax)_i >= 0
  StrictlySemiPositive,  // x >= 0, x != 0  =>  some x_i > 0 with (Ax)_i > 0
};

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::ColumnAdequate: return "column-adequate";
    case Condition::WeakColumnAdequate: return "weak-column-adequate";
    case Condition::ColumnSufficient: return "column-sufficient";
    case Condition::P0: return "p0";
    case Condition::P: return "p";
    case Condition::WeakP0: return "weak-p0";
    case Condition::WeakP: return "weak-p";
    case Condition::PSD: return "psd";
    case Condition::SemiPositive: return "semi-positive";
    case Condition::StrictlySemiPositive: return "strictly-semi-positive";
  }
  return "?";
}

struct FalsifyConfig {
  std::uint64_t base_seed = 20240611;
  int seeds = 4;
  int samples_per_seed = 10000;
  int descent_starts = 8;
  int descent_iterations = 400;
  std::int64_t snap_denominator = 1000000;
};

namespace detail {

inline bool uses_weak_product(Condition c) {
  return c == Condition::WeakColumnAdequate || c == Condition::WeakP0 || c == Condition::WeakP;
}

inline bool nonnegative_domain(Condition c) {
  return c == Condition::SemiPositive || c == Condition::StrictlySemiPositive;
}

template <class S>
S pow_int(const S& x, int k) {
  S r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace detail

/// Exact re-verification: returns the counterexample when `x` violates the condition.
inline std::optional<Counterexample> exact_violation(const SparseTensor& t, Condition cond, const QVector& x) {
  if (static_cast<int>(x.size()) != t.dim()) throw Error("exact_violation: dimension mismatch");
  const int m = t.order();
  const bool nonzero_x = std::any_of(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
  Counterexample ce;
  ce.point = x;
  ce.condition = to_string(cond);

  if (cond == Condition::PSD) {
    Rational v = apply_full(t, x);
    ce.condition_values = {v};
    ce.image = apply_deg(t, x);
    if (v < 0) return ce;
    return std::nullopt;
  }

  QVector ax = apply_deg(t, x);
  ce.image = ax;
  QVector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational lead = detail::uses_weak_product(cond) ? detail::pow_int(x[i], m - 1) : x[i];
    g[i] = lead * ax[i];
  }
  ce.condition_values = g;
  const bool ax_zero = std::all_of(ax.begin(), ax.end(), [](const Rational& v) { return v == 0; });
  auto all_nonpos = [&] { return std::all_of(g.begin(), g.end(), [](const Rational& v) { return v <= 0; }); };

  bool violated = false;
  switch (cond) {
    case Condition::ColumnAdequate:
    case Condition::WeakColumnAdequate:
      violated = all_nonpos() && !ax_zero;
      break;
    case Condition::ColumnSufficient:
      violated = all_nonpos() && std::any_of(g.begin(), g.end(), [](const Rational& v) { return v < 0; });
      break;
    case Condition::P0:
    case Condition::WeakP0:
    case Condition::P:
    case Condition::WeakP: {
      const bool strict = cond == Condition::P0 || cond == Condition::WeakP0;
      violated = nonzero_x;
      for (std::size_t i = 0; i < x.size() && violated; ++i) {
        if (x[i] == 0) continue;
        violated = strict ? g[i] < 0 : g[i] <= 0;
      }
      break;
    }
    case Condition::SemiPositive:
    case Condition::StrictlySemiPositive: {
      const bool strict_class = cond == Condition::StrictlySemiPositive;
      violated = nonzero_x && std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
      ce.condition_values = ax;
      for (std::size_t i = 0; i < x.size() && violated; ++i) {
        if (x[i] == 0) continue;
        violated = strict_class ? ax[i] <= 0 : ax[i] < 0;
      }
      break;
    }
    case Condition::PSD:
      break;
  }
  if (violated) return ce;
  return std::nullopt;
}

/// Float objective; values <= 0 mark candidate counterexamples. Scale-free for |x|_inf = 1.
inline double violation_objective(const FloatTensor& ft, Condition cond, const std::vector<double>& x,
                                  std::vector<double>& ax) {
  const int m = ft.order();
  if (cond == Condition::PSD) return ft.apply_full(x);
  ft.apply_deg(x, ax);
  const std::size_t n = x.size();
  constexpr double kFloor = 1e-3;
  double max_g = -std::numeric_limits<double>::infinity(), min_g = std::numeric_limits<double>::infinity();
  double ax_norm = 0;
  bool any_support = false;
  double support_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double lead = detail::uses_weak_product(cond) ? detail::pow_int(x[i], m - 1) : x[i];
    double g = lead * ax[i];
    max_g = std::max(max_g, g);
    min_g = std::min(min_g, g);
    ax_norm = std::max(ax_norm, std::fabs(ax[i]));
    if (x[i] != 0) {
      any_support = true;
      double h = detail::nonnegative_domain(cond) ? ax[i] : g;
      support_max = std::max(support_max, h);
    }
  }
  switch (cond) {
    case Condition::ColumnAdequate:
    case Condition::WeakColumnAdequate:
      return max_g + std::max(0.0, kFloor - ax_norm);
    case Condition::ColumnSufficient:
      return std::max(max_g, kFloor + min_g);
    default:
      return any_support ? support_max : 1.0;
  }
}

namespace detail {

inline void normalize_inf(std::vector<double>& x) {
  double s = 0;
  for (double v : x) s = std::max(s, std::fabs(v));
  if (s > 0)
    for (double& v : x) v /= s;
}

/// Snaps a float point to nearby rationals at a few denominators; zeros tiny coordinates.
inline std::vector<QVector> snap_candidates(std::vector<double> x, std::int64_t max_den) {
  normalize_inf(x);
  for (double& v : x)
    if (std::fabs(v) < 1e-7) v = 0;
  std::vector<QVector> out;
  for (std::int64_t den : {std::int64_t{10}, std::int64_t{100}, std::int64_t{1000}, max_den}) {
    QVector q = snap_rational(x, den);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

template <class F>
void for_each_grid_point(std::size_t n, const std::vector<Rational>& values, F&& f) {
  std::vector<std::size_t> digit(n, 0);
  QVector x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = values[digit[i]];
    if (!f(x)) return;
    std::size_t i = 0;
    while (i < n && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace detail

/// Searches for a point violating `cond`: a rational sign-pattern grid, uniform samples with
/// random zero patterns, and compass-search descent. Every hit is re-verified exactly.
inline std::optional<Counterexample> falsify(const SparseTensor& t, Condition cond, const FalsifyConfig& cfg,
                                             SearchReport* report = nullptr) {
  SearchReport local;
  SearchReport& rep = report ? *report : local;
  rep.best_margin = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::size_t>(t.dim());
  const FloatTensor ft(t);
  const bool nonneg = detail::nonnegative_domain(cond);
  std::vector<double> ax(n);

  auto try_exact = [&](const QVector& q) -> std::optional<Counterexample> {
    ++rep.exact_checks;
    return exact_violation(t, cond, q);
  };

  // Stage 1: grid.
  std::vector<Rational> values;
  if (nonneg) {
    values = {Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  } else {
    // Small magnitudes first so the first hit is the simplest witness.
    values = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2)};
  }
  if (std::pow(static_cast<double>(values.size()), static_cast<double>(n)) > 20000.0) {
    values = nonneg ? std::vector<Rational>{Rational(0), Rational(1)}
                    : std::vector<Rational>{Rational(0), Rational(1), Rational(-1)};
  }
  std::optional<Counterexample> found;
  if (std::pow(static_cast<double>(values.size()), static_cast<double>(n)) <= 20000.0) {
    detail::for_each_grid_point(n, values, [&](const QVector& q) {
      std::vector<double> x = to_double(q);
      ++rep.samples;
      if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0; })) return true;
      double f = violation_objective(ft, cond, x, ax);
      rep.best_margin = std::min(rep.best_margin, f);
      if (f <= 1e-9) found = try_exact(q);
      return !found.has_value();
    });
  }
  if (found) return found;

  // Stages 2 and 3, one independent stream per seed.
  for (int s = 0; s < cfg.seeds; ++s) {
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(s) * 0x9E3779B97F4A7C15ULL;
    rep.seeds.push_back(seed);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(nonneg ? 0.0 : -2.0, 2.0);
    std::bernoulli_distribution zero_out(0.25);

    struct Start {
      double f;
      std::vector<double> x;
    };
    std::vector<Start> best;
    std::vector<double> x(n);
    for (int k = 0; k < cfg.samples_per_seed; ++k) {
      bool any = false;
      for (auto& v : x) {
        v = zero_out(rng) ? 0.0 : coord(rng);
        any = any || v != 0;
      }
      if (!any) continue;
      detail::normalize_inf(x);
      ++rep.samples;
      double f = violation_objective(ft, cond, x, ax);
      rep.best_margin = std::min(rep.best_margin, f);
      if (f <= 0) {
        for (const auto& q : detail::snap_candidates(x, cfg.snap_denominator))
          if ((found = try_exact(q))) return found;
        ++rep.numerical_only;
      }
      if (static_cast<int>(best.size()) < cfg.descent_starts || f < best.back().f) {
        best.push_back({f, x});
        std::sort(best.begin(), best.end(), [](const Start& a, const Start& b) { return a.f < b.f; });
        if (static_cast<int>(best.size()) > cfg.descent_starts) best.pop_back();
      }
    }

    // Compass search on the sup-norm sphere, keeping the zero pattern fixed.
    for (auto& start : best) {
      std::vector<double> cur = start.x;
      double fc = start.f;
      double step = 0.25;
      for (int it = 0; it < cfg.descent_iterations && step > 1e-12; ++it) {
        bool improved = false;
        for (std::size_t i = 0; i < n && !improved; ++i) {
          if (cur[i] == 0) continue;
          for (double dir : {1.0, -1.0}) {
            std::vector<double> cand = cur;
            cand[i] += dir * step;
            if (nonneg && cand[i] < 0) cand[i] = 0;
            detail::normalize_inf(cand);
            if (std::all_of(cand.begin(), cand.end(), [](double v) { return v == 0; })) continue;
            double f = violation_objective(ft, cond, cand, ax);
            if (f < fc) {
              cur = std::move(cand);
              fc = f;
              improved = true;
              break;
            }
          }
        }
        if (!improved) step *= 0.5;
      }
      rep.best_margin = std::min(rep.best_margin, fc);
      if (fc <= 1e-9) {
        for (const auto& q : detail::snap_candidates(cur, cfg.snap_denominator))
          if ((found = try_exact(q))) return found;
        ++rep.numerical_only;
      }
    }
  }
  return std::nullopt;
}

}  // namespace tcpkit
