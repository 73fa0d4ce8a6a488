#pragma once

#include "tcpkit/auxiliary.hpp"
#include "tcpkit/falsify.hpp"
#include "tcpkit/lcp.hpp"
#include "tcpkit/tcp.hpp"
#include "tcpkit/verdict.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcpkit {

enum class TensorClass {
  ColumnAdequate,
  WeakColumnAdequate,
  ColumnSufficient,
  P0,
  P,
  WeakP0,
  WeakP,
  PSD,
  SemiPositive,
  StrictlySemiPositive,
  RowDiagonal,
};

inline const std::vector<std::pair<TensorClass, const char*>>& tensor_class_names() {
  static const std::vector<std::pair<TensorClass, const char*>> names = {
      {TensorClass::ColumnAdequate, "column-adequate"},
      {TensorClass::WeakColumnAdequate, "weak-column-adequate"},
      {TensorClass::ColumnSufficient, "column-sufficient"},
      {TensorClass::P0, "p0"},
      {TensorClass::P, "p"},
      {TensorClass::WeakP0, "weak-p0"},
      {TensorClass::WeakP, "weak-p"},
      {TensorClass::PSD, "psd"},
      {TensorClass::SemiPositive, "semi-positive"},
      {TensorClass::StrictlySemiPositive, "strictly-semi-positive"},
      {TensorClass::RowDiagonal, "row-diagonal"},
  };
  return names;
}

inline const char* to_string(TensorClass c) {
  for (const auto& [k, name] : tensor_class_names())
    if (k == c) return name;
  return "?";
}

inline TensorClass parse_tensor_class(std::string_view s) {
  for (const auto& [k, name] : tensor_class_names())
    if (s == name) return k;
  throw Error("unknown tensor class '" + std::string(s) + "'");
}

struct CheckConfig {
  FalsifyConfig search;
  std::size_t adequacy_cap = kDefaultAdequacyCap;
  std::size_t dense_cap = kDefaultDenseCap;
};

/// Exact check of a counterexample against the definition it claims to violate. Root-form
/// points (x = point^{[1/k]}, k odd) are decided by signs: x_i and point_i share theirs, and
/// x_i^{m-1} = point_i exactly.
inline bool reverify(const SparseTensor& t, Condition cond, const Counterexample& ce) {
  if (!ce.root_exponent) return exact_violation(t, cond, ce.point).has_value();
  const int k = *ce.root_exponent;
  if (k != t.order() - 1 || k % 2 == 0 || cond == Condition::PSD) return false;
  auto img = root_image(t, ce.point);
  if (!img) return false;
  const QVector& y = ce.point;
  const std::size_t n = y.size();
  bool all_nonpos = true, some_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = y[i] * (*img)[i];
    all_nonpos = all_nonpos && s <= 0;
    some_neg = some_neg || s < 0;
  }
  const bool y_nonzero = !is_zero(y);
  switch (cond) {
    case Condition::ColumnAdequate:
    case Condition::WeakColumnAdequate:
      return all_nonpos && !is_zero(*img);
    case Condition::ColumnSufficient:
      return all_nonpos && some_neg;
    case Condition::P0:
    case Condition::WeakP0:
    case Condition::P:
    case Condition::WeakP: {
      const bool strict = cond == Condition::P0 || cond == Condition::WeakP0;
      bool violated = y_nonzero;
      for (std::size_t i = 0; i < n && violated; ++i)
        if (y[i] != 0) violated = strict ? y[i] * (*img)[i] < 0 : y[i] * (*img)[i] <= 0;
      return violated;
    }
    case Condition::SemiPositive:
    case Condition::StrictlySemiPositive: {
      bool violated = y_nonzero && std::all_of(y.begin(), y.end(), [](const Rational& v) { return v >= 0; });
      for (std::size_t i = 0; i < n && violated; ++i)
        if (y[i] > 0) violated = cond == Condition::SemiPositive ? (*img)[i] < 0 : (*img)[i] <= 0;
      return violated;
    }
    case Condition::PSD:
      return false;
  }
  return false;
}

namespace detail {

inline Verdict fails_with(Counterexample ce, std::string note = {}) {
  Verdict v;
  v.status = Status::Fails;
  v.counterexample = std::move(ce);
  v.note = std::move(note);
  return v;
}

/// Exact path for even m with B = O: A x^{m-1} = M(A) x^{[m-1]}, and the odd power is a
/// sign-preserving bijection, so A is column adequate iff M(A) is.
inline std::optional<Verdict> adequacy_by_majorization(const SparseTensor& t, const CheckConfig& cfg) {
  if (t.order() % 2 != 0) return std::nullopt;
  AuxiliarySystem aux(t, cfg.dense_cap);
  if (!aux.mixed_block_zero()) return std::nullopt;
  const QMatrix m = majorization(t);
  Verdict mv = matrix_column_adequate(m, cfg.adequacy_cap, cfg.search);
  const int k = t.order() - 1;
  if (mv.status == Status::Holds) {
    mv.certificate->chain = "order " + std::to_string(t.order()) +
                            " is even; mixed block B = O after aggregation; M(A) is column adequate (" +
                            mv.certificate->chain + "); hence A is column adequate";
    return mv;
  }
  if (mv.status == Status::Fails) {
    const QVector& r = mv.counterexample->point;
    Counterexample ce;
    ce.condition = to_string(Condition::ColumnAdequate);
    QVector x(r.size());
    bool rational = true;
    for (std::size_t i = 0; i < r.size() && rational; ++i) {
      auto root = rational_root(r[i], k);
      if (root)
        x[i] = *root;
      else
        rational = false;
    }
    if (rational) {
      ce = *exact_violation(t, Condition::ColumnAdequate, x);
    } else {
      ce.point = r;
      ce.root_exponent = k;
      ce.image = m * r;
      for (std::size_t i = 0; i < r.size(); ++i) ce.condition_values.push_back(r[i] * ce.image[i]);
    }
    Verdict v = fails_with(std::move(ce), "M(A) is not column adequate; B = O and m even transfer the ray");
    v.search = mv.search;
    return v;
  }
  return std::nullopt;  // M(A) above the cone cap and search found nothing
}

inline Verdict by_search(const SparseTensor& t, Condition cond, const CheckConfig& cfg, std::string note) {
  Verdict v;
  v.counterexample = falsify(t, cond, cfg.search, &v.search);
  v.status = v.counterexample ? Status::Fails : Status::Unknown;
  v.note = std::move(note);
  return v;
}

}  // namespace detail

inline Verdict check_column_adequate(const SparseTensor& t, const CheckConfig& cfg = {}) {
  if (auto v = detail::adequacy_by_majorization(t, cfg)) return *v;
  std::string why = t.order() % 2 != 0 ? "odd order" : "mixed block B != O";
  return detail::by_search(t, Condition::ColumnAdequate, cfg, why + ": no certificate path, search only");
}

/// For even m, x_i^{m-1} and x_i have the same sign, so the weak and ordinary classes coincide.
inline Verdict check_weak_column_adequate(const SparseTensor& t, const CheckConfig& cfg = {}) {
  if (t.order() % 2 == 0) {
    Verdict v = check_column_adequate(t, cfg);
    if (v.counterexample) v.counterexample->condition = to_string(Condition::WeakColumnAdequate);
    if (v.certificate) v.certificate->chain += "; even order, so weak column adequacy is the same condition";
    return v;
  }
  return detail::by_search(t, Condition::WeakColumnAdequate, cfg, "odd order: search only");
}

inline Verdict check_column_sufficient(const SparseTensor& t, const CheckConfig& cfg = {}) {
  if (auto v = detail::adequacy_by_majorization(t, cfg); v && v->status == Status::Holds) {
    v->certificate->chain += "; column adequate implies column sufficient";
    return *v;
  }
  return detail::by_search(t, Condition::ColumnSufficient, cfg, "no certificate path, search only");
}

inline Verdict check_p0(const SparseTensor& t, const CheckConfig& cfg = {}) {
  if (auto v = detail::adequacy_by_majorization(t, cfg); v && v->status == Status::Holds) {
    v->certificate->chain += "; column adequate implies P0";
    return *v;
  }
  return detail::by_search(t, Condition::P0, cfg, "no certificate path, search only");
}

inline Verdict check_p(const SparseTensor& t, const CheckConfig& cfg = {}) {
  return detail::by_search(t, Condition::P, cfg, "search only");
}

inline Verdict check_weak_p0(const SparseTensor& t, const CheckConfig& cfg = {}) {
  if (t.order() % 2 == 0) {
    Verdict v = check_p0(t, cfg);
    if (v.counterexample) v.counterexample->condition = to_string(Condition::WeakP0);
    return v;
  }
  return detail::by_search(t, Condition::WeakP0, cfg, "odd order: search only");
}

inline Verdict check_weak_p(const SparseTensor& t, const CheckConfig& cfg = {}) {
  return detail::by_search(t, Condition::WeakP, cfg, "search only");
}

/// Coefficients of the degree-m form A x^m, keyed by exponent vector.
inline std::map<std::vector<int>, Rational> full_form(const SparseTensor& t) {
  std::map<std::vector<int>, Rational> form;
  for (const auto& [idx, coef] : t.entries()) {
    auto alpha = MultiIndex::from_tuple(idx, static_cast<std::size_t>(t.dim())).exponents();
    form[alpha] += coef;
  }
  for (auto it = form.begin(); it != form.end();)
    it = it->second == 0 ? form.erase(it) : std::next(it);
  return form;
}

inline Verdict check_psd(const SparseTensor& t, const CheckConfig& cfg = {}) {
  const auto form = full_form(t);
  const int m = t.order();
  if (form.empty()) {
    Verdict v;
    v.status = Status::Holds;
    v.certificate = Certificate{"A x^m is the zero form", std::nullopt};
    return v;
  }
  // A pure power with a negative coefficient fails at a unit vector.
  for (const auto& [alpha, c] : form) {
    MultiIndex a(alpha);
    if (a.is_pure_power() && c < 0) {
      QVector x(alpha.size(), Rational(0));
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i]) x[i] = 1;
      return detail::fails_with(*exact_violation(t, Condition::PSD, x));
    }
  }
  if (m % 2 != 0) {
    // A nonzero odd form takes both signs: A(-x)^m = -A x^m.
    Verdict v = detail::by_search(t, Condition::PSD, cfg, "odd order: a nonzero form changes sign under x -> -x");
    return v;
  }
  bool decoupled = true;
  for (const auto& [alpha, c] : form)
    if (!MultiIndex(alpha).is_pure_power()) decoupled = false;
  if (decoupled) {
    Verdict v;
    v.status = Status::Holds;
    v.certificate = Certificate{"mixed coefficients of A x^m cancel; A x^m is a sum of even powers x_i^" +
                                    std::to_string(m) + " with nonnegative coefficients",
                                std::nullopt};
    return v;
  }
  return detail::by_search(t, Condition::PSD, cfg, "form has mixed terms: search only");
}

inline Verdict check_semi_positive(const SparseTensor& t, bool strict = false, const CheckConfig& cfg = {}) {
  return detail::by_search(t, strict ? Condition::StrictlySemiPositive : Condition::SemiPositive, cfg,
                           "search only");
}

/// Structural check. A failure names an off-diagonal entry: `point` holds its 1-based index
/// and `condition_values` its coefficient.
inline Verdict check_row_diagonal(const SparseTensor& t) {
  Verdict v;
  for (const auto& [idx, coef] : t.entries()) {
    bool ok = true;
    for (std::size_t p = 2; p < idx.size(); ++p)
      if (idx[p] != idx[1]) ok = false;
    if (ok) continue;
    Counterexample ce;
    for (int i : idx) ce.point.push_back(i + 1);
    ce.condition_values = {coef};
    ce.condition = "row-diagonal";
    v.status = Status::Fails;
    v.counterexample = std::move(ce);
    v.note = "stored entry with i2..im not all equal";
    return v;
  }
  v.status = Status::Holds;
  v.certificate = Certificate{"every stored entry has i2 = ... = im, so A = M(A) I_m", std::nullopt};
  return v;
}

inline Verdict check(TensorClass c, const SparseTensor& t, const CheckConfig& cfg = {}) {
  switch (c) {
    case TensorClass::ColumnAdequate: return check_column_adequate(t, cfg);
    case TensorClass::WeakColumnAdequate: return check_weak_column_adequate(t, cfg);
    case TensorClass::ColumnSufficient: return check_column_sufficient(t, cfg);
    case TensorClass::P0: return check_p0(t, cfg);
    case TensorClass::P: return check_p(t, cfg);
    case TensorClass::WeakP0: return check_weak_p0(t, cfg);
    case TensorClass::WeakP: return check_weak_p(t, cfg);
    case TensorClass::PSD: return check_psd(t, cfg);
    case TensorClass::SemiPositive: return check_semi_positive(t, false, cfg);
    case TensorClass::StrictlySemiPositive: return check_semi_positive(t, true, cfg);
    case TensorClass::RowDiagonal: return check_row_diagonal(t);
  }
  throw Error("unhandled tensor class");
}

inline std::optional<Condition> condition_of(TensorClass c) {
  switch (c) {
    case TensorClass::ColumnAdequate: return Condition::ColumnAdequate;
    case TensorClass::WeakColumnAdequate: return Condition::WeakColumnAdequate;
    case TensorClass::ColumnSufficient: return Condition::ColumnSufficient;
    case TensorClass::P0: return Condition::P0;
    case TensorClass::P: return Condition::P;
    case TensorClass::WeakP0: return Condition::WeakP0;
    case TensorClass::WeakP: return Condition::WeakP;
    case TensorClass::PSD: return Condition::PSD;
    case TensorClass::SemiPositive: return Condition::SemiPositive;
    case TensorClass::StrictlySemiPositive: return Condition::StrictlySemiPositive;
    case TensorClass::RowDiagonal: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace tcpkit
