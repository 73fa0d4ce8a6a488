#pragma once

#include "tcpkit/auxiliary.hpp"
#include "tcpkit/lcp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tcpkit {

inline constexpr std::size_t kDefaultTcpEnumerationCap = 4;

struct TcpConfig {
  std::size_t budget = 32;  // random Newton starts per support
  std::uint64_t seed = 20240611;
  std::size_t tcp_cap = kDefaultTcpEnumerationCap;
  std::size_t lcp_cap = kDefaultLcpEnumerationCap;
  std::size_t dense_cap = kDefaultDenseCap;
  double tolerance = kFloatTolerance;
  double dedup_tolerance = 1e-8;
};

/// TCP(q, A): x >= 0, omega = A x^{m-1} + q >= 0, x^T omega = 0.
struct TcpInstance {
  SparseTensor tensor;
  QVector q;

  TcpInstance(SparseTensor t, QVector rhs) : tensor(std::move(t)), q(std::move(rhs)) {
    if (static_cast<int>(q.size()) != tensor.dim())
      throw Error("TCP: q has length " + std::to_string(q.size()) + ", tensor dimension is " +
                  std::to_string(tensor.dim()));
  }
  int n() const { return tensor.dim(); }
  int m() const { return tensor.order(); }
};

struct TcpSolution {
  std::vector<double> x;
  std::vector<double> omega;
  double residual = 0;
  std::optional<QVector> exact_x;     // x itself, verified exactly
  std::optional<QVector> root_point;  // y with x = y^{[1/(m-1)]}, verified exactly
  std::optional<QVector> exact_omega;
  bool exact() const { return exact_x || root_point; }
};

/// Float check within `tol`.
inline bool verify_tcp(const SparseTensor& t, const std::vector<double>& q, const std::vector<double>& x,
                       double tol = kFloatTolerance) {
  if (static_cast<int>(x.size()) != t.dim() || q.size() != x.size()) return false;
  std::vector<double> w = apply_deg(t, x);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += q[i];
  return is_complementary(x, w, tol);
}

// ---------------------------------------------------------------------------
// Exact arithmetic for points given as componentwise real roots

namespace detail {

inline std::optional<Integer> integer_root(const Integer& v, int k) {
  if (v < 0) return std::nullopt;
  if (v < 2 || k == 1) return v;
  Integer lo = 0, hi = Integer(1) << (boost::multiprecision::msb(v) / static_cast<unsigned>(k) + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == v) return lo;
  return std::nullopt;
}

}  // namespace detail

/// The real rational k-th root of v, when it exists; negative v needs odd k.
inline std::optional<Rational> rational_root(const Rational& v, int k) {
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = rational_root(Rational(-v), k);
    if (!r) return std::nullopt;
    return Rational(-*r);
  }
  auto num = detail::integer_root(boost::multiprecision::numerator(v), k);
  auto den = detail::integer_root(boost::multiprecision::denominator(v), k);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

/// A x^{m-1} for x = y^{[1/(m-1)]} (real roots), when every term is rational.
inline std::optional<QVector> root_image(const SparseTensor& t, const QVector& y) {
  if (static_cast<int>(y.size()) != t.dim()) throw Error("root_image: dimension mismatch");
  const int k = t.order() - 1;
  if (k % 2 == 0 && std::any_of(y.begin(), y.end(), [](const Rational& v) { return v < 0; })) return std::nullopt;
  QVector out(y.size(), Rational(0));
  for (const auto& [idx, coef] : t.entries()) {
    Rational prod = 1;
    for (std::size_t p = 1; p < idx.size(); ++p) prod *= y[idx[p]];
    auto root = rational_root(prod, k);
    if (!root) return std::nullopt;
    out[idx[0]] += coef * *root;
  }
  return out;
}

/// Exact check that x = y^{[1/(m-1)]} solves TCP(q, A); nullopt when undecidable in Q.
inline std::optional<bool> verify_tcp_root(const SparseTensor& t, const QVector& q, const QVector& y) {
  if (y.size() != q.size()) return false;
  if (std::any_of(y.begin(), y.end(), [](const Rational& v) { return v < 0; })) return false;
  auto img = root_image(t, y);
  if (!img) return std::nullopt;
  for (std::size_t i = 0; i < y.size(); ++i) (*img)[i] += q[i];
  return is_complementary(y, *img);  // x_i and y_i share their sign
}

inline std::vector<double> root_point_to_x(const QVector& y, int k) {
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    double v = to_double(y[i]);
    x[i] = std::copysign(std::pow(std::fabs(v), 1.0 / k), v);
  }
  return x;
}

namespace detail {

inline TcpSolution make_solution(const SparseTensor& t, const QVector& q, std::vector<double> x) {
  TcpSolution s;
  s.x = std::move(x);
  s.omega = apply_deg(t, s.x);
  const auto qd = to_double(q);
  for (std::size_t i = 0; i < qd.size(); ++i) s.omega[i] += qd[i];
  s.residual = complementarity_residual(s.x, s.omega);
  return s;
}

/// Tries to promote a float solution to an exactly verified one.
inline void certify(const SparseTensor& t, const QVector& q, TcpSolution& s) {
  const int k = t.order() - 1;
  for (std::int64_t den : {std::int64_t{1}, std::int64_t{1000}, std::int64_t{1000000}}) {
    QVector xr = snap_rational(s.x, den);
    if (verify_tcp(t, q, xr)) {
      s.exact_omega = apply_deg(t, xr);
      for (std::size_t i = 0; i < q.size(); ++i) (*s.exact_omega)[i] += q[i];
      s.x = to_double(xr);
      s.omega = to_double(*s.exact_omega);
      s.residual = 0;
      s.exact_x = std::move(xr);
      return;
    }
  }
  std::vector<double> y(s.x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::pow(std::max(s.x[i], 0.0), k);
  for (std::int64_t den : {std::int64_t{1}, std::int64_t{1000}, std::int64_t{1000000}}) {
    QVector yr = snap_rational(y, den);
    if (verify_tcp_root(t, q, yr).value_or(false)) {
      auto img = *root_image(t, yr);
      for (std::size_t i = 0; i < q.size(); ++i) img[i] += q[i];
      s.x = root_point_to_x(yr, k);
      s.omega = to_double(img);
      s.residual = complementarity_residual(s.x, s.omega);
      s.exact_omega = std::move(img);
      s.root_point = std::move(yr);
      return;
    }
  }
}

inline void sort_and_dedup(std::vector<TcpSolution>& sols, double tol) {
  std::stable_sort(sols.begin(), sols.end(), [](const TcpSolution& a, const TcpSolution& b) {
    if (a.exact() != b.exact()) return a.exact();
    return a.x < b.x;
  });
  std::vector<TcpSolution> out;
  for (auto& s : sols) {
    bool dup = false;
    for (const auto& o : out) {
      double d = 0;
      for (std::size_t i = 0; i < s.x.size(); ++i) d = std::max(d, std::fabs(s.x[i] - o.x[i]));
      if (d <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const TcpSolution& a, const TcpSolution& b) { return a.x < b.x; });
  sols = std::move(out);
}

/// Damped Newton on {(A x^{m-1})_S + q_S = 0, x_i = 0 off S}.
inline std::optional<std::vector<double>> newton_on_support(const FloatTensor& ft, const std::vector<double>& q,
                                                            const std::vector<int>& s, std::vector<double> x) {
  const std::size_t n = q.size(), d = s.size();
  auto residual = [&](const std::vector<double>& pt, Eigen::VectorXd& f) {
    auto ax = ft.apply_deg(pt);
    f.resize(static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a) f[static_cast<Eigen::Index>(a)] = ax[s[a]] + q[s[a]];
    return f.lpNorm<Eigen::Infinity>();
  };
  Eigen::VectorXd f, f_try;
  double fn = residual(x, f);
  for (int it = 0; it < 100; ++it) {
    if (fn == 0) break;
    auto jac = ft.jacobian(x);
    Eigen::MatrixXd j(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = jac[s[a] * n + s[b]];
    Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(-f);
    if (!step.allFinite() || step.lpNorm<Eigen::Infinity>() == 0) break;
    double t = 1;
    std::vector<double> trial(x);
    bool accepted = false;
    while (t > 1e-10) {
      for (std::size_t a = 0; a < d; ++a) trial[s[a]] = x[s[a]] + t * step[static_cast<Eigen::Index>(a)];
      double ft_norm = residual(trial, f_try);
      if (ft_norm < fn) {
        x = trial;
        f = f_try;
        fn = ft_norm;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    double xs = 0;
    for (double v : x) xs = std::max(xs, std::fabs(v));
    if (t * step.lpNorm<Eigen::Infinity>() <= 1e-16 * (1 + xs)) break;
  }
  for (auto& v : x)
    if (v < 0 && v > -1e-10) v = 0;
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) return std::nullopt;
  return x;
}

}  // namespace detail

/// Multi-start Newton over every support S of [n]. Completeness is heuristic: a missing
/// solution is possible, every returned one passes verification.
inline std::vector<TcpSolution> solve_enumerate(const TcpInstance& inst, const TcpConfig& cfg = {}) {
  const auto n = static_cast<std::size_t>(inst.n());
  if (n > cfg.tcp_cap)
    throw Error("TCP enumeration: dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cfg.tcp_cap));
  const int m = inst.m();
  const FloatTensor ft(inst.tensor);
  const auto qd = to_double(inst.q);
  std::vector<TcpSolution> found;

  double qn = 0, an = 0;
  for (double v : qd) qn = std::max(qn, std::fabs(v));
  for (double v : ft.apply_deg(std::vector<double>(n, 1.0))) an = std::max(an, std::fabs(v));
  double radius = an > 0 ? 2 * std::pow(qn / an, 1.0 / (m - 1)) : 1.0;
  radius = std::clamp(radius, 1.0, 1e3);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, radius);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<int>(i));
    if (s.empty()) {
      std::vector<double> zero(n, 0.0);
      if (verify_tcp(inst.tensor, qd, zero, cfg.tolerance)) {
        auto sol = detail::make_solution(inst.tensor, inst.q, zero);
        detail::certify(inst.tensor, inst.q, sol);
        found.push_back(std::move(sol));
      }
      continue;
    }
    std::vector<std::vector<double>> starts;
    for (double scale : {0.1, 1.0, 10.0}) {
      std::vector<double> x0(n, 0.0);
      for (int i : s) x0[i] = scale;
      starts.push_back(std::move(x0));
    }
    for (std::size_t b = 0; b < cfg.budget; ++b) {
      std::vector<double> x0(n, 0.0);
      for (int i : s) x0[i] = unif(rng);
      starts.push_back(std::move(x0));
    }
    for (auto& x0 : starts) {
      auto x = detail::newton_on_support(ft, qd, s, std::move(x0));
      if (!x || !verify_tcp(inst.tensor, qd, *x, cfg.tolerance)) continue;
      auto sol = detail::make_solution(inst.tensor, inst.q, std::move(*x));
      detail::certify(inst.tensor, inst.q, sol);
      found.push_back(std::move(sol));
    }
  }
  detail::sort_and_dedup(found, cfg.dedup_tolerance);
  return found;
}

/// Even order with B = O: TCP(q, A) is LCP(q, M(A)) in y = x^{[m-1]}.
struct ReducedSolution {
  std::vector<SolutionPiece> pieces;  // in y-space; x = y^{[1/(m-1)]}
  std::vector<TcpSolution> vertices;  // one TcpSolution per distinct piece vertex
};

inline bool reduction_applies(const TcpInstance& inst, const AuxiliarySystem& aux) {
  return inst.m() % 2 == 0 && aux.mixed_block_zero();
}

inline ReducedSolution solve_exact_reduced(const TcpInstance& inst, const TcpConfig& cfg = {}) {
  AuxiliarySystem aux(inst.tensor, cfg.dense_cap);
  if (inst.m() % 2 != 0) throw Error("exact reduction needs even order m; use the enumeration method");
  if (!aux.mixed_block_zero()) throw Error("exact reduction needs B = O; use the enumeration method");
  const int k = inst.m() - 1;
  LcpInstance lcp(majorization(inst.tensor), inst.q);
  ReducedSolution out;
  out.pieces = enumerate_solutions(lcp, cfg.lcp_cap);
  std::vector<QVector> seen;
  for (const auto& p : out.pieces)
    for (const auto& y : p.vertices) {
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
      seen.push_back(y);
      TcpSolution s = detail::make_solution(inst.tensor, inst.q, root_point_to_x(y, k));
      s.exact_omega = lcp.w(y);
      s.omega = to_double(*s.exact_omega);
      s.residual = complementarity_residual(s.x, s.omega);
      QVector xr(y.size());
      bool rational = true;
      for (std::size_t i = 0; i < y.size() && rational; ++i) {
        auto r = rational_root(y[i], k);
        if (r)
          xr[i] = *r;
        else
          rational = false;
      }
      if (rational) {
        s.exact_x = xr;
        s.x = to_double(xr);
      }
      s.root_point = y;
      out.vertices.push_back(std::move(s));
    }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const TcpSolution& a, const TcpSolution& b) { return a.x < b.x; });
  return out;
}

// ---------------------------------------------------------------------------
// Omega uniqueness

enum class Uniqueness { Unique, NotUnique, Unknown };
enum class OmegaMethod { AuxiliaryTransfer, RowDiagonalReduction, DirectEnumeration };

inline const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Unique: return "unique";
    case Uniqueness::NotUnique: return "not-unique";
    case Uniqueness::Unknown: return "unknown";
  }
  return "?";
}

inline const char* to_string(OmegaMethod m) {
  switch (m) {
    case OmegaMethod::AuxiliaryTransfer: return "auxiliary-transfer";
    case OmegaMethod::RowDiagonalReduction: return "row-diagonal-reduction";
    case OmegaMethod::DirectEnumeration: return "direct-enumeration";
  }
  return "?";
}

struct OmegaReport {
  Uniqueness unique = Uniqueness::Unknown;
  OmegaMethod method = OmegaMethod::DirectEnumeration;
  bool vacuous = false;  // certified path found an empty solution set
  std::vector<QVector> omega_values;
  std::vector<std::vector<double>> omega_float;  // direct enumeration only
  std::optional<std::pair<TcpSolution, TcpSolution>> witness;
  std::string note;
};

namespace detail {

/// A TCP solution from an LCP(q, M(A)) solution y when B = O.
inline TcpSolution from_reduced_y(const TcpInstance& inst, const QVector& y_full) {
  const auto n = static_cast<std::size_t>(inst.n());
  QVector y(y_full.begin(), y_full.begin() + static_cast<std::ptrdiff_t>(n));
  TcpSolution s = make_solution(inst.tensor, inst.q, root_point_to_x(y, inst.m() - 1));
  QVector w = majorization(inst.tensor) * y;
  for (std::size_t i = 0; i < n; ++i) w[i] += inst.q[i];
  s.exact_omega = w;
  s.omega = to_double(w);
  s.residual = complementarity_residual(s.x, s.omega);
  s.root_point = std::move(y);
  return s;
}

inline QVector head(const QVector& v, std::size_t n) {
  return QVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace detail

/// Certifies uniqueness only through w-uniqueness of an exact LCP; every lifted TCP solution
/// y has w = (omega, 0), so a unique w pins omega for any order. Direct enumeration can only
/// refute uniqueness.
inline OmegaReport omega_unique(const TcpInstance& inst, const TcpConfig& cfg = {}) {
  OmegaReport rep;
  const auto n = static_cast<std::size_t>(inst.n());
  AuxiliarySystem aux(inst.tensor, cfg.dense_cap);
  const bool reducible = reduction_applies(inst, aux);

  if (aux.dense_available() && aux.N() <= cfg.lcp_cap) {
    LcpInstance lcp(aux.abar(), pad_rhs(inst.q, aux.N()));
    auto w = w_unique(lcp, cfg.lcp_cap);
    if (w.unique) {
      rep.unique = Uniqueness::Unique;
      rep.method = OmegaMethod::AuxiliaryTransfer;
      rep.vacuous = w.vacuous;
      for (const auto& v : w.w_values) rep.omega_values.push_back(detail::head(v, n));
      return rep;
    }
    if (reducible && w.witness_pair) {
      rep.unique = Uniqueness::NotUnique;
      rep.method = OmegaMethod::AuxiliaryTransfer;
      for (const auto& v : w.w_values) {
        auto h = detail::head(v, n);
        if (std::find(rep.omega_values.begin(), rep.omega_values.end(), h) == rep.omega_values.end())
          rep.omega_values.push_back(std::move(h));
      }
      rep.witness = std::make_pair(detail::from_reduced_y(inst, truncate(w.witness_pair->first, n)),
                                   detail::from_reduced_y(inst, truncate(w.witness_pair->second, n)));
      return rep;
    }
    rep.note = "auxiliary LCP is not w-unique; B != O or odd order, so this does not transfer";
  } else if (reducible && n <= cfg.lcp_cap) {
    LcpInstance lcp(majorization(inst.tensor), inst.q);
    auto w = w_unique(lcp, cfg.lcp_cap);
    rep.method = OmegaMethod::RowDiagonalReduction;
    rep.vacuous = w.vacuous;
    rep.omega_values = w.w_values;
    if (w.unique) {
      rep.unique = Uniqueness::Unique;
    } else {
      rep.unique = Uniqueness::NotUnique;
      rep.witness = std::make_pair(detail::from_reduced_y(inst, w.witness_pair->first),
                                   detail::from_reduced_y(inst, w.witness_pair->second));
    }
    return rep;
  } else {
    rep.note = "auxiliary system too large for exact enumeration";
  }

  rep.method = OmegaMethod::DirectEnumeration;
  if (n > cfg.tcp_cap) {
    rep.note += rep.note.empty() ? "" : "; ";
    rep.note += "dimension exceeds the enumeration cap";
    return rep;
  }
  auto sols = solve_enumerate(inst, cfg);
  std::vector<const TcpSolution*> reps;
  for (const auto& s : sols) {
    bool known = false;
    for (const auto* r : reps) {
      double d = 0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(s.omega[i] - r->omega[i]));
      if (d <= cfg.dedup_tolerance) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(&s);
  }
  for (const auto* r : reps) {
    rep.omega_float.push_back(r->omega);
    if (r->exact_omega) rep.omega_values.push_back(*r->exact_omega);
  }
  if (reps.size() >= 2) {
    // Prefer an exactly verified pair.
    std::stable_sort(reps.begin(), reps.end(), [](const TcpSolution* a, const TcpSolution* b) {
      return a->exact() && !b->exact();
    });
    rep.unique = Uniqueness::NotUnique;
    rep.witness = std::make_pair(*reps[0], *reps[1]);
  } else {
    rep.unique = Uniqueness::Unknown;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lifting check

struct LiftCheck {
  std::vector<double> x;
  bool exact = false;  // decided in rational arithmetic
  bool passed = false;
};

/// Lifts every solution to y = (x^alpha) and checks y against LCP(qbar, Abar).
inline std::vector<LiftCheck> check_lift_theorem(const TcpInstance& inst, const std::vector<TcpSolution>& sols,
                                                 double tol = 1e-8) {
  AuxiliarySystem aux(inst.tensor);
  const QMatrix& coef = aux.coef();
  const QVector qbar = pad_rhs(inst.q, aux.N());
  const int k = inst.m() - 1;
  std::vector<LiftCheck> out;
  for (const auto& s : sols) {
    LiftCheck c;
    c.x = s.x;
    std::optional<QVector> y;
    if (s.exact_x) {
      y = aux.basis().lift(*s.exact_x);
    } else if (s.root_point) {
      QVector ly(aux.N());
      bool ok = true;
      for (std::size_t j = 0; j < aux.N() && ok; ++j) {
        Rational prod = 1;
        const auto& alpha = aux.basis()[j];
        for (std::size_t i = 0; i < alpha.size(); ++i)
          for (int e = 0; e < alpha[i]; ++e) prod *= (*s.root_point)[i];
        auto r = rational_root(prod, k);
        if (r)
          ly[j] = *r;
        else
          ok = false;
      }
      if (ok) y = std::move(ly);
    }
    if (y) {
      c.exact = true;
      if (aux.dense_available()) {
        c.passed = verify(LcpInstance(aux.abar(), qbar), *y);
      } else {
        QVector w = coef * *y;
        w.resize(aux.N(), Rational(0));
        for (std::size_t i = 0; i < qbar.size(); ++i) w[i] += qbar[i];
        c.passed = is_complementary(*y, w);
      }
    } else {
      auto yd = aux.basis().lift(s.x);
      auto w = to_double(coef) * yd;
      w.resize(aux.N(), 0.0);
      const auto qd = to_double(qbar);
      for (std::size_t i = 0; i < qd.size(); ++i) w[i] += qd[i];
      double scale = 1;
      for (double v : yd) scale = std::max(scale, std::fabs(v));
      c.passed = is_complementary(yd, w, tol * scale);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tcpkit
