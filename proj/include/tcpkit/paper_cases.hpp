#pragma once

// Regression runner over the worked examples: each case rebuilds an example, runs the
// relevant engine and diffs against the expected values.

#include "tcpkit/auxiliary.hpp"
#include "tcpkit/class_check.hpp"
#include "tcpkit/corpus.hpp"
#include "tcpkit/lcp.hpp"
#include "tcpkit/monomials.hpp"
#include "tcpkit/tcp.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace tcpkit {

struct PaperCaseResult {
  std::string id;
  std::string title;
  std::vector<std::string> mismatches;
  double millis = 0;
  bool passed() const { return mismatches.empty(); }
};

class CaseLog {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) mismatches_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) mismatches_.push_back(what + ": got " + show(got) + ", expected " + show(want));
  }
  std::vector<std::string>& mismatches() { return mismatches_; }

 private:
  static std::string show(const QVector& v) { return to_string(v); }
  static std::string show(const QMatrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + to_string(QVector(m.row(r).begin(), m.row(r).end()));
    return s + "]";
  }
  static std::string show(const std::vector<QVector>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
    return s + "}";
  }
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, bool>)
      return v ? "true" : "false";
    else if constexpr (std::is_arithmetic_v<T>)
      return std::to_string(v);
    else if constexpr (requires { to_string(v); })
      return to_string(v);
    else
      return "<value>";
  }
  std::vector<std::string> mismatches_;
};

struct PaperCase {
  std::string id;
  std::string title;
  std::function<void(CaseLog&, const CheckConfig&, const TcpConfig&)> run;
};

namespace detail {

inline std::vector<QVector> sorted(std::vector<QVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<QVector> exact_points(const std::vector<TcpSolution>& sols, CaseLog& log) {
  std::vector<QVector> out;
  for (const auto& s : sols) {
    log.expect(s.exact_x.has_value(), "a solution was not certified exactly");
    if (s.exact_x) out.push_back(*s.exact_x);
  }
  return sorted(out);
}

inline void expect_lifts(CaseLog& log, const TcpInstance& inst, const std::vector<TcpSolution>& sols) {
  for (const auto& c : check_lift_theorem(inst, sols)) log.expect(c.exact && c.passed, "lifted solution fails the auxiliary LCP");
}

/// Piece structure (sorted vertices, sorted rays) for order-insensitive comparison.
inline std::vector<std::pair<std::vector<QVector>, std::vector<QVector>>> piece_shapes(
    const std::vector<SolutionPiece>& pieces) {
  std::vector<std::pair<std::vector<QVector>, std::vector<QVector>>> out;
  for (const auto& p : pieces) out.emplace_back(sorted(p.vertices), sorted(p.rays));
  std::sort(out.begin(), out.end());
  return out;
}

inline QVector padded(const QVector& sub, const std::vector<int>& J, std::size_t n) {
  QVector x(n, Rational(0));
  for (std::size_t k = 0; k < J.size(); ++k) x[static_cast<std::size_t>(J[k])] = sub[k];
  return x;
}

/// Evaluates both sides of a claimed closed form at a few rational points.
inline void expect_formula(CaseLog& log, const SparseTensor& t, const std::function<QVector(const QVector&)>& f,
                           const std::string& what) {
  const std::vector<QVector> probes = {{1, 1}, {2, -3}, {Rational(-1, 2), Rational(5, 3)}, {0, 7}, {-4, 0}};
  for (const auto& x : probes) log.expect_eq(apply_deg(t, x), f(x), what + " at " + to_string(x));
}

inline void expect_fails(CaseLog& log, const Verdict& v, const SparseTensor& t, Condition cond,
                         const std::function<bool(const Counterexample&)>& family, const std::string& what) {
  log.expect_eq(v.status, Status::Fails, what + " verdict");
  if (!v.counterexample) return;
  log.expect(reverify(t, cond, *v.counterexample), what + ": counterexample does not re-verify");
  log.expect(family(*v.counterexample), what + ": counterexample " + to_string(v.counterexample->point) +
                                            " is outside the expected witness family");
}

}  // namespace detail

inline std::vector<PaperCase> paper_cases() {
  std::vector<PaperCase> cases;

  cases.push_back({"lex-order", "lexicographic order comparisons", [](CaseLog& log, auto&, auto&) {
                     log.expect(lex_compare({1, 2, 0}, {0, 3, 4}) > 0, "(1,2,0) >lex (0,3,4)");
                     log.expect(lex_compare({3, 2, 4}, {3, 2, 1}) > 0, "(3,2,4) >lex (3,2,1)");
                     log.expect(lex_compare({1, 0, 0}, {0, 1, 0}) > 0 && lex_compare({0, 1, 0}, {0, 0, 1}) > 0,
                                "x1 >lex x2 >lex x3");
                   }});

  cases.push_back({"grlex-order", "graded lexicographic order", [](CaseLog& log, auto&, auto&) {
                     log.expect(grlex_compare({1, 2, 3}, {3, 2, 0}) > 0, "(1,2,3) >grlex (3,2,0)");
                     log.expect(grlex_compare({1, 2, 4}, {1, 1, 5}) > 0, "(1,2,4) >grlex (1,1,5)");
                     std::vector<MultiIndex> mons = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
                     std::sort(mons.begin(), mons.end(),
                               [](const MultiIndex& a, const MultiIndex& b) { return grlex_compare(a, b) > 0; });
                     std::string got;
                     for (const auto& a : mons) got += monomial_label(a) + " ";
                     log.expect_eq(got, std::string("x1^2 x1*x2 x1*x3 x2^2 x2*x3 x3^2 "), "grlex arrangement");
                   }});

  cases.push_back({"principal-subtensors", "principal sub-tensors of a T_{3,3} tensor", [](CaseLog& log, auto&, auto&) {
                     const auto t = corpus::subtensor_source();
                     // Each sub-tensor, as its entry map in the reindexed coordinates.
                     auto entries = [&](std::vector<int> J) { return principal_subtensor(t, J).entries(); };
                     using E = std::map<TensorIndex, Rational>;
                     log.expect(entries({0}) == E{{{0, 0, 0}, 2}}, "J = {1}");
                     log.expect(entries({1}) == E{{{0, 0, 0}, -1}}, "J = {2}");
                     log.expect(entries({2}) == E{{{0, 0, 0}, 2}}, "J = {3}");
                     log.expect(entries({0, 1}) == E{{{0, 0, 0}, 2}, {{1, 1, 1}, -1}}, "J = {1,2}");
                     log.expect(entries({1, 2}) == E{{{0, 0, 0}, -1}, {{1, 1, 1}, 2}, {{0, 0, 1}, -2}, {{0, 1, 0}, 1},
                                                      {{0, 1, 1}, -1}},
                                "J = {2,3}");
                     log.expect(entries({0, 2}) == E{{{0, 0, 0}, 2}, {{1, 1, 1}, 2}}, "J = {1,3}");
                     log.expect(principal_subtensor(t, {0, 1, 2}) == t, "J = {1,2,3} is the tensor itself");
                   }});

  cases.push_back({"row-diagonal", "row diagonal tensor equals M(A) I_m", [](CaseLog& log, auto&, auto&) {
                     const auto t = corpus::row_diagonal();
                     log.expect(is_row_diagonal(t), "tensor is row diagonal");
                     log.expect_eq(majorization(t), QMatrix{{3, -2}, {1, 1}}, "M(A)");
                     log.expect(matrix_times_identity(majorization(t), 4) == t, "A = M(A) I_4");
                     log.expect(check_row_diagonal(t).status == Status::Holds, "row-diagonal check");
                     log.expect(!is_row_diagonal(corpus::majorization_source()), "majorization example is not row diagonal");
                   }});

  cases.push_back({"majorization", "majorization matrix", [](CaseLog& log, auto&, auto&) {
                     log.expect_eq(majorization(corpus::majorization_source()), QMatrix{{1, -1}, {0, 2}}, "M(A)");
                   }});

  cases.push_back({"mglo-order", "modified graded lexicographic order", [](CaseLog& log, auto&, auto&) {
                     log.expect(mglo_compare({2, 0, 0}, {0, 2, 0}) > 0, "(2,0,0) >mglo (0,2,0)");
                     log.expect(mglo_compare({2, 0, 0}, {2, 1, 0}) > 0, "(2,0,0) >mglo (2,1,0)");
                     log.expect(grlex_compare({2, 1, 0}, {2, 0, 0}) > 0, "(2,1,0) >grlex (2,0,0)");
                     log.expect(mglo_compare({2, 2, 0}, {2, 1, 1}) > 0, "(2,2,0) >mglo (2,1,1)");
                     MonomialBasis basis(3, 3);
                     std::string got;
                     for (const auto& a : basis.labels()) got += monomial_label(a) + " ";
                     log.expect_eq(got, std::string("x1^2 x2^2 x3^2 x1*x2 x1*x3 x2*x3 "), "mglo basis for m=3, n=3");
                   }});

  cases.push_back({"adequate-mixed-block", "column adequate tensor with B != O", [](CaseLog& log, auto& cc, auto&) {
                     const auto t = corpus::column_adequate_mixed();
                     detail::expect_formula(log, t, [](const QVector& x) {
                       Rational s = 2 * x[0] + x[1];
                       return QVector{s * x[0] * x[0], 2 * s * x[1] * x[1]};
                     }, "A x^3 closed form");
                     log.expect_eq(apply_deg(t, QVector{1, 1}), QVector{3, 6}, "A x^3 at (1,1)");
                     auto ad = check_column_adequate(t, cc);
                     log.expect(ad.status != Status::Fails, "adequacy must not be refuted");
                     const QVector w{1, Rational(-3, 2)};
                     log.expect(apply_full(t, w) < 0, "A x^4 < 0 at (1,-3/2), so not PSD");
                     detail::expect_fails(log, check_psd(t, cc), t, Condition::PSD, [](auto&) { return true; }, "PSD");
                     detail::expect_fails(log, check_p(t, cc), t, Condition::P, [](auto&) { return true; }, "P");
                   }});

  cases.push_back({"psd-adequate", "non-symmetric PSD column adequate tensor", [](CaseLog& log, auto& cc, auto&) {
                     const auto t = corpus::psd_adequate();
                     detail::expect_formula(log, t, [](const QVector& x) {
                       return QVector{x[0] * x[0] * (x[0] - x[1]), x[0] * x[0] * x[0]};
                     }, "A x^3 closed form");
                     log.expect(full_form(t) == std::map<std::vector<int>, Rational>{{{4, 0}, 1}}, "A x^4 = x1^4");
                     log.expect_eq(check_psd(t, cc).status, Status::Holds, "PSD verdict");
                     for (int k : {1, -2, 5}) log.expect(is_zero(apply_deg(t, QVector{0, k})), "A x^3 = 0 at (0,k)");
                     log.expect(check_column_adequate(t, cc).status != Status::Fails, "adequacy must not be refuted");
                   }});

  cases.push_back({"sufficient-not-adequate", "column sufficient tensor that is not column adequate",
                   [](CaseLog& log, auto& cc, auto&) {
                     const auto t = corpus::column_sufficient();
                     detail::expect_formula(log, t, [](const QVector& x) {
                       return QVector{-2 * x[0] * x[0] * x[1], x[0] * x[0] * x[0] + x[1] * x[1] * x[1]};
                     }, "A x^3 closed form");
                     log.expect_eq(apply_deg(t, QVector{1, 0}), QVector{0, 1}, "A x^3 at (1,0)");
                     log.expect(exact_violation(t, Condition::ColumnAdequate, {1, 0}).has_value(), "(1,0) violates adequacy");
                     detail::expect_fails(log, check_column_adequate(t, cc), t, Condition::ColumnAdequate,
                                          [](const Counterexample& ce) { return ce.point[1] == 0 && ce.point[0] > 0; },
                                          "adequacy");
                     log.expect(check_column_sufficient(t, cc).status != Status::Fails, "sufficiency must not be refuted");
                   }});

  cases.push_back({"p0-not-adequate", "P0 tensor that is not column adequate", [](CaseLog& log, auto& cc, auto&) {
                     const auto t = corpus::p0_not_adequate();
                     detail::expect_formula(log, t, [](const QVector& x) {
                       return QVector{x[0] * x[0] * x[0] - x[1] * x[1] * x[1], x[0] * x[1] * x[1]};
                     }, "A x^3 closed form");
                     for (int k : {1, -1, 3}) {
                       Rational kk = k;
                       log.expect_eq(apply_deg(t, QVector{0, kk}), QVector{-kk * kk * kk, 0}, "A x^3 at (0," + std::to_string(k) + ")");
                     }
                     log.expect(full_form(t) == std::map<std::vector<int>, Rational>{{{4, 0}, 1}}, "A x^4 = x1^4");
                     log.expect_eq(check_psd(t, cc).status, Status::Holds, "PSD verdict");
                     log.expect(check_p0(t, cc).status != Status::Fails, "P0 must not be refuted");
                     detail::expect_fails(log, check_column_adequate(t, cc), t, Condition::ColumnAdequate,
                                          [](const Counterexample& ce) { return ce.point[0] == 0 && ce.point[1] != 0; },
                                          "adequacy");
                   }});

  cases.push_back({"weak-adequate", "weak column adequate tensor of odd order", [](CaseLog& log, auto& cc, auto&) {
                     const auto t = corpus::weak_adequate();
                     detail::expect_formula(log, t, [](const QVector& x) { return QVector{x[0] * x[0], 0}; },
                                            "A x^2 closed form");
                     log.expect(exact_violation(t, Condition::ColumnAdequate, {-1, 0}).has_value(), "(-1,0) violates adequacy");
                     detail::expect_fails(log, check_column_adequate(t, cc), t, Condition::ColumnAdequate,
                                          [](const Counterexample& ce) { return ce.point[1] == 0 && ce.point[0] < 0; },
                                          "adequacy");
                     log.expect(check_weak_column_adequate(t, cc).status != Status::Fails, "weak adequacy must not be refuted");
                   }});

  cases.push_back({"aux-order3", "auxiliary LCP of a T_{3,2} tensor", [](CaseLog& log, auto&, auto& tc) {
                     const auto t = corpus::diagonal_order3();
                     AuxiliarySystem aux(t);
                     log.expect_eq(aux.coef(), QMatrix{{1, 0, 0}, {0, 1, 0}}, "coef");
                     log.expect_eq(aux.abar(), QMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, "Abar");
                     const QVector q{0, -1};
                     log.expect_eq(pad_rhs(q, aux.N()), QVector{0, -1, 0}, "qbar");
                     TcpInstance inst(t, q);
                     auto sols = solve_enumerate(inst, tc);
                     log.expect_eq(detail::exact_points(sols, log), std::vector<QVector>{{0, 1}}, "SOL(q, A)");
                     LcpInstance lcp(aux.abar(), pad_rhs(q, aux.N()));
                     auto shapes = detail::piece_shapes(enumerate_solutions(lcp, tc.lcp_cap));
                     decltype(shapes) want = {{{{0, 1, 0}}, {{0, 0, 1}}}};
                     log.expect(shapes == want, "SOL(qbar, Abar) = {(0,1,y3), y3 >= 0}");
                     log.expect_eq(lift_solution(aux, q, {0, 1}), QVector{0, 1, 0}, "lift of (0,1)");
                     detail::expect_lifts(log, inst, sols);
                   }});

  cases.push_back({"aux-order4", "auxiliary LCP of a T_{4,2} tensor", [](CaseLog& log, auto&, auto& tc) {
                     const auto t = corpus::mixed_order4();
                     AuxiliarySystem aux(t);
                     log.expect_eq(aux.coef(), QMatrix{{1, 0, -2, 1}, {0, 1, 0, 0}}, "coef");
                     const QVector q{0, -1};
                     log.expect_eq(pad_rhs(q, aux.N()), QVector{0, -1, 0, 0}, "qbar");
                     TcpInstance inst(t, q);
                     auto sols = solve_enumerate(inst, tc);
                     log.expect_eq(detail::exact_points(sols, log), std::vector<QVector>{{0, 1}, {1, 1}}, "SOL(q, A)");
                     LcpInstance lcp(aux.abar(), pad_rhs(q, aux.N()));
                     auto shapes = detail::piece_shapes(enumerate_solutions(lcp, tc.lcp_cap));
                     // (2y3-y4, 1, y3, y4) with 2y3 >= y4 >= 0, and (0, 1, y3, y4) with y4 >= 2y3 >= 0.
                     decltype(shapes) want = {{{{0, 1, 0, 0}}, {{0, 0, 0, 1}, {0, 0, 1, 2}}},
                                              {{{0, 1, 0, 0}}, {{0, 0, 1, 2}, {2, 0, 1, 0}}}};
                     std::sort(want.begin(), want.end());
                     log.expect(shapes == want, "SOL(qbar, Abar) families");
                     log.expect_eq(lift_solution(aux, q, {0, 1}), QVector{0, 1, 0, 0}, "lift of (0,1)");
                     log.expect_eq(lift_solution(aux, q, {1, 1}), QVector{1, 1, 1, 1}, "lift of (1,1)");
                     detail::expect_lifts(log, inst, sols);
                   }});

  cases.push_back({"omega-quadrants", "unique w in every sign quadrant of q", [](CaseLog& log, auto&, auto& tc) {
                     const auto t = corpus::diagonal_order3();
                     AuxiliarySystem aux(t);
                     struct Quadrant {
                       QVector q, base, w;
                     };
                     const std::vector<Quadrant> quads = {{{2, 3}, {0, 0, 0}, {2, 3, 0}},
                                                          {{-2, -3}, {2, 3, 0}, {0, 0, 0}},
                                                          {{2, -3}, {0, 3, 0}, {2, 0, 0}},
                                                          {{-2, 3}, {2, 0, 0}, {0, 3, 0}}};
                     for (const auto& [q, base, w] : quads) {
                       const std::string tag = "q = " + to_string(q);
                       LcpInstance lcp(aux.abar(), pad_rhs(q, aux.N()));
                       auto pieces = enumerate_solutions(lcp, tc.lcp_cap);
                       decltype(detail::piece_shapes(pieces)) want = {{{base}, {{0, 0, 1}}}};
                       log.expect(detail::piece_shapes(pieces) == want, tag + ": SOL(qbar, Abar) = base + y3 e3");
                       auto wu = w_unique(lcp, tc.lcp_cap);
                       log.expect(wu.unique && wu.w_values == std::vector<QVector>{w}, tag + ": unique w");
                       auto rep = omega_unique(TcpInstance(t, q), tc);
                       log.expect_eq(rep.unique, Uniqueness::Unique, tag + ": omega uniqueness");
                       log.expect(rep.omega_values == std::vector<QVector>{QVector(w.begin(), w.begin() + 2)},
                                  tag + ": omega value");
                     }
                   }});

  cases.push_back({"row-diagonal-block", "even order, B = O and adequate M(A)", [](CaseLog& log, auto& cc, auto& tc) {
                     const auto t = corpus::row_diagonal_block();
                     AuxiliarySystem aux(t);
                     log.expect_eq(aux.coef(), QMatrix{{1, -1, 0, 0}, {-1, 1, 0, 0}}, "coef");
                     log.expect_eq(majorization(t), QMatrix{{1, -1}, {-1, 1}}, "M(A)");
                     log.expect(aux.mixed_block_zero(), "B = O");
                     log.expect_eq(matrix_column_adequate(majorization(t)).status, Status::Holds, "M(A) adequate");
                     log.expect_eq(matrix_column_adequate(aux.abar()).status, Status::Holds, "Abar adequate");
                     auto v = check_column_adequate(t, cc);
                     log.expect_eq(v.status, Status::Holds, "tensor adequacy");
                     log.expect(v.certificate.has_value(), "certificate present");
                     for (const QVector& q : std::vector<QVector>{{1, -1}, {-1, 1}, {0, 0}, {2, 3}, {-1, -1}}) {
                       auto rep = omega_unique(TcpInstance(t, q), tc);
                       log.expect_eq(rep.unique, Uniqueness::Unique, "omega uniqueness at q = " + to_string(q));
                     }
                   }});

  return cases;
}

inline std::vector<PaperCaseResult> run_paper_suite(const CheckConfig& cc = {}, const TcpConfig& tc = {}) {
  std::vector<PaperCaseResult> out;
  for (const auto& c : paper_cases()) {
    PaperCaseResult r{c.id, c.title, {}, 0};
    CaseLog log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(log, cc, tc);
    } catch (const std::exception& e) {
      log.expect(false, std::string("exception: ") + e.what());
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.mismatches = std::move(log.mismatches());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tcpkit
