// tcpkit command-line front end. Exit codes: check returns 0/1/2 for holds/fails/unknown,
// reproduce-paper returns 1 on any mismatch, and input errors return 3.

#include "tcpkit/tcpkit.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace tcpkit;

namespace {

constexpr int kInputError = 3;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); }
};

struct Globals {
  RunConfig run;
  std::string format = "text";
  bool exact = false, floating = false;
  std::optional<std::uint64_t> seed;
};

void emit(const RunConfig& rc, Json j, const std::string& text, const Timer& timer) {
  if (rc.format == OutputFormat::Json) {
    j["timings"] = {{"total_ms", timer.ms()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<int> parse_index_list(const std::string& s, int n, const char* what) {
  std::vector<int> out;
  for (const auto& v : parse_vector(s)) {
    if (denominator(v) != 1) throw Error(std::string(what) + ": indices must be integers");
    int i = numerator(v).convert_to<int>();
    if (i < 1 || i > n) throw Error(std::string(what) + ": index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    out.push_back(i - 1);
  }
  return out;
}

QVector require_length(QVector v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n)
    throw Error(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  return v;
}

// ---------------------------------------------------------------------------

int cmd_tensor_info(const RunConfig& rc, const std::string& path) {
  Timer timer;
  auto t = load_tensor(path);
  AuxiliarySystem aux(t, rc.dense_cap);
  const QMatrix M = majorization(t);
  Json j{{"order", t.order()}, {"dim", t.dim()}, {"nnz", t.nnz()}, {"N", aux.N()},
         {"row_diagonal", is_row_diagonal(t)}, {"mixed_block_zero", aux.mixed_block_zero()},
         {"majorization", to_json(M)}};
  std::string text = "order m = " + std::to_string(t.order()) + ", dimension n = " + std::to_string(t.dim()) +
                     ", stored entries = " + std::to_string(t.nnz()) + "\n";
  text += "monomials N = " + std::to_string(aux.N()) + "\n";
  text += std::string("row diagonal: ") + (is_row_diagonal(t) ? "yes" : "no") + "\n";
  text += std::string("mixed block B = O: ") + (aux.mixed_block_zero() ? "yes" : "no") + "\n";
  text += "majorization matrix M(A):\n" + format_matrix(M);
  emit(rc, j, text, timer);
  return 0;
}

int cmd_tensor_apply(const RunConfig& rc, const std::string& path, const std::string& xs) {
  Timer timer;
  auto t = load_tensor(path);
  QVector x = require_length(parse_vector(xs), t.dim(), "--x");
  Json j;
  std::string text;
  if (rc.mode == ArithmeticMode::Exact) {
    auto ax = apply_deg(t, x);
    auto axm = apply_full(t, x);
    j = {{"x", to_json(x)}, {"apply_deg", to_json(ax)}, {"apply_full", to_string(axm)}};
    text = "A x^(m-1) = " + to_string(ax) + "\nA x^m = " + to_string(axm) + "\n";
  } else {
    auto xd = to_double(x);
    auto ax = apply_deg(t, xd);
    double axm = apply_full(t, xd);
    j = {{"x", xd}, {"apply_deg", ax}, {"apply_full", axm}};
    text = "A x^(m-1) = " + to_string(ax) + "\nA x^m = " + format_double(axm) + "\n";
  }
  emit(rc, j, text, timer);
  return 0;
}

int cmd_tensor_subtensor(const RunConfig& rc, const std::string& path, const std::string& idx) {
  Timer timer;
  auto t = load_tensor(path);
  auto J = parse_index_list(idx, t.dim(), "--indices");
  auto sub = principal_subtensor(t, J);
  emit(rc, Json{{"tensor", format_tensor(sub)}}, format_tensor(sub), timer);
  return 0;
}

int cmd_tensor_transform(const RunConfig& rc, const std::string& path, const std::string& p, const std::string& q,
                         const std::string& perm) {
  Timer timer;
  auto t = load_tensor(path);
  SparseTensor out = t;
  if (!perm.empty()) {
    auto sigma = parse_index_list(perm, t.dim(), "--perm");
    out = transform_perm(out, permutation_matrix(sigma));
  }
  if (!p.empty() || !q.empty()) {
    QVector pd = p.empty() ? QVector(t.dim(), Rational(1)) : require_length(parse_vector(p), t.dim(), "--diag-p");
    QVector qd = q.empty() ? QVector(t.dim(), Rational(1)) : require_length(parse_vector(q), t.dim(), "--diag-q");
    out = transform_diag(out, QMatrix::diagonal(pd), QMatrix::diagonal(qd));
  }
  emit(rc, Json{{"tensor", format_tensor(out)}}, format_tensor(out), timer);
  return 0;
}

int cmd_aux_build(const RunConfig& rc, const std::string& path, const std::string& qs, bool delimited) {
  Timer timer;
  auto t = load_tensor(path);
  AuxiliarySystem aux(t, rc.dense_cap);
  std::optional<QVector> q;
  if (!qs.empty()) q = require_length(parse_vector(qs), t.dim(), "--q");
  const auto headers = monomial_headers(aux);
  std::string text;
  if (delimited) {
    auto row = [](const std::string& name, const QVector& v) {
      std::string s = name;
      for (const auto& x : v) s += "," + to_string(x);
      return s + "\n";
    };
    text = "matrix,row";
    for (const auto& h : headers) text += "," + h;
    text += "\n";
    for (std::size_t r = 0; r < aux.n(); ++r)
      text += row("coef," + std::to_string(r + 1), QVector(aux.coef().row(r).begin(), aux.coef().row(r).end()));
    if (aux.dense_available()) {
      const auto abar = aux.abar();
      for (std::size_t r = 0; r < abar.rows(); ++r)
        text += row("abar," + std::to_string(r + 1), QVector(abar.row(r).begin(), abar.row(r).end()));
    }
    if (q) text += row("qbar,", pad_rhs(*q, aux.N()));
  } else {
    text = "coef (" + std::to_string(aux.n()) + " x " + std::to_string(aux.N()) + "):\n" + format_matrix(aux.coef(), headers);
    if (aux.dense_available())
      text += "Abar (" + std::to_string(aux.N()) + " x " + std::to_string(aux.N()) + "):\n" + format_matrix(aux.abar(), headers);
    else
      text += "Abar not formed: N = " + std::to_string(aux.N()) + " exceeds the dense cap\n";
    if (q) text += "qbar = " + to_string(pad_rhs(*q, aux.N())) + "\n";
    text += std::string("mixed block B = O: ") + (aux.mixed_block_zero() ? "yes" : "no") + "\n";
  }
  emit(rc, to_json(aux, q), text, timer);
  return 0;
}

LcpInstance load_lcp(const std::string& path, const std::string& qs) {
  QMatrix M = parse_matrix(read_text_file(path));
  return LcpInstance(M, require_length(parse_vector(qs), static_cast<int>(M.rows()), "--q"));
}

int cmd_lcp_solve(const RunConfig& rc, const std::string& path, const std::string& qs, const std::string& method) {
  Timer timer;
  auto inst = load_lcp(path, qs);
  if (method == "enumerate") {
    auto pieces = enumerate_solutions(inst, rc.lcp_cap);
    std::string text = pieces.empty() ? "no solution\n" : "";
    for (const auto& p : pieces) text += format_piece(p) + "\n";
    emit(rc, Json{{"method", "enumerate"}, {"pieces", to_json(pieces)}}, text, timer);
    return 0;
  }
  if (method != "lemke") throw Error("unknown LCP method '" + method + "'");
  Json j{{"method", "lemke"}};
  std::string text;
  if (rc.mode == ArithmeticMode::Exact) {
    auto r = lemke_solve(inst);
    j["status"] = to_string(r.status);
    j["pivots"] = r.pivots;
    j["solutions"] = r.status == LemkeStatus::Solved ? Json::array({{{"z", to_json(r.z)}, {"w", to_json(r.w)}}}) : Json::array();
    text = std::string("lemke: ") + to_string(r.status) + " after " + std::to_string(r.pivots) + " pivots\n";
    if (r.status == LemkeStatus::Solved) text += "z = " + to_string(r.z) + "\nw = " + to_string(r.w) + "\n";
  } else {
    auto r = lemke_solve(to_double(inst.M), to_double(inst.q));
    j["status"] = to_string(r.status);
    j["pivots"] = r.pivots;
    j["solutions"] = r.status == LemkeStatus::Solved ? Json::array({{{"z", r.z}, {"w", r.w}}}) : Json::array();
    text = std::string("lemke (float): ") + to_string(r.status) + " after " + std::to_string(r.pivots) + " pivots\n";
    if (r.status == LemkeStatus::Solved) text += "z = " + to_string(r.z) + "\nw = " + to_string(r.w) + "\n";
  }
  emit(rc, j, text, timer);
  return 0;
}

int cmd_lcp_w_unique(const RunConfig& rc, const std::string& path, const std::string& qs) {
  Timer timer;
  auto inst = load_lcp(path, qs);
  auto rep = w_unique(inst, rc.lcp_cap);
  Json j{{"unique", rep.unique}, {"vacuous", rep.vacuous}, {"w_values", to_json(rep.w_values)}};
  j["witness"] = rep.witness_pair ? Json::array({to_json(rep.witness_pair->first), to_json(rep.witness_pair->second)})
                                  : Json(nullptr);
  std::string text = std::string("w-unique: ") + (rep.unique ? "yes" : "no") + (rep.vacuous ? " (no solutions)" : "") + "\n";
  for (const auto& w : rep.w_values) text += "w = " + to_string(w) + "\n";
  if (rep.witness_pair)
    text += "witness z = " + to_string(rep.witness_pair->first) + " and z = " + to_string(rep.witness_pair->second) + "\n";
  emit(rc, j, text, timer);
  return rep.unique ? 0 : 1;
}

int cmd_lcp_adequate(const RunConfig& rc, const std::string& path) {
  Timer timer;
  QMatrix M = parse_matrix(read_text_file(path));
  auto v = matrix_column_adequate(M, rc.adequacy_cap, rc.check_config().search);
  emit(rc, to_json(v), format_verdict(v), timer);
  return exit_code(v.status);
}

int cmd_tcp_solve(const RunConfig& rc, const std::string& path, const std::string& qs, const std::string& method) {
  Timer timer;
  auto t = load_tensor(path);
  TcpInstance inst(t, require_length(parse_vector(qs), t.dim(), "--q"));
  const auto cfg = rc.tcp_config();
  std::string use = method;
  if (use == "auto") {
    AuxiliarySystem aux(t, cfg.dense_cap);
    use = reduction_applies(inst, aux) ? "reduced" : "enumerate";
  }
  Json j{{"method", use}};
  std::string text = "method: " + use + "\n";
  std::vector<TcpSolution> sols;
  if (use == "reduced") {
    auto red = solve_exact_reduced(inst, cfg);
    j["pieces"] = to_json(red.pieces);
    text += "solution pieces in y = x^[m-1]:\n";
    for (const auto& p : red.pieces) text += "  " + format_piece(p) + "\n";
    sols = std::move(red.vertices);
  } else if (use == "enumerate") {
    sols = solve_enumerate(inst, cfg);
  } else {
    throw Error("unknown TCP method '" + method + "'");
  }
  if (rc.mode == ArithmeticMode::Float)
    for (auto& s : sols) s.exact_x.reset(), s.root_point.reset(), s.exact_omega.reset();
  j["solutions"] = to_json(sols);
  text += sols.empty() ? "no solution found\n" : "solutions:\n";
  for (const auto& s : sols) text += "  " + format_solution(s) + "\n";
  emit(rc, j, text, timer);
  return 0;
}

int cmd_tcp_omega(const RunConfig& rc, const std::string& path, const std::string& qs) {
  Timer timer;
  auto t = load_tensor(path);
  TcpInstance inst(t, require_length(parse_vector(qs), t.dim(), "--q"));
  auto rep = omega_unique(inst, rc.tcp_config());
  emit(rc, to_json(rep), format_omega(rep), timer);
  switch (rep.unique) {
    case Uniqueness::Unique: return 0;
    case Uniqueness::NotUnique: return 1;
    case Uniqueness::Unknown: return 2;
  }
  return 2;
}

int cmd_check(const RunConfig& rc, const std::string& cls, const std::string& path) {
  Timer timer;
  const TensorClass c = parse_tensor_class(cls);
  auto t = load_tensor(path);
  auto v = check(c, t, rc.check_config());
  Json j{{"class", cls}};
  j.update(to_json(v));
  emit(rc, j, "class: " + cls + "\n" + format_verdict(v), timer);
  return exit_code(v.status);
}

int cmd_reproduce(const RunConfig& rc) {
  Timer timer;
  auto results = run_paper_suite(rc.check_config(), rc.tcp_config());
  Json cases = Json::array();
  std::string text;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed();
    cases.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"mismatches", r.mismatches},
                     {"millis", r.millis}});
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-26s %8.1f ms  %s\n", r.passed() ? "ok" : "FAIL", r.id.c_str(), r.millis,
                  r.title.c_str());
    text += buf;
    for (const auto& m : r.mismatches) text += "       " + m + "\n";
  }
  text += std::to_string(passed) + "/" + std::to_string(results.size()) + " cases passed\n";
  emit(rc, Json{{"cases", cases}, {"passed", passed}, {"total", results.size()}}, text, timer);
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor and linear complementarity toolkit: auxiliary LCPs, solution sets, omega-uniqueness and class checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("TCPKIT_SEED")) {
    try {
      g.run.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: TCPKIT_SEED must be a nonnegative integer\n";
      return kInputError;
    }
  }
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seeds", g.run.seeds, "Number of falsifier seeds");
  app.add_option("--seed", g.seed, "Base seed (overrides TCPKIT_SEED)");
  auto* exact = app.add_flag("--exact", g.exact, "Rational arithmetic (default)");
  app.add_flag("--float", g.floating, "Double-precision arithmetic")->excludes(exact);
  app.add_option("--cap-lcp", g.run.lcp_cap, "Largest LCP size for support enumeration");
  app.add_option("--cap-adequacy", g.run.adequacy_cap, "Largest matrix size for exact adequacy cones");
  app.add_option("--cap-tcp", g.run.tcp_cap, "Largest n for direct TCP support enumeration");
  app.add_option("--cap-dense", g.run.dense_cap, "Largest N for which the dense auxiliary matrix is formed");

  int rc = 0;
  std::string path, xs, qs, idx, p, q, perm, method, cls;
  bool delimited = false;

  auto* tensor = app.add_subcommand("tensor", "Inspect and transform tensors");
  tensor->require_subcommand(1);
  auto* t_info = tensor->add_subcommand("info", "Order, dimension, majorization matrix and structure");
  t_info->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  auto* t_apply = tensor->add_subcommand("apply", "Evaluate A x^(m-1) and A x^m");
  t_apply->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  t_apply->add_option("--x", xs, "Point, e.g. 1,-1/2")->required();
  auto* t_sub = tensor->add_subcommand("subtensor", "Principal sub-tensor on 1-based indices");
  t_sub->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  t_sub->add_option("--indices", idx, "Index set, e.g. 1,3")->required();
  auto* t_tr = tensor->add_subcommand("transform", "Diagonal scaling P A Q and/or permutation P^T A P");
  t_tr->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  t_tr->add_option("--diag-p", p, "Diagonal of P");
  t_tr->add_option("--diag-q", q, "Diagonal of Q");
  t_tr->add_option("--perm", perm, "Permutation sigma as 1-based images, e.g. 2,3,1");

  auto* aux = app.add_subcommand("aux", "Auxiliary matrix construction");
  aux->require_subcommand(1);
  auto* a_build = aux->add_subcommand("build", "Coefficient matrix, Abar and qbar with monomial headers");
  a_build->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  a_build->add_option("--q", qs, "Right-hand side q");
  a_build->add_flag("--delimited", delimited, "Comma-separated output");

  auto* lcp = app.add_subcommand("lcp", "Linear complementarity problems");
  lcp->require_subcommand(1);
  auto* l_solve = lcp->add_subcommand("solve", "Solve LCP(q, M)");
  l_solve->add_option("file", path, "Matrix file")->required()->check(CLI::ExistingFile);
  l_solve->add_option("--q", qs, "Right-hand side q")->required();
  method = "lemke";
  l_solve->add_option("--method", method, "lemke or enumerate")->check(CLI::IsMember({"lemke", "enumerate"}));
  auto* l_wu = lcp->add_subcommand("w-unique", "Decide whether all solutions share w (exit 0 yes, 1 no)");
  l_wu->add_option("file", path, "Matrix file")->required()->check(CLI::ExistingFile);
  l_wu->add_option("--q", qs, "Right-hand side q")->required();
  auto* l_ad = lcp->add_subcommand("adequate", "Exact column adequacy of a matrix (exit 0/1/2)");
  l_ad->add_option("file", path, "Matrix file")->required()->check(CLI::ExistingFile);

  auto* tcp = app.add_subcommand("tcp", "Tensor complementarity problems");
  tcp->require_subcommand(1);
  auto* c_solve = tcp->add_subcommand("solve", "Solve TCP(q, A)");
  c_solve->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  c_solve->add_option("--q", qs, "Right-hand side q")->required();
  std::string tcp_method = "auto";
  c_solve->add_option("--method", tcp_method, "auto, reduced or enumerate")
      ->check(CLI::IsMember({"auto", "reduced", "enumerate"}));
  c_solve->add_option("--starts", g.run.starts, "Newton starts per support");
  auto* c_omega = tcp->add_subcommand("omega-unique", "Omega-uniqueness (exit 0 unique, 1 not unique, 2 unknown)");
  c_omega->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  c_omega->add_option("--q", qs, "Right-hand side q")->required();
  c_omega->add_option("--starts", g.run.starts, "Newton starts per support");

  std::vector<std::string> class_names;
  for (const auto& [k, name] : tensor_class_names()) class_names.emplace_back(name);
  auto* chk = app.add_subcommand("check", "Class membership verdict (exit 0 holds, 1 fails, 2 unknown)");
  chk->add_option("class", cls, "Tensor class")->required()->check(CLI::IsMember(class_names));
  chk->add_option("file", path, "Tensor file")->required()->check(CLI::ExistingFile);
  chk->add_option("--budget", g.run.samples, "Random samples per seed");

  auto* repro = app.add_subcommand("reproduce-paper", "Run the worked-example regression suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (g.seed) g.run.seed = *g.seed;
    g.run.format = parse_output_format(g.format);
    g.run.mode = g.floating ? ArithmeticMode::Float : ArithmeticMode::Exact;
    g.run.validate();
    const RunConfig& r = g.run;
    if (t_info->parsed()) rc = cmd_tensor_info(r, path);
    else if (t_apply->parsed()) rc = cmd_tensor_apply(r, path, xs);
    else if (t_sub->parsed()) rc = cmd_tensor_subtensor(r, path, idx);
    else if (t_tr->parsed()) rc = cmd_tensor_transform(r, path, p, q, perm);
    else if (a_build->parsed()) rc = cmd_aux_build(r, path, qs, delimited);
    else if (l_solve->parsed()) rc = cmd_lcp_solve(r, path, qs, method);
    else if (l_wu->parsed()) rc = cmd_lcp_w_unique(r, path, qs);
    else if (l_ad->parsed()) rc = cmd_lcp_adequate(r, path);
    else if (c_solve->parsed()) rc = cmd_tcp_solve(r, path, qs, tcp_method);
    else if (c_omega->parsed()) rc = cmd_tcp_omega(r, path, qs);
    else if (chk->parsed()) rc = cmd_check(r, cls, path);
    else if (repro->parsed()) rc = cmd_reproduce(r);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
