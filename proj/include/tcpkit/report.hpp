#pragma once

#include "tcpkit/auxiliary.hpp"
#include "tcpkit/class_check.hpp"
#include "tcpkit/lcp.hpp"
#include "tcpkit/tcp.hpp"
#include "tcpkit/verdict.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace tcpkit {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  throw Error("unknown output format '" + s + "' (expected text or json)");
}

enum class ArithmeticMode { Exact, Float };

/// Options shared by one CLI invocation.
struct RunConfig {
  ArithmeticMode mode = ArithmeticMode::Exact;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 20240611;
  int seeds = 4;
  int samples = 10000;     // falsifier samples per seed
  std::size_t starts = 32;  // Newton starts per support
  std::size_t lcp_cap = kDefaultLcpEnumerationCap;
  std::size_t adequacy_cap = kDefaultAdequacyCap;
  std::size_t tcp_cap = kDefaultTcpEnumerationCap;
  std::size_t dense_cap = kDefaultDenseCap;

  void validate() const {
    if (seeds < 1 || samples < 1 || starts < 1 || lcp_cap < 1 || adequacy_cap < 1 || tcp_cap < 1 || dense_cap < 1)
      throw Error("seeds, samples, starts and caps must be positive");
  }

  CheckConfig check_config() const {
    CheckConfig c;
    c.search.base_seed = seed;
    c.search.seeds = seeds;
    c.search.samples_per_seed = samples;
    c.adequacy_cap = adequacy_cap;
    c.dense_cap = dense_cap;
    return c;
  }

  TcpConfig tcp_config() const {
    TcpConfig c;
    c.budget = starts;
    c.seed = seed;
    c.tcp_cap = tcp_cap;
    c.lcp_cap = lcp_cap;
    c.dense_cap = dense_cap;
    return c;
  }
};

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_string(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const std::vector<QVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(QVector(m.row(r).begin(), m.row(r).end())));
  return a;
}

inline Json to_json(const Counterexample& ce) {
  Json j;
  j["condition"] = ce.condition;
  j["point"] = to_json(ce.point);
  if (ce.root_exponent) j["root_exponent"] = *ce.root_exponent;
  j["image"] = to_json(ce.image);
  j["condition_values"] = to_json(ce.condition_values);
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.status);
  if (v.certificate) {
    Json c;
    c["chain"] = v.certificate->chain;
    if (v.certificate->cones) {
      Json cones = Json::array();
      for (std::size_t k = 0; k < v.certificate->cones->signs.size(); ++k)
        cones.push_back({{"signs", v.certificate->cones->signs[k]}, {"rays", to_json(v.certificate->cones->rays[k])}});
      c["cones"] = cones;
    }
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  j["counterexample"] = v.counterexample ? to_json(*v.counterexample) : Json(nullptr);
  j["search"] = {{"seeds", v.search.seeds},
                 {"samples", v.search.samples},
                 {"exact_checks", v.search.exact_checks},
                 {"numerical_only", v.search.numerical_only},
                 {"best_margin", std::isfinite(v.search.best_margin) ? Json(v.search.best_margin) : Json(nullptr)}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json to_json(const SolutionPiece& p) {
  Json j;
  std::vector<std::size_t> one_based;
  for (auto i : p.support) one_based.push_back(i + 1);
  j["support"] = one_based;
  j["base"] = to_json(p.base);
  j["directions"] = to_json(p.directions);
  j["vertices"] = to_json(p.vertices);
  j["rays"] = to_json(p.rays);
  j["w_constant"] = p.w_constant;
  return j;
}

inline Json to_json(const std::vector<SolutionPiece>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

inline Json to_json(const TcpSolution& s) {
  Json j;
  j["x"] = s.x;
  j["omega"] = s.omega;
  j["residual"] = s.residual;
  j["exact_x"] = s.exact_x ? to_json(*s.exact_x) : Json(nullptr);
  j["root_point"] = s.root_point ? to_json(*s.root_point) : Json(nullptr);
  j["exact_omega"] = s.exact_omega ? to_json(*s.exact_omega) : Json(nullptr);
  return j;
}

inline Json to_json(const std::vector<TcpSolution>& ss) {
  Json a = Json::array();
  for (const auto& s : ss) a.push_back(to_json(s));
  return a;
}

inline Json to_json(const OmegaReport& r) {
  Json j;
  j["unique"] = to_string(r.unique);
  j["method"] = to_string(r.method);
  j["vacuous"] = r.vacuous;
  j["omega_values"] = to_json(r.omega_values);
  j["omega_float"] = r.omega_float;
  if (r.witness)
    j["witness"] = Json::array({to_json(r.witness->first), to_json(r.witness->second)});
  else
    j["witness"] = nullptr;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const AuxiliarySystem& aux, const std::optional<QVector>& q = std::nullopt) {
  Json j;
  Json labels = Json::array();
  for (const auto& a : aux.basis().labels()) labels.push_back(monomial_label(a));
  j["m"] = aux.source().order();
  j["n"] = aux.n();
  j["N"] = aux.N();
  j["monomials"] = labels;
  j["coef"] = to_json(aux.coef());
  if (aux.dense_available()) j["abar"] = to_json(aux.abar());
  j["mixed_block_zero"] = aux.mixed_block_zero();
  if (q) j["qbar"] = to_json(pad_rhs(*q, aux.N()));
  return j;
}

// ---------------------------------------------------------------------------
// Text

inline std::string monomial_headers_line(const AuxiliarySystem& aux) {
  std::string s;
  for (std::size_t j = 0; j < aux.N(); ++j) s += (j ? "  " : "") + monomial_label(aux.basis()[j]);
  return s;
}

inline std::vector<std::string> monomial_headers(const AuxiliarySystem& aux) {
  std::vector<std::string> h;
  for (const auto& a : aux.basis().labels()) h.push_back(monomial_label(a));
  return h;
}

inline std::string format_counterexample(const Counterexample& ce) {
  std::string s;
  if (ce.root_exponent)
    s += "x = y^[1/" + std::to_string(*ce.root_exponent) + "] with y = " + to_string(ce.point) + "\n";
  else
    s += "x = " + to_string(ce.point) + "\n";
  s += "A x^(m-1) = " + to_string(ce.image) + "\n";
  s += "condition values = " + to_string(ce.condition_values) + "\n";
  return s;
}

inline std::string format_verdict(const Verdict& v) {
  std::string s = "verdict: " + std::string(to_string(v.status)) + "\n";
  if (v.certificate) {
    s += "certificate: " + v.certificate->chain + "\n";
    if (v.certificate->cones)
      s += "  cones checked: " + std::to_string(v.certificate->cones->signs.size()) +
           ", extreme rays: " + std::to_string(v.certificate->cones->ray_count()) + "\n";
  }
  if (v.counterexample) {
    s += "counterexample (" + v.counterexample->condition + "):\n";
    std::string body = format_counterexample(*v.counterexample);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto nl = body.find('\n', pos);
      s += "  " + body.substr(pos, nl - pos + 1);
      pos = nl + 1;
    }
  }
  if (v.search.samples > 0) {
    s += "search: " + std::to_string(v.search.samples) + " samples, " + std::to_string(v.search.exact_checks) +
         " exact checks, " + std::to_string(v.search.numerical_only) + " numerical-only hits";
    if (std::isfinite(v.search.best_margin)) s += ", best margin " + format_double(v.search.best_margin);
    s += "\n";
  }
  if (!v.note.empty()) s += "note: " + v.note + "\n";
  return s;
}

/// "base + t1*r1 + ..., t >= 0" for a single vertex, hull + cone otherwise.
inline std::string format_piece(const SolutionPiece& p) {
  std::string s = "support {";
  for (std::size_t i = 0; i < p.support.size(); ++i) s += (i ? "," : "") + std::to_string(p.support[i] + 1);
  s += "}: ";
  if (p.vertices.size() == 1) {
    s += to_string(p.vertices.front());
  } else {
    s += "conv{";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? ", " : "") + to_string(p.vertices[i]);
    s += "}";
  }
  for (std::size_t r = 0; r < p.rays.size(); ++r) s += " + t" + std::to_string(r + 1) + "*" + to_string(p.rays[r]);
  if (!p.rays.empty()) s += ", t >= 0";
  s += p.w_constant ? "  [w constant]" : "  [w varies]";
  return s;
}

inline std::string format_solution(const TcpSolution& s) {
  std::string out = "x = ";
  if (s.exact_x)
    out += to_string(*s.exact_x);
  else if (s.root_point)
    out += to_string(s.x) + " = y^[1/(m-1)], y = " + to_string(*s.root_point);
  else
    out += to_string(s.x);
  out += "  omega = " + (s.exact_omega ? to_string(*s.exact_omega) : to_string(s.omega));
  if (!s.exact()) out += "  (float, residual " + format_double(s.residual) + ")";
  return out;
}

inline std::string format_omega(const OmegaReport& r) {
  std::string s = "omega-unique: " + std::string(to_string(r.unique)) + " (" + to_string(r.method) + ")\n";
  if (r.vacuous) s += "solution set is empty; uniqueness holds vacuously\n";
  for (const auto& w : r.omega_values) s += "omega = " + to_string(w) + "\n";
  if (r.omega_values.empty())
    for (const auto& w : r.omega_float) s += "omega ~ " + to_string(w) + "\n";
  if (r.witness) {
    s += "witness 1: " + format_solution(r.witness->first) + "\n";
    s += "witness 2: " + format_solution(r.witness->second) + "\n";
  }
  if (!r.note.empty()) s += "note: " + r.note + "\n";
  return s;
}

}  // namespace tcpkit
