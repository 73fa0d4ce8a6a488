#pragma once

#include "tcpkit/linalg.hpp"
#include "tcpkit/rational.hpp"
#include "tcpkit/tensor.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace tcpkit {

namespace detail {

/// Non-empty lines with comments stripped, paired with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenized_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (!tok.empty()) out.emplace_back(no, std::move(tok));
  }
  return out;
}

inline int parse_int_token(const std::string& s, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("line " + std::to_string(line) + ": expected integer " + what + ", got '" + s + "'");
  }
}

inline Rational parse_value_token(const std::string& s, std::size_t line) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw Error("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace detail

/// Text format: a header "m n", then one "i1 ... im value" line per entry with 1-based
/// indices; '#' starts a comment. Duplicate index tuples are summed.
inline SparseTensor parse_tensor(std::string_view text) {
  auto lines = detail::tokenized_lines(text);
  if (lines.empty()) throw Error("tensor text is empty: expected header 'm n'");
  const auto& [hline, header] = lines.front();
  if (header.size() != 2) throw Error("line " + std::to_string(hline) + ": header must be 'm n'");
  const int m = detail::parse_int_token(header[0], hline, "order m");
  const int n = detail::parse_int_token(header[1], hline, "dimension n");
  if (m < 2 || n < 1) throw Error("line " + std::to_string(hline) + ": need m >= 2 and n >= 1");
  SparseTensor t(m, n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& [no, tok] = lines[l];
    if (tok.size() != static_cast<std::size_t>(m) + 1)
      throw Error("line " + std::to_string(no) + ": expected " + std::to_string(m) + " indices and a value, got " +
                  std::to_string(tok.size()) + " fields");
    TensorIndex idx(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
      int i = detail::parse_int_token(tok[static_cast<std::size_t>(p)], no, "index");
      if (i < 1 || i > n)
        throw Error("line " + std::to_string(no) + ": index " + std::to_string(i) + " outside [1, " +
                    std::to_string(n) + "]");
      idx[static_cast<std::size_t>(p)] = i - 1;
    }
    t.add(idx, detail::parse_value_token(tok.back(), no));
  }
  return t;
}

inline std::string format_tensor(const SparseTensor& t) {
  std::string out = std::to_string(t.order()) + " " + std::to_string(t.dim()) + "\n";
  for (const auto& [idx, coef] : t.entries()) {
    for (int i : idx) out += std::to_string(i + 1) + " ";
    out += to_string(coef) + "\n";
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SparseTensor load_tensor(const std::string& path) {
  try {
    return parse_tensor(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

/// Entries separated by whitespace, commas or semicolons; optional surrounding brackets.
inline QVector parse_vector(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',' || c == ';' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::istringstream in(s);
  QVector out;
  for (std::string w; in >> w;) out.push_back(parse_rational(w));
  if (out.empty()) throw Error("empty vector");
  return out;
}

/// Text format: "k" then k rows of k entries.
inline QMatrix parse_matrix(std::string_view text) {
  auto lines = detail::tokenized_lines(text);
  if (lines.empty()) throw Error("matrix text is empty: expected size line 'k'");
  const auto& [hline, header] = lines.front();
  if (header.size() != 1) throw Error("line " + std::to_string(hline) + ": first line must be the size k");
  const int k = detail::parse_int_token(header[0], hline, "size k");
  if (k < 1) throw Error("line " + std::to_string(hline) + ": size must be positive");
  if (lines.size() != static_cast<std::size_t>(k) + 1)
    throw Error("expected " + std::to_string(k) + " matrix rows, found " + std::to_string(lines.size() - 1));
  const auto kk = static_cast<std::size_t>(k);
  QMatrix out(kk, kk);
  for (std::size_t r = 0; r < kk; ++r) {
    const auto& [no, tok] = lines[r + 1];
    if (tok.size() != kk)
      throw Error("line " + std::to_string(no) + ": expected " + std::to_string(k) + " entries, got " +
                  std::to_string(tok.size()));
    for (std::size_t c = 0; c < kk; ++c) out(r, c) = detail::parse_value_token(tok[c], no);
  }
  return out;
}

inline std::string format_matrix(const QMatrix& m, const std::vector<std::string>& headers = {}) {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c < headers.size()) width[c] = headers[c].size();
    for (std::size_t r = 0; r < m.rows(); ++r) width[c] = std::max(width[c], to_string(m(r, c)).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::string out;
  if (!headers.empty()) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? "  " : "") + pad(c < headers.size() ? headers[c] : "", width[c]);
    out += "\n";
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? "  " : "") + pad(to_string(m(r, c)), width[c]);
    out += "\n";
  }
  return out;
}

inline std::string format_matrix_text(const QMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_string(m(r, c));
    out += "\n";
  }
  return out;
}

}  // namespace tcpkit
