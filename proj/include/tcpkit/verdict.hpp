#pragma once

#include "tcpkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcpkit {

enum class Status { Holds, Fails, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

/// CLI exit code convention: 0 holds, 1 fails, 2 unknown.
inline int exit_code(Status s) {
  switch (s) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

/// Extreme rays of every sign-orthant cone that were checked against M r = 0.
struct ConeCertificate {
  std::vector<std::vector<int>> signs;
  std::vector<std::vector<QVector>> rays;
  std::size_t ray_count() const {
    std::size_t c = 0;
    for (const auto& r : rays) c += r.size();
    return c;
  }
};

struct Certificate {
  std::string chain;  // the implications that produce the verdict, in order
  std::optional<ConeCertificate> cones;
};

/// A point violating a class definition, with the exact values that show it.
///
/// When `root_exponent` is set the witness is the signed real root x = point^{[1/root_exponent]},
/// which is usually irrational; `image` and `condition_values` are then the exact values of
/// A x^{m-1} and of the condition in terms of `point`.
struct Counterexample {
  QVector point;
  std::optional<int> root_exponent;
  QVector image;             // A x^{m-1} (or M z for matrices)
  QVector condition_values;  // per-coordinate values of the violated condition
  std::string condition;
};

struct SearchReport {
  std::vector<std::uint64_t> seeds;
  std::size_t samples = 0;
  std::size_t exact_checks = 0;
  std::size_t numerical_only = 0;  // float hits that did not survive rational snapping
  double best_margin = 0;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Certificate> certificate;
  std::optional<Counterexample> counterexample;
  SearchReport search;
  std::string note;
};

}  // namespace tcpkit
