#pragma once

#include "tcpkit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tcpkit {

/// Default absolute tolerance for float-mode complementarity checks.
inline constexpr double kFloatTolerance = 1e-9;

/// z >= 0, w >= 0 and z_i w_i = 0 for all i, decided exactly.
inline bool is_complementary(const QVector& z, const QVector& w) {
  if (z.size() != w.size()) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || w[i] < 0) return false;
    if (z[i] != 0 && w[i] != 0) return false;
  }
  return true;
}

/// Largest violation of z >= 0, w >= 0, z_i w_i = 0; 0 for an exact solution.
inline double complementarity_residual(const std::vector<double>& z, const std::vector<double>& w) {
  double r = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    r = std::max({r, -z[i], -w[i], std::fabs(z[i] * w[i])});
  }
  return r;
}

inline bool is_complementary(const std::vector<double>& z, const std::vector<double>& w,
                             double tol = kFloatTolerance) {
  return z.size() == w.size() && complementarity_residual(z, w) <= tol;
}

}  // namespace tcpkit
