#pragma once

#include "tcpkit/linalg.hpp"
#include "tcpkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace tcpkit {

/// Incremental double description of the cone {x : a.x >= 0 for every added row a},
/// kept as lineality basis + extreme rays, in exact arithmetic. Starts from all of R^d
/// (or from a seeded orthant) and intersects one half-space at a time.
class DoubleDescription {
 public:
  explicit DoubleDescription(std::size_t dim) : dim_(dim) {
    for (std::size_t i = 0; i < dim; ++i) {
      QVector e(dim, Rational(0));
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  /// The closed orthant {sign_i x_i >= 0}, generated by the rays sign_i e_i.
  static DoubleDescription orthant(const std::vector<int>& signs) {
    DoubleDescription dd(signs.size());
    dd.lineality_.clear();
    for (std::size_t i = 0; i < signs.size(); ++i) {
      QVector row(signs.size(), Rational(0));
      row[i] = signs[i] >= 0 ? 1 : -1;
      dd.constraints_.push_back(row);
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
      Ray r{dd.constraints_[i], std::vector<bool>(signs.size(), true)};
      r.zero[i] = false;
      dd.rays_.push_back(std::move(r));
    }
    return dd;
  }

  std::size_t dim() const { return dim_; }

  void add_inequality(const QVector& a) {
    if (a.size() != dim_) throw Error("double description: constraint length mismatch");
    if (!lineality_.empty() && absorb_lineality(a)) return;
    const std::size_t old_count = constraints_.size();
    constraints_.push_back(a);

    std::vector<Rational> value(rays_.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      value[r] = dot(a, rays_[r].v);
      if (value[r] > 0)
        pos.push_back(r);
      else if (value[r] < 0)
        neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays_.size(); ++r) rays_[r].zero.push_back(value[r] == 0);
      return;
    }

    const std::size_t eff_dim = dim_ - lineality_.size();
    const std::size_t need = eff_dim >= 2 ? eff_dim - 2 : 0;
    std::vector<Ray> next;
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        std::vector<bool> common(old_count);
        std::size_t count = 0;
        for (std::size_t c = 0; c < old_count; ++c) {
          common[c] = rays_[p].zero[c] && rays_[n].zero[c];
          count += common[c];
        }
        if (count < need || !adjacent(p, n, common)) continue;
        QVector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = value[p] * rays_[n].v[i] - value[n] * rays_[p].v[i];
        common.push_back(true);
        next.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (value[r] < 0) continue;
      Ray kept = std::move(rays_[r]);
      kept.zero.push_back(value[r] == 0);
      next.push_back(std::move(kept));
    }
    rays_ = std::move(next);
  }

  void add_equality(const QVector& a) {
    add_inequality(a);
    QVector neg(a);
    for (auto& x : neg) x = -x;
    add_inequality(neg);
  }

  std::vector<QVector> rays() const {
    std::vector<QVector> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_) out.push_back(r.v);
    return out;
  }
  const std::vector<QVector>& lineality() const { return lineality_; }

 private:
  struct Ray {
    QVector v;
    std::vector<bool> zero;  // a.v == 0 for each processed constraint
  };

  /// When some lineality direction is not orthogonal to `a`, it becomes a new ray and
  /// everything else is shifted onto the hyperplane a.x = 0.
  bool absorb_lineality(const QVector& a) {
    std::size_t pick = lineality_.size();
    Rational s;
    for (std::size_t l = 0; l < lineality_.size(); ++l) {
      s = dot(a, lineality_[l]);
      if (s != 0) {
        pick = l;
        break;
      }
    }
    if (pick == lineality_.size()) return false;
    QVector l0 = lineality_[pick];
    if (s < 0) {
      for (auto& x : l0) x = -x;
      s = -s;
    }
    lineality_.erase(lineality_.begin() + static_cast<std::ptrdiff_t>(pick));
    auto shift = [&](QVector& v) {
      Rational t = dot(a, v);
      if (t == 0) return;
      Rational f = t / s;
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= f * l0[i];
      v = primitive(std::move(v));
    };
    for (auto& l : lineality_) shift(l);
    for (auto& r : rays_) {
      shift(r.v);
      r.zero.push_back(true);
    }
    std::vector<bool> zero(constraints_.size(), true);
    zero.push_back(false);
    constraints_.push_back(a);
    rays_.push_back(Ray{primitive(std::move(l0)), std::move(zero)});
    return true;
  }

  bool adjacent(std::size_t p, std::size_t n, const std::vector<bool>& common) const {
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (r == p || r == n) continue;
      bool contains = true;
      for (std::size_t c = 0; c < common.size() && contains; ++c)
        if (common[c] && !rays_[r].zero[c]) contains = false;
      if (contains) return false;
    }
    return true;
  }

  std::size_t dim_;
  std::vector<QVector> constraints_;
  std::vector<Ray> rays_;
  std::vector<QVector> lineality_;
};

/// V-representation conv(vertices) + cone(rays) + span(lineality) of a polyhedron.
struct Polyhedron {
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
  bool empty() const { return vertices.empty(); }
};

/// Generators of {x : G x >= g, E x = e} via the homogenized cone in one more dimension.
inline Polyhedron polyhedron_generators(std::size_t dim, const std::vector<QVector>& ineq_rows,
                                        const QVector& ineq_rhs, const std::vector<QVector>& eq_rows,
                                        const QVector& eq_rhs) {
  DoubleDescription dd(dim + 1);
  QVector s_row(dim + 1, Rational(0));
  s_row[dim] = 1;
  dd.add_inequality(s_row);
  auto homogenize = [&](const QVector& row, const Rational& rhs) {
    QVector h(row);
    h.push_back(-rhs);
    return h;
  };
  for (std::size_t i = 0; i < eq_rows.size(); ++i) dd.add_equality(homogenize(eq_rows[i], eq_rhs[i]));
  for (std::size_t i = 0; i < ineq_rows.size(); ++i) dd.add_inequality(homogenize(ineq_rows[i], ineq_rhs[i]));

  Polyhedron out;
  for (auto& r : dd.rays()) {
    Rational s = r[dim];
    QVector v(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
    if (s > 0) {
      for (auto& x : v) x /= s;
      out.vertices.push_back(std::move(v));
    } else {
      out.rays.push_back(std::move(v));
    }
  }
  for (const auto& l : dd.lineality()) out.lineality.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(dim));
  return out;
}

}  // namespace tcpkit
