#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcpkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

/// Thrown for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Rational& x) { return x.sign(); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::vector<double> to_double(const QVector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Rational& x) {
  const Integer& num = boost::multiprecision::numerator(x);
  const Integer& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// cpp_int reads a leading 0 as octal, so digits are converted with the zeros stripped.
inline Integer from_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Integer{std::string(s.empty() ? "0" : s)};
}

inline Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error("not an integer: '" + std::string(s) + "'");
  Integer v = from_digits(s);
  return neg ? Integer(-v) : v;
}

inline Integer pow10(unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal with optional exponent ("1.5", "-2e-3").
/// Decimal input is converted exactly, so "0.1" becomes 1/10.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(text.substr(0, slash));
    Integer den = detail::parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  std::string_view s = text;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    Integer ev = detail::parse_integer(exp_part);
    if (ev > 4000 || ev < -4000) throw Error("exponent out of range in '" + std::string(text) + "'");
    exponent = ev.convert_to<long long>();
    s = s.substr(0, e);
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw Error("not a number: '" + std::string(text) + "'");
  if ((!int_part.empty() && !detail::all_digits(int_part)) ||
      (!frac_part.empty() && !detail::all_digits(frac_part)))
    throw Error("not a number: '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa = detail::from_digits(digits);
  exponent -= static_cast<long long>(frac_part.size());
  Rational value = exponent >= 0 ? Rational(mantissa * detail::pow10(static_cast<unsigned>(exponent)))
                                 : Rational(mantissa, detail::pow10(static_cast<unsigned>(-exponent)));
  return neg ? Rational(-value) : value;
}

/// Best rational approximation p/q of `x` with q <= max_den (continued fractions).
inline Rational snap_rational(double x, std::int64_t max_den = 1000000) {
  if (!std::isfinite(x)) throw Error("cannot snap a non-finite value");
  const bool neg = x < 0;
  double v = std::fabs(x);
  if (v > 1e15) return Rational(static_cast<long long>(neg ? -v : v));
  // Convergents h/k.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = v;
  for (int iter = 0; iter < 64; ++iter) {
    double a_f = std::floor(r);
    if (a_f > 1e15) break;
    auto a = static_cast<std::int64_t>(a_f);
    std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) {
      // Semiconvergent check: largest t with t*k1 + k0 <= max_den.
      std::int64_t t = k1 == 0 ? 0 : (max_den - k0) / k1;
      if (t > 0) {
        std::int64_t hs = t * h1 + h0, ks = t * k1 + k0;
        double err_semi = std::fabs(v - static_cast<double>(hs) / static_cast<double>(ks));
        double err_conv = std::fabs(v - static_cast<double>(h1) / static_cast<double>(k1));
        if (err_semi < err_conv) {
          h1 = hs;
          k1 = ks;
        }
      }
      break;
    }
    std::int64_t h2 = a * h1 + h0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = r - a_f;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return Rational(0);
  Rational out{Integer(h1), Integer(k1)};
  return neg ? Rational(-out) : out;
}

inline QVector snap_rational(const std::vector<double>& x, std::int64_t max_den = 1000000) {
  QVector out;
  out.reserve(x.size());
  for (double v : x) out.push_back(snap_rational(v, max_den));
  return out;
}

inline std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tcpkit
