#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace statevol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accurate log2 of a positive big integer (top 53 bits plus the shift).
inline double log2_bigint(const BigInt& x) {
  long bits = static_cast<long>(boost::multiprecision::msb(x));
  long shift = bits - 52;
  BigInt top = shift > 0 ? BigInt(x >> shift) : x;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift > 0 ? shift : 0);
}

/// Converts an arbitrary-size rational to double without intermediate
/// overflow: the quotient is formed with ~62 significant bits and rescaled.
inline double rational_to_double(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  bool neg = num < 0;
  if (neg) num = -num;
  long shift = static_cast<long>(boost::multiprecision::msb(num)) -
               static_cast<long>(boost::multiprecision::msb(den));
  long a = 62 - shift;  // num*2^a / den lands near 2^62
  BigInt q = a >= 0 ? BigInt((num << a) / den) : BigInt(num / (den << -a));
  double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-a));
  return neg ? -d : d;
}

/// Exact quantity of the form coeff * pi^(sqrt_pi_pow / 2). Gamma values at
/// half-integers introduce single sqrt(pi) factors; they always pair up by
/// the time a volume is assembled.
struct ExactValue {
  Rational coeff{0};
  int sqrt_pi_pow = 0;

  ExactValue() = default;
  ExactValue(Rational c, int sp = 0) : coeff(std::move(c)), sqrt_pi_pow(sp) {}
  ExactValue(long c) : coeff(c) {}  // NOLINT: implicit by design

  ExactValue& operator*=(const ExactValue& o) {
    coeff *= o.coeff;
    sqrt_pi_pow += o.sqrt_pi_pow;
    return *this;
  }
  ExactValue& operator/=(const ExactValue& o) {
    if (o.coeff == 0) throw std::domain_error("ExactValue: division by zero");
    coeff /= o.coeff;
    sqrt_pi_pow -= o.sqrt_pi_pow;
    return *this;
  }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.sqrt_pi_pow == b.sqrt_pi_pow);
  }

  ExactValue pow(int e) const {
    ExactValue out{Rational(1), 0};
    ExactValue base = *this;
    if (e < 0) {
      base = ExactValue{Rational(1)} / base;
      e = -e;
    }
    for (; e > 0; --e) out *= base;
    return out;
  }

  double to_double() const {
    return rational_to_double(coeff) * std::pow(std::numbers::pi, 0.5 * sqrt_pi_pow);
  }
};

/// Exact volume coeff * pi^pi_pow with an integer power of pi.
struct ExactVolume {
  Rational coeff{0};
  int pi_pow = 0;

  friend bool operator==(const ExactVolume& a, const ExactVolume& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.pi_pow == b.pi_pow);
  }

  double value() const {
    double direct = rational_to_double(coeff) * std::pow(std::numbers::pi, pi_pow);
    if (std::isfinite(direct) && (direct != 0.0 || coeff == 0)) return direct;
    // log-space fallback for extreme magnitudes
    BigInt num = boost::multiprecision::numerator(coeff);
    BigInt den = boost::multiprecision::denominator(coeff);
    bool neg = num < 0;
    if (neg) num = -num;
    double lg = (log2_bigint(num) - log2_bigint(den)) * std::numbers::ln2 +
                pi_pow * std::log(std::numbers::pi);
    double v = std::exp(lg);
    return neg ? -v : v;
  }

  /// Renders e.g. "pi^2/240", "pi/4", "3*pi^4/2903040", "1".
  std::string to_string() const {
    BigInt num = boost::multiprecision::numerator(coeff);
    BigInt den = boost::multiprecision::denominator(coeff);
    if (num == 0) return "0";
    std::string s;
    bool neg = num < 0;
    if (neg) num = -num;
    std::string pi_part;
    if (pi_pow == 1)
      pi_part = "pi";
    else if (pi_pow != 0)
      pi_part = "pi^" + std::to_string(pi_pow);
    if (pi_part.empty())
      s = num.str();
    else if (num == 1)
      s = pi_part;
    else
      s = num.str() + "*" + pi_part;
    if (den != 1) s += "/" + den.str();
    return neg ? "-" + s : s;
  }
};

inline ExactVolume to_volume(const ExactValue& v) {
  if (v.coeff != 0 && v.sqrt_pi_pow % 2 != 0)
    throw std::domain_error("ExactValue carries an unpaired sqrt(pi) factor");
  return ExactVolume{v.coeff, v.sqrt_pi_pow / 2};
}

}  // namespace statevol
