#include "statevol/volumes.hpp"

#include <cmath>
#include <stdexcept>

#include "statevol/special.hpp"

namespace statevol {

namespace {

ExactVolume volume_real(int n) {
  int k = n / 2;
  if (n % 2 == 0) {
    // pi^(k^2) / 2^(k^2+k) * (2k)! / (k! (2k^2+k-1)!) * prod_{i<k} (2i)!
    Rational coeff(factorial(2 * k), BigInt(1) << (k * k + k));
    coeff /= Rational(factorial(k) * factorial(2 * k * k + k - 1));
    for (int i = 1; i <= k - 1; ++i) coeff *= Rational(factorial(2 * i));
    return ExactVolume{coeff, k * k};
  }
  // (pi/2)^(k^2+k) * (2k)! / ((k-1)! (2k^2+3k)!) * prod_{i<k} (2i)!
  Rational coeff(factorial(2 * k), BigInt(1) << (k * k + k));
  coeff /= Rational(factorial(k - 1) * factorial(2 * k * k + 3 * k));
  for (int i = 1; i <= k - 1; ++i) coeff *= Rational(factorial(2 * i));
  return ExactVolume{coeff, k * k + k};
}

ExactVolume volume_complex(int n) {
  Rational coeff(1, factorial(n * n - 1));
  for (int i = 1; i <= n - 1; ++i) coeff *= Rational(factorial(i));
  return ExactVolume{coeff, n * (n - 1) / 2};
}

ExactVolume volume_quaternion(int n) {
  Rational coeff(factorial(2 * n - 2), factorial(2 * n * n - n - 1));
  for (int i = 1; i <= n - 2; ++i) coeff *= Rational(factorial(2 * i));
  return ExactVolume{coeff, n * n - n};
}

// Gamma-ratio product of the det^alpha moment theorem, evaluated in
// log space. `half` arguments are in units of 1/2 to keep them exact.
double det_moment_real(int n, double alpha) {
  double lg = log_gamma(0.5 * n * (n + 1)) - log_gamma(0.5 * (n + 1)) +
              log_gamma(0.5 * (n + 1) + alpha) - log_gamma(0.5 * n * (n + 1) + n * alpha);
  for (int i = 1; i <= n - 1; ++i)
    lg += log_gamma(0.5 * (i + 1) + alpha) - log_gamma(0.5 * (i + 1));
  return std::exp(lg);
}

double det_moment_complex(int n, double alpha) {
  double lg = log_gamma(static_cast<double>(n * n)) - log_gamma(static_cast<double>(n)) +
              log_gamma(n + alpha) - log_gamma(n * n + n * alpha);
  for (int i = 1; i <= n - 1; ++i) lg += log_gamma(i + alpha) - log_gamma(static_cast<double>(i));
  return std::exp(lg);
}

double det_moment_quaternion(int n, double alpha) {
  double lg = log_gamma(static_cast<double>(2 * n * n - n)) - log_gamma(static_cast<double>(2 * n - 1)) +
              log_gamma(2 * n - 1 + alpha) - log_gamma(2 * n * n - n + n * alpha);
  for (int i = 1; i <= n - 1; ++i) lg += log_gamma(2 * i - 1 + alpha) - log_gamma(static_cast<double>(2 * i - 1));
  return std::exp(lg);
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

ExactVolume volume_lebesgue(Field field, int n) {
  if (n < 1) throw std::domain_error("volume_lebesgue requires n >= 1");
  if (n == 1) return ExactVolume{Rational(1), 0};
  switch (field) {
    case Field::real: return volume_real(n);
    case Field::complex: return volume_complex(n);
    case Field::quaternion: return volume_quaternion(n);
  }
  throw std::logic_error("unreachable");
}

std::optional<ExactValue> expected_det_alpha_exact(Field field, int n, double alpha) {
  if (n < 2 || alpha < 0.0) return std::nullopt;
  if (n > 20) return std::nullopt;  // factorials get unwieldy; log-gamma path instead
  if (field == Field::real) {
    if (!is_integer(2.0 * alpha)) return std::nullopt;
    int two_alpha = static_cast<int>(2.0 * alpha);
    ExactValue v = gamma_exact(n * (n + 1)) / gamma_exact(n + 1) *
                   gamma_exact(n + 1 + two_alpha) / gamma_exact(n * (n + 1) + n * two_alpha);
    for (int i = 1; i <= n - 1; ++i) v = v * gamma_exact(i + 1 + two_alpha) / gamma_exact(i + 1);
    return v;
  }
  if (!is_integer(alpha)) return std::nullopt;
  int a = static_cast<int>(alpha);
  if (field == Field::complex) {
    ExactValue v = gamma_exact(2 * n * n) / gamma_exact(2 * n) * gamma_exact(2 * (n + a)) /
                   gamma_exact(2 * (n * n + n * a));
    for (int i = 1; i <= n - 1; ++i) v = v * gamma_exact(2 * (i + a)) / gamma_exact(2 * i);
    return v;
  }
  ExactValue v = gamma_exact(2 * (2 * n * n - n)) / gamma_exact(2 * (2 * n - 1)) *
                 gamma_exact(2 * (2 * n - 1 + a)) / gamma_exact(2 * (2 * n * n - n + n * a));
  for (int i = 1; i <= n - 1; ++i) v = v * gamma_exact(2 * (2 * i - 1 + a)) / gamma_exact(2 * (2 * i - 1));
  return v;
}

double expected_det_alpha(Field field, int n, double alpha) {
  if (n < 2) throw std::domain_error("expected_det_alpha requires n >= 2");
  if (alpha < 0.0) throw std::domain_error("expected_det_alpha requires alpha >= 0");
  if (auto exact = expected_det_alpha_exact(field, n, alpha)) return exact->to_double();
  switch (field) {
    case Field::real: return det_moment_real(n, alpha);
    case Field::complex: return det_moment_complex(n, alpha);
    case Field::quaternion: return det_moment_quaternion(n, alpha);
  }
  throw std::logic_error("unreachable");
}

double det_alpha_integral_lebesgue(Field field, int n, double alpha) {
  if (n < 2) throw std::domain_error("det_alpha_integral_lebesgue requires n >= 2");
  const int d = field_dim(field);
  double prod = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    int m = d * (n - i);  // real dimension of the column being integrated out
    prod *= sphere_surface(m) * radial_moment(m - 1, 0.5 * d * (i - 1) + alpha);
  }
  return prod * simplex_moment(n, 0.5 * d * (n - 1) + alpha);
}

}  // namespace statevol
