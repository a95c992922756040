#include "statevol/special.hpp"

#include <cmath>
#include <stdexcept>

namespace statevol {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::domain_error("double factorial of integer below -1");
  BigInt r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

double gamma_fn(double z) {
  if (!(z > 0.0)) throw std::domain_error("gamma requires a positive argument");
  return std::tgamma(z);
}

double log_gamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("log_gamma requires a positive argument");
  return std::lgamma(z);
}

ExactValue gamma_exact(int two_z) {
  if (two_z <= 0) throw std::domain_error("gamma requires a positive argument");
  if (two_z % 2 == 0) return ExactValue{Rational(factorial(two_z / 2 - 1)), 0};
  // Gamma(n + 1/2) = (2n-1)!! / 2^n * sqrt(pi) with n = (two_z - 1) / 2
  int n = (two_z - 1) / 2;
  return ExactValue{Rational(double_factorial(2 * n - 1), BigInt(1) << n), 1};
}

ExactValue sphere_surface_exact(int n) {
  if (n < 1) throw std::domain_error("sphere surface needs dimension >= 1");
  return ExactValue{Rational(n), n} / gamma_exact(n + 2);
}

double sphere_surface(int n) { return sphere_surface_exact(n).to_double(); }

double radial_moment(double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::domain_error("radial_moment requires a, b >= 0");
  return 0.5 * std::exp(log_gamma(b + 1.0) + log_gamma(0.5 * (a + 1.0)) -
                        log_gamma(0.5 * a + b + 1.5));
}

ExactValue radial_moment_exact(int a, int two_b) {
  if (a < 0 || two_b < 0) throw std::domain_error("radial_moment requires a, b >= 0");
  return ExactValue{Rational(1, 2)} * gamma_exact(two_b + 2) * gamma_exact(a + 1) /
         gamma_exact(a + two_b + 3);
}

double simplex_moment(int n, double k) {
  if (n < 2) throw std::domain_error("simplex_moment requires n >= 2");
  if (k < 0.0) throw std::domain_error("simplex_moment requires k >= 0");
  return std::exp(n * log_gamma(k + 1.0) - log_gamma(n * (k + 1.0)));
}

ExactValue simplex_moment_exact(int n, int two_k) {
  if (n < 2) throw std::domain_error("simplex_moment requires n >= 2");
  if (two_k < 0) throw std::domain_error("simplex_moment requires k >= 0");
  return gamma_exact(two_k + 2).pow(n) / gamma_exact(n * (two_k + 2));
}

double ellipsoid_integral(Field field, int m, double det_t, double rho, double k) {
  if (!(det_t > 0.0) || !(rho > 0.0)) throw std::domain_error("ellipsoid_integral requires det_t, rho > 0");
  if (m < 1) throw std::domain_error("ellipsoid_integral requires m >= 1");
  double base = std::pow(rho, 0.5 * m + k) * sphere_surface(m) * radial_moment(m - 1, k);
  switch (field) {
    case Field::real: return base / std::sqrt(det_t);
    case Field::complex: return base / det_t;
    case Field::quaternion: return base / (det_t * det_t);
  }
  throw std::logic_error("unreachable");
}

}  // namespace statevol
