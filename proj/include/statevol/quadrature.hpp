#pragma once

#include <functional>

namespace statevol {

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
  int levels_used = 0;
  bool converged = false;
};

/// Endpoint exponent probe: local power p with f ~ dist^(-p) approaching the
/// endpoint. `conclusive` is false when the two slope estimates disagree by
/// more than 0.05.
struct ExponentProbe {
  double exponent = 0.0;
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  bool conclusive = true;
};

/// Tanh-sinh (double exponential) quadrature on the open interval (0,1).
/// Levels are halved until the successive-level difference drops below
/// max(rel_tol*|value|, abs_tol); integrable endpoint singularities are fine.
/// Throws on a non-finite evaluation, reporting the abscissa.
QuadratureResult integrate(const std::function<double(double)>& f, double rel_tol = 1e-10,
                           double abs_tol = 0.0);

/// Probes f at distances 1e-4, 1e-6, 1e-8 from the endpoint (0 or 1) and
/// returns the mean local log-log slope. f must be positive there.
ExponentProbe endpoint_exponent(const std::function<double(double)>& f, int endpoint);

/// Exponent at or above which an integrand is declared divergent.
inline constexpr double kDivergenceThreshold = 0.99;

/// Outcome of the probe-then-integrate protocol: either a finite value with
/// its quadrature diagnostics, or divergence evidence (the measured local
/// exponent at the singular endpoint).
struct QuadratureVerdict {
  bool finite = true;
  QuadratureResult result;  // meaningful when finite
  ExponentProbe probe;
  int endpoint = 0;
  bool probe_inconclusive = false;  // finite-with-warning when set

  double exponent() const { return probe.exponent; }
};

/// Probes the exponent at `singular_endpoint` first; integrates only when
/// the integrand is not declared divergent. An inconclusive probe falls
/// through to integration with the warning flag set.
QuadratureVerdict classify_and_integrate(const std::function<double(double)>& f,
                                         int singular_endpoint, double rel_tol = 1e-10);

}  // namespace statevol
