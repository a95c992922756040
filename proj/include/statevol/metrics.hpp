#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "statevol/algebra.hpp"

namespace statevol {

/// Generator of a monotone metric: positive on (0, inf), normalized with
/// f(1) = 1, and symmetric in the sense f(x) = x f(1/x) for every catalog
/// entry.
class MonotoneFunction {
 public:
  MonotoneFunction(std::string id, std::map<std::string, double> params,
                   std::function<double(double)> eval, bool has_symmetry = true)
      : id_(std::move(id)), params_(std::move(params)), eval_(std::move(eval)),
        has_symmetry_(has_symmetry) {}

  double operator()(double x) const { return eval_(x); }
  const std::string& id() const { return id_; }
  const std::map<std::string, double>& params() const { return params_; }
  bool has_symmetry() const { return has_symmetry_; }

 private:
  std::string id_;
  std::map<std::string, double> params_;
  std::function<double(double)> eval_;
  bool has_symmetry_;
};

/// Admissible generator of a pull-back metric: analytic on (0,1) with
/// nonvanishing derivative.
class AdmissibleFunction {
 public:
  AdmissibleFunction(std::string id, std::map<std::string, double> params,
                     std::function<double(double)> eval, std::function<double(double)> deriv)
      : id_(std::move(id)), params_(std::move(params)), eval_(std::move(eval)),
        deriv_(std::move(deriv)) {}

  double operator()(double x) const { return eval_(x); }
  double deriv(double x) const { return deriv_(x); }
  const std::string& id() const { return id_; }
  const std::map<std::string, double>& params() const { return params_; }

 private:
  std::string id_;
  std::map<std::string, double> params_;
  std::function<double(double)> eval_;
  std::function<double(double)> deriv_;
};

MonotoneFunction monotone_sld();
MonotoneFunction monotone_rld();
MonotoneFunction monotone_km();
MonotoneFunction monotone_geo();
MonotoneFunction monotone_wy();
MonotoneFunction monotone_lm2();
MonotoneFunction monotone_lm3();
MonotoneFunction monotone_alpha(double alpha);  // alpha in (0, 1/2]
MonotoneFunction monotone_beta(double beta);    // beta in (0, 1/2)
MonotoneFunction monotone_gam(double gamma);    // gamma in [0, 1/2]

/// The seven fixed generators plus the three parameter families at their
/// representative sweep values.
std::vector<MonotoneFunction> monotone_catalog();

/// Resolves ids like "sld", "alpha:0.25", "beta:0.1", "gam:0.5".
MonotoneFunction monotone_by_id(std::string_view id);

/// Transpose generator x / f(x); an involution on the catalog.
MonotoneFunction transpose(const MonotoneFunction& f);

AdmissibleFunction admissible_identity();
AdmissibleFunction admissible_log();
AdmissibleFunction admissible_power(double p);  // h = p x^(1/p), p != 0

/// Resolves "identity", "log", "power:P".
AdmissibleFunction admissible_by_id(std::string_view id);

/// Eigenbasis weight 1/(mu_j f(mu_i / mu_j)); symmetric for symmetric f.
double m_weight(const MonotoneFunction& f, double mu_i, double mu_j);

/// Divided difference (h(mu_i) - h(mu_j)) / (mu_i - mu_j) with the
/// derivative branch on the near-diagonal.
double divided_difference(const AdmissibleFunction& h, double mu_i, double mu_j);

/// Volume density sqrt(det g_f) of the monotone metric at a state, as a
/// function of the independent matrix-entry coordinates.
double sqrt_det_g_monotone(const MonotoneFunction& f, const SelfAdjointState<double>& d);
double sqrt_det_g_monotone(const MonotoneFunction& f,
                           const SelfAdjointState<std::complex<double>>& d);

/// Volume density sqrt(det g_h) of the pull-back metric at a state.
/// Eigenvalues that fall outside (0,1) numerically are clamped to
/// [1e-15, 1-1e-15]; `clamped`, when given, reports that this happened.
double sqrt_det_g_pullback(const AdmissibleFunction& h, const SelfAdjointState<double>& d,
                           bool* clamped = nullptr);
double sqrt_det_g_pullback(const AdmissibleFunction& h,
                           const SelfAdjointState<std::complex<double>>& d,
                           bool* clamped = nullptr);

}  // namespace statevol
