#include "statevol/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace statevol {

namespace {

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// (x-1)/log(x) with the removable singularity at 1 patched by series.
double log_mean_ratio(double x) {
  double u = x - 1.0;
  if (std::abs(u) < 1e-4)
    return 1.0 + u * (0.5 + u * (-1.0 / 12.0 + u * (1.0 / 24.0 - u * (19.0 / 720.0))));
  return u / std::log(x);
}

double require_positive(double x) {
  if (!(x > 0.0)) throw std::domain_error("monotone generators are defined on (0, inf)");
  return x;
}

constexpr double kEigClampLo = 1e-15;
constexpr double kEigClampHi = 1.0 - 1e-15;

template <class S>
double pullback_density(const AdmissibleFunction& h, const SelfAdjointState<S>& d, bool* clamped) {
  const int n = d.dim();
  Eigen::VectorXd mu = eigenvalues_self_adjoint(d.mat);
  bool hit = false;
  for (int i = 0; i < n; ++i) {
    if (mu(i) < kEigClampLo || mu(i) > kEigClampHi) {
      mu(i) = std::min(std::max(mu(i), kEigClampLo), kEigClampHi);
      hit = true;
    }
  }
  if (clamped) *clamped = hit;
  // determinant of the diagonal block: sum_i prod_{j != i} h'(mu_j)^2
  double phi = 0.0;
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double hp = h.deriv(mu(j));
      p *= hp * hp;
    }
    phi += p;
  }
  double prod = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double m = divided_difference(h, mu(i), mu(j));
      prod *= field_of<S> == Field::complex ? m * m : m;
    }
  double pairs = 0.25 * n * (n - 1) * (field_of<S> == Field::complex ? 2.0 : 1.0);
  return std::pow(2.0, pairs) * std::sqrt(phi) * std::abs(prod);
}

template <class S>
double monotone_density(const MonotoneFunction& f, const SelfAdjointState<S>& d) {
  const int n = d.dim();
  Eigen::VectorXd mu = eigenvalues_self_adjoint(d.mat);
  double det = 1.0;
  double prod = 1.0;
  for (int i = 0; i < n; ++i) {
    double mi = std::max(mu(i), 1e-18);
    det *= mi;
    for (int j = i + 1; j < n; ++j) {
      double m = m_weight(f, mi, std::max(mu(j), 1e-18));
      prod *= field_of<S> == Field::complex ? m : std::sqrt(m);
    }
  }
  double pairs = 0.25 * n * (n - 1) * (field_of<S> == Field::complex ? 2.0 : 1.0);
  return std::pow(2.0, pairs) * prod / std::sqrt(det);
}

}  // namespace

MonotoneFunction monotone_sld() {
  return {"sld", {}, [](double x) { return 0.5 * (1.0 + require_positive(x)); }};
}

MonotoneFunction monotone_rld() {
  return {"rld", {}, [](double x) { return 2.0 * require_positive(x) / (1.0 + x); }};
}

MonotoneFunction monotone_km() {
  return {"km", {}, [](double x) { return log_mean_ratio(require_positive(x)); }};
}

MonotoneFunction monotone_geo() {
  return {"geo", {}, [](double x) { return std::sqrt(require_positive(x)); }};
}

MonotoneFunction monotone_wy() {
  return {"wy", {}, [](double x) {
            double s = std::sqrt(require_positive(x)) + 1.0;
            return 0.25 * s * s;
          }};
}

MonotoneFunction monotone_lm2() {
  return {"lm2", {}, [](double x) {
            require_positive(x);
            return log_mean_ratio(x) * 2.0 * std::sqrt(x) / (1.0 + x);
          }};
}

MonotoneFunction monotone_lm3() {
  return {"lm3", {}, [](double x) {
            require_positive(x);
            double r = log_mean_ratio(x);
            return 2.0 * r * r / (1.0 + x);
          }};
}

MonotoneFunction monotone_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw std::domain_error("alpha family requires alpha in (0, 1/2]");
  return {"alpha:" + format_param(alpha),
          {{"alpha", alpha}},
          [alpha](double x) {
            require_positive(x);
            return 0.5 * x * (1.0 / (alpha * x + 1.0 - alpha) + 1.0 / ((1.0 - alpha) * x + alpha));
          }};
}

MonotoneFunction monotone_beta(double beta) {
  if (!(beta > 0.0 && beta < 0.5)) throw std::domain_error("beta family requires beta in (0, 1/2)");
  return {"beta:" + format_param(beta),
          {{"beta", beta}},
          [beta](double x) {
            require_positive(x);
            return 2.0 * (beta * x + 1.0 - beta) * ((1.0 - beta) * x + beta) / (x + 1.0);
          }};
}

MonotoneFunction monotone_gam(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 0.5))
    throw std::domain_error("gam family requires gamma in [0, 1/2]");
  return {"gam:" + format_param(gamma),
          {{"gam", gamma}},
          [gamma](double x) {
            require_positive(x);
            return 2.0 * std::pow(x, gamma + 0.5) / (1.0 + std::pow(x, 2.0 * gamma));
          }};
}

std::vector<MonotoneFunction> monotone_catalog() {
  std::vector<MonotoneFunction> cat;
  cat.push_back(monotone_sld());
  cat.push_back(monotone_rld());
  cat.push_back(monotone_km());
  cat.push_back(monotone_geo());
  cat.push_back(monotone_wy());
  cat.push_back(monotone_lm2());
  cat.push_back(monotone_lm3());
  for (double a : {0.1, 0.25, 0.5}) cat.push_back(monotone_alpha(a));
  for (double b : {0.1, 0.25, 0.4}) cat.push_back(monotone_beta(b));
  for (double g : {0.0, 0.25, 0.5}) cat.push_back(monotone_gam(g));
  return cat;
}

MonotoneFunction monotone_by_id(std::string_view id) {
  auto colon = id.find(':');
  std::string head(id.substr(0, colon));
  if (colon == std::string_view::npos) {
    if (head == "sld") return monotone_sld();
    if (head == "rld") return monotone_rld();
    if (head == "km") return monotone_km();
    if (head == "geo") return monotone_geo();
    if (head == "wy") return monotone_wy();
    if (head == "lm2") return monotone_lm2();
    if (head == "lm3") return monotone_lm3();
    throw std::domain_error("unknown monotone function id: " + std::string(id));
  }
  double p = std::stod(std::string(id.substr(colon + 1)));
  if (head == "alpha") return monotone_alpha(p);
  if (head == "beta") return monotone_beta(p);
  if (head == "gam") return monotone_gam(p);
  throw std::domain_error("unknown monotone function id: " + std::string(id));
}

MonotoneFunction transpose(const MonotoneFunction& f) {
  return {"transpose(" + f.id() + ")", f.params(),
          [f](double x) { return require_positive(x) / f(x); }, f.has_symmetry()};
}

AdmissibleFunction admissible_identity() {
  return {"identity", {}, [](double x) { return x; }, [](double) { return 1.0; }};
}

AdmissibleFunction admissible_log() {
  return {"log", {}, [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; }};
}

AdmissibleFunction admissible_power(double p) {
  if (p == 0.0) throw std::domain_error("power family requires p != 0");
  return {"power:" + format_param(p),
          {{"p", p}},
          [p](double x) { return p * std::pow(x, 1.0 / p); },
          [p](double x) { return std::pow(x, 1.0 / p - 1.0); }};
}

AdmissibleFunction admissible_by_id(std::string_view id) {
  auto colon = id.find(':');
  std::string head(id.substr(0, colon));
  if (head == "identity") return admissible_identity();
  if (head == "log") return admissible_log();
  if (head == "power" && colon != std::string_view::npos)
    return admissible_power(std::stod(std::string(id.substr(colon + 1))));
  throw std::domain_error("unknown admissible function id: " + std::string(id));
}

double m_weight(const MonotoneFunction& f, double mu_i, double mu_j) {
  if (!(mu_i > 0.0 && mu_j > 0.0)) throw std::domain_error("m_weight requires positive eigenvalues");
  return 1.0 / (mu_j * f(mu_i / mu_j));
}

double divided_difference(const AdmissibleFunction& h, double mu_i, double mu_j) {
  if (std::abs(mu_i - mu_j) < 1e-7 * std::max(mu_i, mu_j)) return h.deriv(0.5 * (mu_i + mu_j));
  return (h(mu_i) - h(mu_j)) / (mu_i - mu_j);
}

double sqrt_det_g_monotone(const MonotoneFunction& f, const SelfAdjointState<double>& d) {
  return monotone_density(f, d);
}

double sqrt_det_g_monotone(const MonotoneFunction& f,
                           const SelfAdjointState<std::complex<double>>& d) {
  return monotone_density(f, d);
}

double sqrt_det_g_pullback(const AdmissibleFunction& h, const SelfAdjointState<double>& d,
                           bool* clamped) {
  return pullback_density(h, d, clamped);
}

double sqrt_det_g_pullback(const AdmissibleFunction& h,
                           const SelfAdjointState<std::complex<double>>& d, bool* clamped) {
  return pullback_density(h, d, clamped);
}

}  // namespace statevol
