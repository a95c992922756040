#include "statevol/qubit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace statevol {

namespace {

constexpr double kPi = std::numbers::pi;

void require_metric_field(Field field) {
  if (field == Field::quaternion)
    throw std::domain_error("metric volumes are defined for the real and complex fields only");
}

QuadratureVerdict scale_verdict(QuadratureVerdict v, double factor) {
  if (v.finite) {
    v.result.value *= factor;
    v.result.err_est *= factor;
  }
  return v;
}

}  // namespace

double StokesPoint::radius() const { return std::sqrt(x * x + y * y + z * z); }

SelfAdjointState<std::complex<double>> stokes_to_state(const StokesPoint& p) {
  if (p.radius() >= 1.0) throw std::domain_error("Stokes point outside the open unit ball");
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + p.x);
  m(1, 1) = 0.5 * (1.0 - p.x);
  m(0, 1) = std::complex<double>(0.5 * p.y, 0.5 * p.z);
  m(1, 0) = std::conj(m(0, 1));
  return SelfAdjointState<std::complex<double>>{std::move(m)};
}

SelfAdjointState<double> stokes_to_state_real(double x, double y) {
  if (x * x + y * y >= 1.0) throw std::domain_error("Stokes point outside the open unit disk");
  RealMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + x);
  m(1, 1) = 0.5 * (1.0 - x);
  m(0, 1) = m(1, 0) = 0.5 * y;
  return SelfAdjointState<double>{std::move(m)};
}

StokesPoint state_to_stokes(const SelfAdjointState<std::complex<double>>& d) {
  StokesPoint p;
  p.x = d.mat(0, 0).real() - d.mat(1, 1).real();
  p.y = 2.0 * d.mat(0, 1).real();
  p.z = 2.0 * d.mat(0, 1).imag();
  return p;
}

QuadratureVerdict qubit_volume_monotone(Field field, const MonotoneFunction& f) {
  require_metric_field(field);
  if (field == Field::complex) {
    auto g = [&f](double t) {
      double q = (1.0 - t) / (1.0 + t);
      return q * q / (std::sqrt(t) * f(t));
    };
    return scale_verdict(classify_and_integrate(g, 0), 2.0 * kPi);
  }
  auto g = [&f](double t) {
    return (1.0 - t) / ((1.0 + t) * std::sqrt(t * (1.0 + t)) * std::sqrt(f(t)));
  };
  return scale_verdict(classify_and_integrate(g, 0), std::numbers::sqrt2 * kPi);
}

QuadratureResult qubit_volume_monotone_radial(Field field, const MonotoneFunction& f,
                                              double rel_tol) {
  require_metric_field(field);
  // integrate in v = 1 - r so the singular end sits at 0, where abscissae
  // keep full relative precision
  if (field == Field::complex) {
    auto g = [&f](double v) {
      double r = 1.0 - v;
      return r * r / (std::sqrt(v * (2.0 - v)) * (2.0 - v) * f(v / (2.0 - v)));
    };
    QuadratureResult res = integrate(g, rel_tol);
    res.value *= 4.0 * kPi;
    res.err_est *= 4.0 * kPi;
    return res;
  }
  auto g = [&f](double v) {
    double r = 1.0 - v;
    return r / (std::sqrt(v) * (2.0 - v) * std::sqrt(f(v / (2.0 - v))));
  };
  QuadratureResult res = integrate(g, rel_tol);
  res.value *= 2.0 * kPi;
  res.err_est *= 2.0 * kPi;
  return res;
}

QuadratureVerdict qubit_volume_pullback(Field field, const AdmissibleFunction& h) {
  require_metric_field(field);
  const bool complex_case = field == Field::complex;
  auto g = [&h, complex_case](double v) {
    double lambda_hi = 0.5 * (2.0 - v);
    double lambda_lo = 0.5 * v;
    double dh_hi = h.deriv(lambda_hi);
    double dh_lo = h.deriv(lambda_lo);
    double diff = h(lambda_hi) - h(lambda_lo);
    double base = std::hypot(dh_hi, dh_lo);  // the squares can overflow near v = 0
    return base * (complex_case ? diff * diff : std::abs(diff));
  };
  // the generator (or its derivative) may blow up where an eigenvalue
  // reaches 0, i.e. at v -> 0 after the r = 1 - v substitution
  QuadratureVerdict v = classify_and_integrate(g, 0);
  v.endpoint = 1;  // report in terms of the original radial variable
  return scale_verdict(v, complex_case ? kPi : kPi / std::numbers::sqrt2);
}

double lowner_kernel(double z) {
  if (!(z > 0.0 && z < 1.0)) throw std::domain_error("lowner_kernel is defined on (0,1)");
  if (z < 1e-12) return 2.0 * kPi * (kPi / std::sqrt(std::max(z, 1e-300)) - (4.0 + kPi));
  if (z > 1.0 - 1e-12) return 2.0 * kPi * (4.0 - kPi);
  double w = 2.0 * z - 1.0;
  if (std::abs(w) < 1e-3) {
    // series around z = 1/2 where the three closed-form terms cancel
    return kPi * kPi + w * (-8.0 * kPi / 3.0 + w * (0.75 * kPi * kPi - w * 32.0 * kPi / 15.0));
  }
  // arccos(2z-1) = 2 asin(sqrt(1-z)), exact and stable at both ends
  double t3 = 2.0 * std::asin(std::sqrt(1.0 - z)) / (w * w * std::sqrt(z * (1.0 - z)));
  return 2.0 * kPi * (2.0 / w - kPi / (w * w) + t3);
}

double lowner_kernel_oracle(double z, double rel_tol) {
  auto g = [z](double t) {
    double q = (1.0 - t) / (1.0 + t);
    return q * q / (std::sqrt(t) * ((1.0 - z) * t + z));
  };
  return 2.0 * kPi * integrate(g, rel_tol).value;
}

LownerMeasure LownerMeasure::point_mass_half() {
  LownerMeasure mu;
  mu.atoms = {{0.5, 1.0}};
  return mu;
}

LownerMeasure LownerMeasure::uniform() {
  LownerMeasure mu;
  mu.density = [](double) { return 1.0; };
  mu.density_mass = 1.0;
  return mu;
}

LownerMeasure LownerMeasure::arcsine() {
  LownerMeasure mu;
  mu.density = [](double z) { return 1.0 / (kPi * std::sqrt(z * (1.0 - z))); };
  mu.density_mass = 1.0;
  return mu;
}

namespace {

void validate_measure(const LownerMeasure& mu) {
  double mass = mu.density_mass;
  std::vector<bool> matched(mu.atoms.size(), false);
  for (size_t i = 0; i < mu.atoms.size(); ++i) {
    auto [z, w] = mu.atoms[i];
    if (z < 0.0 || z > 1.0 || w < 0.0) throw std::domain_error("measure atom outside [0,1] or negative");
    mass += w;
    if (matched[i] || std::abs(z - 0.5) <= 1e-12) continue;
    bool found = false;
    for (size_t j = 0; j < mu.atoms.size(); ++j) {
      if (j == i || matched[j]) continue;
      if (std::abs(mu.atoms[j].first - (1.0 - z)) <= 1e-9 &&
          std::abs(mu.atoms[j].second - w) <= 1e-9) {
        matched[i] = matched[j] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::domain_error("measure is not symmetric: unmatched atom at z = " + std::to_string(z));
  }
  if (mu.density) {
    for (double z = 0.05; z < 0.5; z += 0.1) {
      double a = mu.density(z), b = mu.density(1.0 - z);
      if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(a)))
        throw std::domain_error("measure density is not symmetric");
    }
  }
  if (std::abs(mass - 1.0) > 1e-6) throw std::domain_error("measure must have total mass one");
}

}  // namespace

QuadratureVerdict volume_from_measure(const LownerMeasure& mu) {
  validate_measure(mu);
  QuadratureVerdict verdict;
  verdict.endpoint = 0;

  // finiteness first: the z^(-1/2) moment must converge
  for (auto [z, w] : mu.atoms) {
    if (w > 0.0 && z < 1e-12) {
      verdict.finite = false;
      verdict.probe.exponent = std::numeric_limits<double>::infinity();
      verdict.probe.slope_lo = verdict.probe.slope_hi = verdict.probe.exponent;
      return verdict;
    }
  }
  if (mu.density) {
    auto moment = [&mu](double z) { return mu.density(z) / std::sqrt(z); };
    ExponentProbe probe = endpoint_exponent(moment, 0);
    verdict.probe = probe;
    if (probe.conclusive && probe.exponent >= kDivergenceThreshold) {
      verdict.finite = false;
      return verdict;
    }
    verdict.probe_inconclusive = !probe.conclusive;
  }

  double total = 0.0;
  for (auto [z, w] : mu.atoms) total += w * lowner_kernel(z);
  QuadratureResult res;
  res.converged = true;
  if (mu.density) {
    res = integrate([&mu](double z) { return mu.density(z) * lowner_kernel(z); }, 1e-10);
  }
  res.value += total;
  verdict.finite = true;
  verdict.result = res;
  return verdict;
}

std::vector<QubitVolumeRow> reproduce_table() {
  std::vector<QubitVolumeRow> rows;
  for (const MonotoneFunction& f : monotone_catalog()) {
    QubitVolumeRow row;
    row.id = f.id();
    row.params = f.params();
    row.computed_complex = qubit_volume_monotone(Field::complex, f);
    row.computed_real = qubit_volume_monotone(Field::real, f);

    const std::string head = row.id.substr(0, row.id.find(':'));
    if (head == "sld") {
      row.closed_complex = ClosedForm::from_exact(Rational(1), 2);
      row.closed_real = ClosedForm::from_exact(Rational(2), 1);
    } else if (head == "km") {
      row.closed_complex = ClosedForm::from_exact(Rational(2), 2);
      row.closed_real = ClosedForm::from_quoted(8.298);
    } else if (head == "geo") {
      row.closed_real = ClosedForm::from_exact(Rational(4), 1);
    } else if (head == "wy") {
      row.closed_complex = ClosedForm::from_formula(4.0 * kPi * (kPi - 2.0));
      row.closed_real = ClosedForm::from_formula(4.0 * kPi * (2.0 - std::numbers::sqrt2));
    } else if (head == "lm2") {
      row.closed_real = ClosedForm::from_quoted(19.986);
    } else if (head == "lm3") {
      row.closed_complex = ClosedForm::from_exact(Rational(1, 2), 4);
      row.closed_real = ClosedForm::from_quoted(11.51);
    } else if (head == "beta") {
      double b = row.params.at("beta");
      double s = std::sqrt(b - b * b);
      row.closed_complex = ClosedForm::from_formula(
          kPi * kPi * (1.0 - 2.0 * s) / ((1.0 - 2.0 * b) * (1.0 - 2.0 * b) * s));
      row.paper_left_open_real = true;
    } else if (head == "gam") {
      row.paper_left_open_real = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace statevol
