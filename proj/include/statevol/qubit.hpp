#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "statevol/algebra.hpp"
#include "statevol/exact.hpp"
#include "statevol/metrics.hpp"
#include "statevol/quadrature.hpp"

namespace statevol {

/// Coordinates of a qubit state on the unit ball: complex states use
/// (x, y, z), real ones the (x, y) disk. Eigenvalues are (1 +- r)/2.
struct StokesPoint {
  double x = 0.0, y = 0.0, z = 0.0;

  double radius() const;
  double eigenvalue_hi() const { return 0.5 * (1.0 + radius()); }
  double eigenvalue_lo() const { return 0.5 * (1.0 - radius()); }
};

SelfAdjointState<std::complex<double>> stokes_to_state(const StokesPoint& p);
SelfAdjointState<double> stokes_to_state_real(double x, double y);
StokesPoint state_to_stokes(const SelfAdjointState<std::complex<double>>& d);

/// Metric volume of the qubit space for a monotone generator, via the
/// t-substituted radial integral; probes the t -> 0 end first.
QuadratureVerdict qubit_volume_monotone(Field field, const MonotoneFunction& f);

/// Same volume through the direct integral over the unit ball/disk radius;
/// an independent route used for consistency checks (finite entries only).
QuadratureResult qubit_volume_monotone_radial(Field field, const MonotoneFunction& f,
                                              double rel_tol = 1e-10);

/// Pull-back metric volume; probes the r -> 1 end, where the generator or
/// its derivative may blow up.
QuadratureVerdict qubit_volume_pullback(Field field, const AdmissibleFunction& h);

/// Kernel of the measure representation of the complex qubit volume:
/// integrating K against the symmetric measure representing 1/f gives
/// V(f). Equals 2*pi times the printed closed form (see README erratum
/// note); evaluated by series near z = 1/2 and in a cancellation-free
/// arrangement elsewhere.
double lowner_kernel(double z);

/// Direct double-integral route to the same kernel (oracle for tests).
double lowner_kernel_oracle(double z, double rel_tol = 1e-10);

/// Symmetric probability measure on [0,1]: point atoms plus an optional
/// density part. Symmetry means atoms mirror around 1/2 and the density
/// satisfies density(z) = density(1-z).
struct LownerMeasure {
  std::vector<std::pair<double, double>> atoms;  // (location, weight)
  std::function<double(double)> density;         // may be empty
  double density_mass = 0.0;                     // integral of the density part

  static LownerMeasure point_mass_half();
  static LownerMeasure uniform();
  static LownerMeasure arcsine();
};

/// Volume of the complex qubit space for the metric whose transpose
/// generator has Loewner measure `mu`: first decides finiteness through the
/// z^(-1/2) moment, then integrates the kernel.
QuadratureVerdict volume_from_measure(const LownerMeasure& mu);

/// Closed form attached to a table row: exact rational * pi^k, a formula
/// value, or a decimal quoted to limited precision.
struct ClosedForm {
  enum class Kind { exact, formula, quoted_decimal } kind = Kind::exact;
  ExactVolume exact;
  double decimal = 0.0;

  double value() const { return kind == Kind::exact ? exact.value() : decimal; }
  static ClosedForm from_exact(Rational coeff, int pi_pow) {
    return {Kind::exact, ExactVolume{std::move(coeff), pi_pow}, 0.0};
  }
  static ClosedForm from_formula(double v) { return {Kind::formula, {}, v}; }
  static ClosedForm from_quoted(double v) { return {Kind::quoted_decimal, {}, v}; }
};

struct QubitVolumeRow {
  std::string id;
  std::map<std::string, double> params;
  QuadratureVerdict computed_complex;
  QuadratureVerdict computed_real;
  std::optional<ClosedForm> closed_complex;
  std::optional<ClosedForm> closed_real;
  bool paper_left_open_real = false;
};

/// The full volume table over the catalog (parameter families swept at
/// their representative values), in catalog order.
std::vector<QubitVolumeRow> reproduce_table();

}  // namespace statevol
