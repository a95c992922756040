// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "statevol/metrics.hpp"
#include "statevol/qubit.hpp"
#include "statevol/sampling.hpp"
#include "statevol/special.hpp"
#include "statevol/volumes.hpp"

using namespace statevol;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---- criterion 1: closed-form volumes, exact equality ---------------------

Check criterion1() {
  Check c;
  c.require(volume_lebesgue(Field::real, 3) == ExactVolume{Rational(1, 240), 2}, "V(R,3)");
  c.require(volume_lebesgue(Field::real, 4) == ExactVolume{Rational(3, 8 * 362880), 4}, "V(R,4)");
  c.require(volume_lebesgue(Field::real, 2) == ExactVolume{Rational(1, 4), 1}, "V(R,2)");
  c.require(volume_lebesgue(Field::complex, 2) == ExactVolume{Rational(1, 6), 1}, "V(C,2)");
  c.require(volume_lebesgue(Field::complex, 3) == ExactVolume{Rational(1, 20160), 3}, "V(C,3)");
  c.require(volume_lebesgue(Field::quaternion, 2) == ExactVolume{Rational(1, 60), 2}, "V(H,2)");
  return c;
}

// ---- criterion 2: rejection Monte Carlo cross-validation -------------------

Check criterion2() {
  Check c;
  struct Case {
    Field field;
    int n;
    bool tight;  // also require 1% relative agreement
  };
  const Case cases[] = {{Field::real, 2, true},    {Field::real, 3, true},
                        {Field::complex, 2, true}, {Field::quaternion, 2, true},
                        {Field::real, 4, false},   {Field::complex, 3, false}};
  for (const Case& k : cases) {
    double t0 = now_seconds();
    McEstimate est = estimate_volume_mc(k.field, k.n, 10000000, 2024);
    double elapsed = now_seconds() - t0;
    double truth = volume_lebesgue(k.field, k.n).value();
    std::string tag = std::string(field_name(k.field)) + "," + std::to_string(k.n);
    c.require(std::abs(est.value - truth) <= 3.0 * est.std_error,
              tag + " 3-sigma (dev " + fmt((est.value - truth) / est.std_error) + ")");
    if (k.tight)
      c.require(std::abs(est.value - truth) <= 0.01 * truth,
                tag + " 1% (rel " + fmt(std::abs(est.value - truth) / truth) + ")");
    c.require(elapsed <= 120.0, tag + " runtime " + fmt(elapsed) + "s");
  }
  return c;
}

// ---- criterion 3: det^alpha ------------------------------------------------

Check criterion3() {
  Check c;
  auto exact_r = expected_det_alpha_exact(Field::real, 2, 1.0);
  auto exact_c = expected_det_alpha_exact(Field::complex, 2, 1.0);
  c.require(exact_r && exact_r->coeff == Rational(1, 8) && exact_r->sqrt_pi_pow == 0,
            "E[det] real 2 != 1/8");
  c.require(exact_c && exact_c->coeff == Rational(1, 10) && exact_c->sqrt_pi_pow == 0,
            "E[det] complex 2 != 1/10");

  std::function<double(const SelfAdjointState<double>&)> det_r =
      [](const SelfAdjointState<double>& s) {
        return s.mat(0, 0) * s.mat(1, 1) - s.mat(0, 1) * s.mat(1, 0);
      };
  auto fr = estimate_functional_mc<double>(2, 1000000, det_r, 71);
  c.require(std::abs(fr.mean.value - 0.125) <= 3.0 * fr.mean.std_error,
            "MC real (dev " + fmt((fr.mean.value - 0.125) / fr.mean.std_error) + ")");

  std::function<double(const SelfAdjointState<std::complex<double>>&)> det_c =
      [](const SelfAdjointState<std::complex<double>>& s) {
        return (s.mat(0, 0) * s.mat(1, 1) - s.mat(0, 1) * s.mat(1, 0)).real();
      };
  auto fc = estimate_functional_mc<std::complex<double>>(2, 1000000, det_c, 72);
  c.require(std::abs(fc.mean.value - 0.1) <= 3.0 * fc.mean.std_error,
            "MC complex (dev " + fmt((fc.mean.value - 0.1) / fc.mean.std_error) + ")");
  return c;
}

// ---- criterion 4: qubit table reproduction ---------------------------------

Check criterion4() {
  Check c;
  double t0 = now_seconds();
  std::vector<QubitVolumeRow> rows = reproduce_table();
  int checked_finite = 0, checked_infinite = 0;
  for (const QubitVolumeRow& row : rows) {
    for (Field field : {Field::complex, Field::real}) {
      const QuadratureVerdict& v = field == Field::complex ? row.computed_complex : row.computed_real;
      const auto& closed = field == Field::complex ? row.closed_complex : row.closed_real;
      std::string tag = row.id + "/" + std::string(field_name(field));
      if (closed) {
        ++checked_finite;
        c.require(v.finite, tag + " expected finite");
        if (v.finite) {
          double rel = std::abs(v.result.value - closed->value()) / std::abs(closed->value());
          c.require(rel <= 5e-3, tag + " rel " + fmt(rel));
        }
      }
    }
  }
  // rows the table marks as infinite
  const std::pair<const char*, Field> infinite_rows[] = {
      {"rld", Field::complex},        {"rld", Field::real},
      {"geo", Field::complex},        {"lm2", Field::complex},
      {"alpha:0.1", Field::complex},  {"alpha:0.1", Field::real},
      {"alpha:0.25", Field::complex}, {"alpha:0.25", Field::real},
      {"alpha:0.5", Field::complex},  {"alpha:0.5", Field::real},
      {"gam:0", Field::complex},      {"gam:0.25", Field::complex},
      {"gam:0.5", Field::complex}};
  for (const auto& [id, field] : infinite_rows) {
    bool found = false;
    for (const QubitVolumeRow& row : rows) {
      if (row.id != id) continue;
      found = true;
      const QuadratureVerdict& v = field == Field::complex ? row.computed_complex : row.computed_real;
      std::string tag = std::string(id) + "/" + std::string(field_name(field));
      c.require(!v.finite, tag + " expected infinite");
      c.require(v.exponent() >= 0.99, tag + " exponent " + fmt(v.exponent()));
      ++checked_infinite;
    }
    c.require(found, std::string(id) + " missing from table");
  }
  double elapsed = now_seconds() - t0;
  c.require(elapsed <= 60.0, "runtime " + fmt(elapsed) + "s");
  c.detail = std::to_string(checked_finite) + " closed forms, " +
             std::to_string(checked_infinite) + " divergent rows, " + fmt(elapsed) + "s" +
             (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

// ---- criterion 5: kernel erratum suite --------------------------------------

Check criterion5() {
  Check c;
  for (double z = 0.1; z < 0.95; z += 0.1) {
    double rel = std::abs(lowner_kernel(z) - lowner_kernel_oracle(z)) / lowner_kernel_oracle(z);
    c.require(rel <= 1e-8, "K(" + fmt(z) + ") rel " + fmt(rel));
  }
  auto delta = volume_from_measure(LownerMeasure::point_mass_half());
  c.require(delta.finite && std::abs(delta.result.value - kPi * kPi) <= 1e-6 * kPi * kPi,
            "delta measure");
  auto uniform = volume_from_measure(LownerMeasure::uniform());
  c.require(uniform.finite &&
                std::abs(uniform.result.value - 2.0 * kPi * kPi) <= 1e-6 * 2.0 * kPi * kPi,
            "uniform measure");
  c.require(!volume_from_measure(LownerMeasure::arcsine()).finite, "arcsine not infinite");
  return c;
}

// ---- criterion 6: Monte Carlo metric volumes vs quadrature ------------------

Check criterion6() {
  Check c;
  for (const char* id : {"sld", "km", "wy"}) {
    MonotoneFunction f = monotone_by_id(id);
    double quad = qubit_volume_monotone(Field::complex, f).result.value;
    std::function<double(const SelfAdjointState<std::complex<double>>&)> dens =
        [&f](const SelfAdjointState<std::complex<double>>& s) { return sqrt_det_g_monotone(f, s); };
    auto est = estimate_functional_mc<std::complex<double>>(2, 10000000, dens, 616);
    double dev = (est.integral.value - quad) / est.integral.std_error;
    c.require(std::abs(est.integral.value - quad) <= 3.0 * est.integral.std_error,
              std::string(id) + " dev " + fmt(dev) + " sigma");
    if (c.detail.size() < 120)
      c.detail += std::string(id) + ": " + fmt(est.integral.value) + "+-" +
                  fmt(est.integral.std_error) + " vs " + fmt(quad) + "  ";
  }
  return c;
}

// ---- criterion 7: sampler distribution suite --------------------------------

Check criterion7() {
  Check c;
  const int n_samples = 100000;
  const double ks_crit = 1.62762 / std::sqrt(static_cast<double>(n_samples));

  struct KsCase {
    Field field;
    int n;
    int beta_a, beta_b;  // implied marginal Beta(a, b) of a diagonal entry
  };
  const KsCase ks_cases[] = {
      {Field::real, 3, 2, 4}, {Field::complex, 2, 2, 2}, {Field::complex, 3, 3, 6}};
  for (const KsCase& k : ks_cases) {
    std::vector<double> u;
    u.reserve(n_samples);
    RngStream rng(99, 0);
    for (int s = 0; s < n_samples; ++s) {
      double a11 = dispatch_field(k.field, [&](auto tag) {
        using S = decltype(tag);
        return ScalarTraits<S>::real_part(sample_state<S>(k.n, rng).mat(0, 0));
      });
      u.push_back(oracle::beta_cdf_int(k.beta_a, k.beta_b, a11));
    }
    double d = oracle::ks_statistic_uniform(std::move(u));
    std::string tag = std::string(field_name(k.field)) + "," + std::to_string(k.n);
    c.require(d < ks_crit, tag + " KS " + fmt(d) + " >= " + fmt(ks_crit));
    if (c.detail.size() < 120) c.detail += tag + " KS " + fmt(d) + "  ";
  }

  // conditional off-diagonal density of the real 3x3 case: u = f/sqrt(ab)
  // follows the semicircle law regardless of the conditioning diagonal
  const int bins = 20;
  std::vector<double> counts(bins, 0.0);
  RngStream rng(98, 0);
  for (int s = 0; s < n_samples; ++s) {
    auto st = sample_state<double>(3, rng);
    double u = st.mat(0, 1) / std::sqrt(st.mat(0, 0) * st.mat(1, 1));
    int b = std::min(std::max(static_cast<int>((u + 1.0) * 0.5 * bins), 0), bins - 1);
    counts[static_cast<size_t>(b)] += 1.0;
  }
  auto semicircle_cdf = [](double u) {
    return (u * std::sqrt(1.0 - u * u) + std::asin(u)) / kPi + 0.5;
  };
  double chi2 = 0.0;
  for (int b = 0; b < bins; ++b) {
    double lo = -1.0 + 2.0 * b / bins, hi = -1.0 + 2.0 * (b + 1) / bins;
    double expect = n_samples * (semicircle_cdf(hi) - semicircle_cdf(lo));
    chi2 += (counts[static_cast<size_t>(b)] - expect) * (counts[static_cast<size_t>(b)] - expect) /
            expect;
  }
  c.require(chi2 < 36.1909, "chi2 " + fmt(chi2) + " >= 36.19 (0.99 quantile, 19 dof)");
  c.detail += "chi2 " + fmt(chi2);
  return c;
}

// ---- criterion 8: property suites -------------------------------------------

Check criterion8() {
  Check c;
  RngStream rng(404, 0);

  // Lemma-4 minor recursion vs cofactor expansion, n <= 5, all fields
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      RealMatrix a = oracle::random_spd(n, rng);
      auto minors = leading_minor_determinants(a);
      for (int k = 1; k <= n; ++k) {
        double expect = oracle::cofactor_det(RealMatrix(a.topLeftCorner(k, k)));
        if (std::abs(minors[k - 1] - expect) > 1e-10 * std::max(1.0, std::abs(expect)))
          c.require(false, "real minors n=" + std::to_string(n));
      }
      ComplexMatrix cm = oracle::random_hpd(n, rng);
      auto cminors = leading_minor_determinants(cm);
      for (int k = 1; k <= n; ++k) {
        double expect = oracle::cofactor_det(ComplexMatrix(cm.topLeftCorner(k, k))).real();
        if (std::abs(cminors[k - 1] - expect) > 1e-10 * std::max(1.0, std::abs(expect)))
          c.require(false, "complex minors n=" + std::to_string(n));
      }
    }
  }
  // quaternionic route: qdet^2 against the cofactor determinant of the
  // embedding (n <= 3 keeps the 2n-sized cofactor expansion tractable)
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      QuaternionMatrix q = oracle::random_quaternion_hpd(n, rng);
      double qd = qdet(q);
      double expect = oracle::cofactor_det(ComplexMatrix(embed_complex(q))).real();
      if (std::abs(qd * qd - expect) > 1e-10 * std::max(1.0, std::abs(expect)))
        c.require(false, "quaternion qdet n=" + std::to_string(n));
    }
  }

  // special-function identities against direct quadrature
  for (double a : {0.0, 1.0, 2.5, 4.0}) {
    for (double b : {0.0, 0.5, 1.5, 3.0}) {
      double direct = oracle::adaptive_simpson(
          [a, b](double x) { return std::pow(x, a) * std::pow(1.0 - x * x, b); }, 0.0, 1.0, 1e-12);
      if (std::abs(radial_moment(a, b) - direct) > 1e-8 * std::max(1.0, direct))
        c.require(false, "radial_moment(" + fmt(a) + "," + fmt(b) + ")");
    }
  }
  for (int two_z = 1; two_z <= 19; ++two_z) {
    double lg = gamma_fn(0.5 * two_z);
    if (std::abs(gamma_exact(two_z).to_double() - lg) > 1e-8 * lg)
      c.require(false, "gamma_exact(" + std::to_string(two_z) + ")");
  }
  for (int n = 2; n <= 4; ++n) {
    for (double k : {0.5, 1.0, 2.0}) {
      // simplex moment against iterated integration (n = 2, 3) and the
      // gamma identity elsewhere
      if (n == 2) {
        double direct = oracle::adaptive_simpson(
            [k](double x) { return std::pow(x * (1.0 - x), k); }, 0.0, 1.0, 1e-12);
        if (std::abs(simplex_moment(2, k) - direct) > 1e-8 * direct)
          c.require(false, "simplex n=2 k=" + fmt(k));
      } else if (n == 3) {
        double direct = oracle::adaptive_simpson(
            [k](double x) {
              return oracle::adaptive_simpson(
                  [k, x](double y) { return std::pow(x * y * (1.0 - x - y), k); }, 0.0, 1.0 - x,
                  1e-12);
            },
            0.0, 1.0, 1e-10);
        if (std::abs(simplex_moment(3, k) - direct) > 1e-7 * direct)
          c.require(false, "simplex n=3 k=" + fmt(k));
      }
    }
  }
  for (double k : {0.0, 0.5, 1.0, 1.5}) {
    double t1 = 1.3, t2 = 0.8, rho = 0.9;
    double direct = oracle::adaptive_simpson(
        [&](double x) {
          double rem = rho - t1 * x * x;
          if (rem <= 0.0) return 0.0;
          double ylim = std::sqrt(rem / t2);
          return oracle::adaptive_simpson(
              [&](double y) { return std::pow(std::max(rem - t2 * y * y, 0.0), k); }, -ylim, ylim,
              1e-12);
        },
        -std::sqrt(rho / t1), std::sqrt(rho / t1), 1e-10);
    if (std::abs(ellipsoid_integral(Field::real, 2, t1 * t2, rho, k) - direct) > 1e-8 * direct)
      c.require(false, "ellipsoid k=" + fmt(k));
  }

  // generator symmetry residuals over the full catalog
  for (const MonotoneFunction& f : monotone_catalog()) {
    for (double e = -6.0; e <= 6.0; e += 0.5) {
      double x = std::pow(10.0, e);
      double residual = std::abs(f(x) - x * f(1.0 / x));
      if (residual > 1e-12 * std::max(1.0, f(x)))
        c.require(false, f.id() + " symmetry at x=" + fmt(x));
    }
  }

  // pull-back identity-map volumes (geometric oracles)
  auto pc = qubit_volume_pullback(Field::complex, admissible_identity());
  c.require(pc.finite && std::abs(pc.result.value - std::numbers::sqrt2 * kPi / 3.0) <=
                             1e-8 * pc.result.value,
            "pullback identity complex");
  auto pr = qubit_volume_pullback(Field::real, admissible_identity());
  c.require(pr.finite && std::abs(pr.result.value - 0.5 * kPi) <= 1e-8 * pr.result.value,
            "pullback identity real");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {"closed-form volumes (exact)", criterion1},
      {"Monte Carlo volume cross-validation", criterion2},
      {"det^alpha moments", criterion3},
      {"qubit table reproduction", criterion4},
      {"kernel erratum suite", criterion5},
      {"cross-path metric volume consistency", criterion6},
      {"sampler distribution suite", criterion7},
      {"property suites", criterion8},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& crit : criteria) {
    ++index;
    Check res;
    try {
      res = crit.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    if (!res.ok) ++failures;
    std::printf("[%s] criterion %d: %s%s%s\n", res.ok ? "PASS" : "FAIL", index, crit.name,
                res.detail.empty() ? "" : " — ", res.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
