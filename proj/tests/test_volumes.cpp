#include <doctest.h>

#include <cmath>
#include <numbers>

#include "statevol/special.hpp"
#include "statevol/volumes.hpp"

using namespace statevol;
constexpr double kPi = std::numbers::pi;

TEST_CASE("closed-form volumes: exact equality") {
  CHECK(volume_lebesgue(Field::real, 3) == ExactVolume{Rational(1, 240), 2});
  CHECK(volume_lebesgue(Field::real, 4) == ExactVolume{Rational(3, 8 * 362880), 4});
  CHECK(volume_lebesgue(Field::real, 2) == ExactVolume{Rational(1, 4), 1});
  CHECK(volume_lebesgue(Field::complex, 2) == ExactVolume{Rational(1, 6), 1});
  CHECK(volume_lebesgue(Field::complex, 3) == ExactVolume{Rational(1, 20160), 3});
  CHECK(volume_lebesgue(Field::quaternion, 2) == ExactVolume{Rational(1, 60), 2});
  CHECK(volume_lebesgue(Field::quaternion, 1) == ExactVolume{Rational(1), 0});
  CHECK_THROWS_AS((void)volume_lebesgue(Field::real, 0), std::domain_error);
}

TEST_CASE("real volume parity dispatch and pi exponents") {
  for (int n = 2; n <= 9; ++n) {
    int k = n / 2;
    int expect = n % 2 == 0 ? k * k : k * k + k;
    CHECK(volume_lebesgue(Field::real, n).pi_pow == expect);
    CHECK(volume_lebesgue(Field::complex, n).pi_pow == n * (n - 1) / 2);
    CHECK(volume_lebesgue(Field::quaternion, n).pi_pow == n * n - n);
  }
}

TEST_CASE("step-by-step pipeline equals the closed form") {
  // n = 3 real: F0 F1 G_{1,0} G_{0,1/2} * simplex(3, 1)
  ExactValue pipeline3 = sphere_surface_exact(1) * sphere_surface_exact(2) *
                         radial_moment_exact(1, 0) * radial_moment_exact(0, 1) *
                         simplex_moment_exact(3, 2);
  CHECK(to_volume(pipeline3) == volume_lebesgue(Field::real, 3));

  // n = 4 real: F0 F1 F2 G_{2,0} G_{1,1/2} G_{0,1} * simplex(4, 3/2)
  ExactValue pipeline4 = sphere_surface_exact(1) * sphere_surface_exact(2) *
                         sphere_surface_exact(3) * radial_moment_exact(2, 0) *
                         radial_moment_exact(1, 1) * radial_moment_exact(0, 2) *
                         simplex_moment_exact(4, 3);
  CHECK(to_volume(pipeline4) == volume_lebesgue(Field::real, 4));

  // complex n = 3: F3 F1 G_{3,0} G_{1,1} * simplex(3, 2)
  ExactValue pipelineC3 = sphere_surface_exact(4) * sphere_surface_exact(2) *
                          radial_moment_exact(3, 0) * radial_moment_exact(1, 2) *
                          simplex_moment_exact(3, 4);
  CHECK(to_volume(pipelineC3) == volume_lebesgue(Field::complex, 3));

  // quaternion n = 2: F3 G_{3,0} * simplex(2, 2)
  ExactValue pipelineH2 =
      sphere_surface_exact(4) * radial_moment_exact(3, 0) * simplex_moment_exact(2, 4);
  CHECK(to_volume(pipelineH2) == volume_lebesgue(Field::quaternion, 2));
}

TEST_CASE("det moment fixed values") {
  CHECK(expected_det_alpha(Field::real, 2, 0.0) == doctest::Approx(1.0));
  CHECK(expected_det_alpha(Field::quaternion, 3, 0.0) == doctest::Approx(1.0));
  // analytic oracle: (4/pi) * integral of (4/3)(a(1-a))^(3/2) over (0,1) = 1/8
  CHECK(expected_det_alpha(Field::real, 2, 1.0) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(expected_det_alpha(Field::complex, 2, 1.0) == doctest::Approx(0.1).epsilon(1e-14));

  auto exact_r = expected_det_alpha_exact(Field::real, 2, 1.0);
  REQUIRE(exact_r.has_value());
  CHECK(exact_r->coeff == Rational(1, 8));
  CHECK(exact_r->sqrt_pi_pow == 0);
  auto exact_c = expected_det_alpha_exact(Field::complex, 2, 1.0);
  REQUIRE(exact_c.has_value());
  CHECK(exact_c->coeff == Rational(1, 10));
  CHECK_FALSE(expected_det_alpha_exact(Field::complex, 2, 0.5).has_value());
  CHECK(expected_det_alpha_exact(Field::real, 3, 0.5).has_value());
}

TEST_CASE("det moment times volume equals the assembled integral") {
  for (Field field : {Field::real, Field::complex, Field::quaternion}) {
    for (int n : {2, 3, 4}) {
      for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
        double lhs = expected_det_alpha(field, n, alpha) * volume_lebesgue(field, n).value();
        double rhs = det_alpha_integral_lebesgue(field, n, alpha);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("det moment decreases strictly in alpha") {
  for (Field field : {Field::real, Field::complex, Field::quaternion}) {
    for (int n : {2, 3, 5}) {
      double prev = expected_det_alpha(field, n, 0.0);
      for (double alpha = 0.25; alpha <= 3.0; alpha += 0.25) {
        double cur = expected_det_alpha(field, n, alpha);
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("floating path agrees with the exact one across the n=20 switch") {
  // n = 21 goes through log-gamma; assemble the same ratio from exact gammas
  const int n = 21;
  ExactValue exact = gamma_exact(n * (n + 1)) / gamma_exact(n + 1) * gamma_exact(n + 1 + 2) /
                     gamma_exact(n * (n + 1) + 2 * n);
  for (int i = 1; i <= n - 1; ++i) exact = exact * gamma_exact(i + 3) / gamma_exact(i + 1);
  CHECK(expected_det_alpha(Field::real, 21, 1.0) ==
        doctest::Approx(exact.to_double()).epsilon(1e-9));
  // direct spot check of the closed form at n = 2, alpha = 2: E[det^2]
  // = Gamma(3)/Gamma(3/2) * Gamma(7/2)/Gamma(7) * Gamma(3)/Gamma(1) = 1/48
  double expect = (2.0 / gamma_fn(1.5)) * (gamma_fn(3.5) / 720.0) * 2.0;
  CHECK(expected_det_alpha(Field::real, 2, 2.0) == doctest::Approx(expect).epsilon(1e-13));
  auto exact2 = expected_det_alpha_exact(Field::real, 2, 2.0);
  REQUIRE(exact2.has_value());
  CHECK(exact2->coeff == Rational(1, 48));
  (void)kPi;
}
