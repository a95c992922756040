#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "statevol/sampling.hpp"
#include "statevol/volumes.hpp"

using namespace statevol;

TEST_CASE("every sample is a valid state") {
  RngStream rng(1, 0);
  for (int trial = 0; trial < 300; ++trial) {
    auto sr = sample_state<double>(3, rng);
    CHECK(trace_real(sr.mat) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_positive_definite(sr.mat));
    CHECK(is_self_adjoint(sr.mat, 0.0));

    auto sc = sample_state<std::complex<double>>(4, rng);
    CHECK(trace_real(sc.mat) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_positive_definite(sc.mat));

    auto sq = sample_state<Quaternion>(2, rng);
    CHECK(trace_real(sq.mat) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_positive_definite(sq.mat));
  }
}

TEST_CASE("diagonal marginal matches the implied Dirichlet (KS, real n=3)") {
  RngStream rng(2, 0);
  const int n_samples = 20000;
  std::vector<double> u;
  u.reserve(n_samples);
  for (int s = 0; s < n_samples; ++s) {
    auto st = sample_state<double>(3, rng);
    // a_11 has Beta(2, 4) marginal under Dirichlet(2,2,2)
    u.push_back(oracle::beta_cdf_int(2, 4, st.mat(0, 0)));
  }
  double d = oracle::ks_statistic_uniform(std::move(u));
  CHECK(d < 1.62762 / std::sqrt(static_cast<double>(n_samples)));
}

TEST_CASE("off-diagonal conditional is a semicircle (real n=3, quick)") {
  RngStream rng(3, 0);
  const int n_samples = 20000;
  const int bins = 20;
  std::vector<double> counts(bins, 0.0);
  for (int s = 0; s < n_samples; ++s) {
    auto st = sample_state<double>(3, rng);
    double u = st.mat(0, 1) / std::sqrt(st.mat(0, 0) * st.mat(1, 1));
    int b = static_cast<int>((u + 1.0) / 2.0 * bins);
    b = std::min(std::max(b, 0), bins - 1);
    counts[static_cast<size_t>(b)] += 1.0;
  }
  auto semicircle_cdf = [](double u) {
    return (u * std::sqrt(1.0 - u * u) + std::asin(u)) / std::numbers::pi + 0.5;
  };
  double chi2 = 0.0;
  for (int b = 0; b < bins; ++b) {
    double lo = -1.0 + 2.0 * b / bins, hi = -1.0 + 2.0 * (b + 1) / bins;
    double expect = n_samples * (semicircle_cdf(hi) - semicircle_cdf(lo));
    double diff = counts[static_cast<size_t>(b)] - expect;
    chi2 += diff * diff / expect;
  }
  CHECK(chi2 < 36.1909);  // chi-square 0.99 quantile at 19 dof
}

TEST_CASE("rejection estimator agrees with the closed form") {
  auto est = estimate_volume_mc(Field::real, 2, 200000, 5);
  double truth = volume_lebesgue(Field::real, 2).value();
  CHECK(std::abs(est.value - truth) <= 3.0 * est.std_error);
  CHECK(est.n_accepted > 0);
  CHECK(est.n_samples == 200000);

  est = estimate_volume_mc(Field::complex, 2, 200000, 5);
  truth = volume_lebesgue(Field::complex, 2).value();
  CHECK(std::abs(est.value - truth) <= 3.0 * est.std_error);
}

TEST_CASE("rejection estimator input validation") {
  CHECK_THROWS_AS((void)estimate_volume_mc(Field::real, 2, 100, 1), std::domain_error);
  CHECK_THROWS_AS((void)estimate_volume_mc(Field::real, 1, 100000, 1), std::domain_error);
}

TEST_CASE("functional estimator: constant recovers the volume exactly") {
  std::function<double(const SelfAdjointState<double>&)> one = [](const auto&) { return 1.0; };
  auto fe = estimate_functional_mc<double>(3, 10000, one, 7);
  CHECK(fe.mean.value == doctest::Approx(1.0));
  CHECK(fe.mean.std_error == doctest::Approx(0.0));
  CHECK(fe.integral.value == doctest::Approx(volume_lebesgue(Field::real, 3).value()));
  CHECK_FALSE(fe.warning);
}

TEST_CASE("functional estimator: det mean matches the moment formula") {
  std::function<double(const SelfAdjointState<double>&)> det2 =
      [](const SelfAdjointState<double>& s) {
        return s.mat(0, 0) * s.mat(1, 1) - s.mat(0, 1) * s.mat(1, 0);
      };
  auto fe = estimate_functional_mc<double>(2, 200000, det2, 11);
  CHECK(std::abs(fe.mean.value - 0.125) <= 3.0 * fe.mean.std_error);
}

TEST_CASE("functional estimator counts non-finite values") {
  int calls = 0;
  std::function<double(const SelfAdjointState<double>&)> sometimes_nan =
      [&calls](const auto&) { return ++calls % 2 == 0 ? std::nan("") : 1.0; };
  auto fe = estimate_functional_mc<double>(2, 10000, sometimes_nan, 1);
  CHECK(fe.n_nonfinite == 5000);
  CHECK(fe.warning);
  CHECK(fe.mean.n_samples == 5000);
}

TEST_CASE("stream splitting is deterministic and merge-order independent") {
  auto one = estimate_volume_mc(Field::real, 3, 120000, 42, 1);
  auto four_a = estimate_volume_mc(Field::real, 3, 120000, 42, 4);
  auto four_b = estimate_volume_mc(Field::real, 3, 120000, 42, 4);
  CHECK(four_a.value == four_b.value);
  CHECK(four_a.n_accepted == four_b.n_accepted);
  // different stream partitions legitimately give different estimates
  CHECK(std::abs(four_a.value - one.value) <= 4.0 * (four_a.std_error + one.std_error));

  std::function<double(const SelfAdjointState<double>&)> det2 =
      [](const SelfAdjointState<double>& s) {
        return s.mat(0, 0) * s.mat(1, 1) - s.mat(0, 1) * s.mat(1, 0);
      };
  auto fa = estimate_functional_mc<double>(2, 50000, det2, 9, 3);
  auto fb = estimate_functional_mc<double>(2, 50000, det2, 9, 3);
  CHECK(fa.mean.value == fb.mean.value);
  CHECK(fa.integral.value == fb.integral.value);
}

TEST_CASE("sample export schema") {
  CHECK(sample_csv_header(Field::real, 2) == "a_1_1,a_2_2,a_1_2");
  CHECK(sample_csv_header(Field::complex, 2) == "a_1_1,a_2_2,a_1_2_re,a_1_2_im");
  CHECK(sample_csv_header(Field::quaternion, 2) ==
        "a_1_1,a_2_2,a_1_2_w,a_1_2_x,a_1_2_y,a_1_2_z");
  CHECK(sample_csv_header(Field::real, 3) == "a_1_1,a_2_2,a_3_3,a_1_2,a_1_3,a_2_3");

  RngStream rng(4, 0);
  auto st = sample_state<std::complex<double>>(3, rng);
  std::vector<double> comps = state_components(st);
  REQUIRE(comps.size() == 9);
  CHECK(comps[0] == st.mat(0, 0).real());
  CHECK(comps[3] == st.mat(0, 1).real());
  CHECK(comps[4] == st.mat(0, 1).imag());
  CHECK(comps[7] == st.mat(1, 2).real());

  std::ostringstream os;
  append_sample_csv(os, st, 17);
  std::string line = os.str();
  CHECK(std::count(line.begin(), line.end(), ',') == 8);
  CHECK(line.back() == '\n');
}

TEST_CASE("variant dispatch by runtime field") {
  RngStream rng(6, 0);
  AnyState st = sample_state(Field::quaternion, 2, rng);
  CHECK(std::holds_alternative<SelfAdjointState<Quaternion>>(st));
  st = sample_state(Field::real, 2, rng);
  CHECK(std::holds_alternative<SelfAdjointState<double>>(st));
}
