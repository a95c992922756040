#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "statevol/algebra.hpp"
#include "statevol/rng.hpp"

namespace statevol {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::int64_t n_accepted = -1;  // rejection mode only
};

struct FunctionalEstimate {
  McEstimate mean;       // E[phi]
  McEstimate integral;   // E[phi] * V_lebesgue
  std::int64_t n_nonfinite = 0;
  bool warning = false;  // more than 0.1% non-finite evaluations
};

/// Thrown when a rejection run accepts nothing; ask for more samples.
struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Draws one state exactly from the normalized Lebesgue measure. The
/// diagonal comes from a symmetric Dirichlet with parameter (n-1)d/2 + 1;
/// column j+1 is filled conditionally on the leading block A_j by a uniform
/// sphere direction, a Beta-distributed radius and a sqrt_psd(A_j) map.
template <class S>
SelfAdjointState<S> sample_state(int n, RngStream& rng);

AnyState sample_state(Field field, int n, RngStream& rng);

/// Rejection Monte Carlo estimate of the Lebesgue volume over the box
/// (uniform simplex diagonal) x (off-diagonal components in [-1/2, 1/2]).
/// Splitting into streams parallelizes; the result depends only on
/// (seed, n_streams).
McEstimate estimate_volume_mc(Field field, int n, std::int64_t n_samples, std::uint64_t seed,
                              int n_streams = 1);

/// Mean of a functional over exact uniform draws, plus the implied integral
/// (mean times the exact Lebesgue volume).
template <class S>
FunctionalEstimate estimate_functional_mc(int n, std::int64_t n_samples,
                                          const std::function<double(const SelfAdjointState<S>&)>& functional,
                                          std::uint64_t seed, int n_streams = 1);

FunctionalEstimate estimate_functional_mc(Field field, int n, std::int64_t n_samples,
                                          const std::function<double(const AnyState&)>& functional,
                                          std::uint64_t seed, int n_streams = 1);

/// Sample export schema (CLI `sample`): diagonal entries first, then the
/// upper-triangle off-diagonal entries in row-major order, each expanded to
/// its real components.
std::string sample_csv_header(Field field, int n);
template <class S>
void append_sample_csv(std::ostream& os, const SelfAdjointState<S>& state, int digits);
template <class S>
std::vector<double> state_components(const SelfAdjointState<S>& state);

}  // namespace statevol
