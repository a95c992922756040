#pragma once

#include <optional>

#include "statevol/exact.hpp"
#include "statevol/field.hpp"

namespace statevol {

/// Euclidean (Lebesgue) volume of the trace-one positive-definite matrices
/// over the given field, exact as rational * pi^k. n = 1 is a single point
/// with volume 1.
ExactVolume volume_lebesgue(Field field, int n);

/// Expected value of det^alpha under the normalized Lebesgue measure.
double expected_det_alpha(Field field, int n, double alpha);

/// Exact value when available: alpha must be a half-integer for the real
/// field and an integer for the complex and quaternionic ones.
std::optional<ExactValue> expected_det_alpha_exact(Field field, int n, double alpha);

/// Unnormalized integral of det^alpha over the state space, assembled from
/// the sphere-surface / radial-moment / simplex-moment building blocks. An
/// independent route: dividing by volume_lebesgue must reproduce
/// expected_det_alpha.
double det_alpha_integral_lebesgue(Field field, int n, double alpha);

}  // namespace statevol
