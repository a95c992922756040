#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace statevol {

/// Counter-based random stream (Philox 4x32-10). A (seed, stream_id) pair
/// identifies the sequence exactly, and distinct stream ids give
/// non-overlapping streams, so parallel runs stay reproducible.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();
  double uniform01();      // [0, 1), 53 bits
  double uniform_open();   // (0, 1)
  double uniform_sym();    // [-1/2, 1/2)
  double exponential();    // rate 1
  double gaussian();       // standard normal, Box-Muller

  /// Marsaglia-Tsang gamma variate for any shape > 0 (unit scale).
  double gamma_variate(double shape);
  double beta_variate(double a, double b);

  /// Fills `out` with a symmetric Dirichlet(alpha, ..., alpha) draw.
  void dirichlet(double alpha, std::span<double> out);

  /// Uniform direction on the unit sphere of R^dim.
  void unit_sphere(std::span<double> out);

 private:
  void refill();

  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;
  double cached_gauss_ = 0.0;
  bool have_cached_gauss_ = false;
};

}  // namespace statevol
