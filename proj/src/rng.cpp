#include "statevol/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace statevol {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x, std::uint32_t k0, std::uint32_t k1) {
  std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * x[0];
  std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * x[2];
  std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
  std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
  std::array<std::uint32_t, 4> y{hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
  x = y;
}

std::array<std::uint32_t, 4> philox4x32_10(std::uint64_t counter, std::uint64_t stream,
                                           std::uint64_t seed) {
  std::array<std::uint32_t, 4> x{static_cast<std::uint32_t>(counter),
                                 static_cast<std::uint32_t>(counter >> 32),
                                 static_cast<std::uint32_t>(stream),
                                 static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t k0 = static_cast<std::uint32_t>(seed);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
  for (int round = 0; round < 10; ++round) {
    philox_round(x, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return x;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {}

void RngStream::refill() {
  block_ = philox4x32_10(counter_++, stream_id_, seed_);
  block_pos_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (block_pos_ > 2) refill();
  std::uint64_t lo = block_[static_cast<size_t>(block_pos_)];
  std::uint64_t hi = block_[static_cast<size_t>(block_pos_ + 1)];
  block_pos_ += 2;
  return lo | (hi << 32);
}

double RngStream::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform_sym() { return uniform01() - 0.5; }

double RngStream::exponential() { return -std::log(uniform_open()); }

double RngStream::gaussian() {
  if (have_cached_gauss_) {
    have_cached_gauss_ = false;
    return cached_gauss_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform_open()));
  double phi = 2.0 * std::numbers::pi * uniform01();
  cached_gauss_ = r * std::sin(phi);
  have_cached_gauss_ = true;
  return r * std::cos(phi);
}

double RngStream::gamma_variate(double shape) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_variate requires shape > 0");
  if (shape < 1.0) {
    // boost to shape + 1 and thin with a uniform power
    double g = gamma_variate(shape + 1.0);
    return g * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform_open();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::beta_variate(double a, double b) {
  double ga = gamma_variate(a);
  double gb = gamma_variate(b);
  double s = ga + gb;
  if (s <= 0.0) return 0.5;  // probability-zero guard
  return ga / s;
}

void RngStream::dirichlet(double alpha, std::span<double> out) {
  double total = 0.0;
  for (double& v : out) total += v = gamma_variate(alpha);
  if (total <= 0.0) {
    for (double& v : out) v = 1.0 / static_cast<double>(out.size());
    return;
  }
  for (double& v : out) v /= total;
}

void RngStream::unit_sphere(std::span<double> out) {
  for (;;) {
    double norm2 = 0.0;
    for (double& v : out) {
      v = gaussian();
      norm2 += v * v;
    }
    if (norm2 > 1e-24) {
      double inv = 1.0 / std::sqrt(norm2);
      for (double& v : out) v *= inv;
      return;
    }
  }
}

}  // namespace statevol
