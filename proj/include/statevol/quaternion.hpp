#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <ostream>

namespace statevol {

/// Quaternion w + xi + yj + zk over doubles. Arithmetic is the full
/// (non-commutative) quaternion algebra; the complex pair view is
/// q = alpha + beta * j with alpha = w + xi, beta = y + zi.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  explicit Quaternion(double real) : w(real) {}

  static Quaternion from_pair(std::complex<double> alpha, std::complex<double> beta) {
    return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
  }
  std::complex<double> alpha() const { return {w, x}; }
  std::complex<double> beta() const { return {y, z}; }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend Quaternion operator*(double s, Quaternion a) { return a *= s; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
  }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double abs2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double abs(const Quaternion& q) { return std::sqrt(abs2(q)); }
inline double real(const Quaternion& q) { return q.w; }

}  // namespace statevol

namespace Eigen {

// Minimal traits so Eigen::Matrix<statevol::Quaternion, ...> works as dense
// storage. Linear algebra on quaternion matrices goes through the complex
// embedding (see algebra.hpp), never through Eigen kernels.
template <>
struct NumTraits<statevol::Quaternion> {
  using Self = statevol::Quaternion;
  using Real = double;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
  static Real epsilon() { return NumTraits<double>::epsilon(); }
  static Real dummy_precision() { return 1e-12; }
  static int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
