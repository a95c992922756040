#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "statevol/field.hpp"
#include "statevol/quaternion.hpp"

namespace statevol {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;
using QuaternionMatrix = DenseMatrix<Quaternion>;

// Matrices stay small throughout (dimension about n <= 12); stack-bounded
// temporaries keep the samplers allocation-free.
inline constexpr int kMaxDim = 16;

template <class S>
using SmallMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;
template <class S>
using SmallVector = Eigen::Matrix<S, Eigen::Dynamic, 1, 0, kMaxDim, 1>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Field field = Field::real;
  static constexpr int components = 1;
  static double conjugate(double v) { return v; }
  static double real_part(double v) { return v; }
  static double abs2(double v) { return v * v; }
  static double from_components(const double* c) { return c[0]; }
  static void to_components(double v, double* c) { c[0] = v; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr Field field = Field::complex;
  static constexpr int components = 2;
  static std::complex<double> conjugate(std::complex<double> v) { return std::conj(v); }
  static double real_part(std::complex<double> v) { return v.real(); }
  static double abs2(std::complex<double> v) { return std::norm(v); }
  static std::complex<double> from_components(const double* c) { return {c[0], c[1]}; }
  static void to_components(std::complex<double> v, double* c) {
    c[0] = v.real();
    c[1] = v.imag();
  }
};

template <>
struct ScalarTraits<Quaternion> {
  static constexpr Field field = Field::quaternion;
  static constexpr int components = 4;
  static Quaternion conjugate(const Quaternion& v) { return conj(v); }
  static double real_part(const Quaternion& v) { return v.w; }
  static double abs2(const Quaternion& v) { return statevol::abs2(v); }
  static Quaternion from_components(const double* c) { return {c[0], c[1], c[2], c[3]}; }
  static void to_components(const Quaternion& v, double* c) {
    c[0] = v.w;
    c[1] = v.x;
    c[2] = v.y;
    c[3] = v.z;
  }
};

template <class S>
inline constexpr Field field_of = ScalarTraits<S>::field;

/// A self-adjoint, positive-definite, trace-one matrix (a faithful state).
/// Samplers construct it directly; `checked_state` validates foreign input.
template <class S>
struct SelfAdjointState {
  DenseMatrix<S> mat;
  int dim() const { return static_cast<int>(mat.rows()); }
};

using AnyState = std::variant<SelfAdjointState<double>, SelfAdjointState<std::complex<double>>,
                              SelfAdjointState<Quaternion>>;

template <class S>
double trace_real(const DenseMatrix<S>& a) {
  double t = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += ScalarTraits<S>::real_part(a(i, i));
  return t;
}

template <class S>
bool is_self_adjoint(const DenseMatrix<S>& a, double tol = 0.0) {
  if (a.rows() != a.cols()) return false;
  using T = ScalarTraits<S>;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      S diff = a(i, j) - T::conjugate(a(j, i));
      if (std::sqrt(T::abs2(diff)) > tol) return false;
    }
  return true;
}

namespace detail {

template <class S>
SmallMatrix<S> small_inverse(const SmallMatrix<S>& m) {
  // adjugate-based closed forms up to 4x4, partial-pivot elimination above
  switch (m.rows()) {
    case 1: {
      SmallMatrix<S> r(1, 1);
      r(0, 0) = S(1.0) / m(0, 0);
      return r;
    }
    case 2: {
      Eigen::Matrix<S, 2, 2> f = m;
      return SmallMatrix<S>(f.inverse());
    }
    case 3: {
      Eigen::Matrix<S, 3, 3> f = m;
      return SmallMatrix<S>(f.inverse());
    }
    case 4: {
      Eigen::Matrix<S, 4, 4> f = m;
      return SmallMatrix<S>(f.inverse());
    }
    default:
      return SmallMatrix<S>(m.partialPivLu().inverse());
  }
}

/// Leading principal minors through the last-column expansion
/// det(A_k) = a_kk det(A_{k-1}) - <x, T x>, T = det(A_{k-1}) inv(A_{k-1}).
/// In early-exit mode stops as soon as a minor fails to be positive.
/// Throws when an intermediate minor is exactly singular (recursion needs
/// its inverse), naming the failing block.
template <class S, class M>
bool leading_minors_impl(const M& a, std::vector<double>& out, bool early_exit_nonpositive) {
  using T = ScalarTraits<S>;
  const Eigen::Index n = a.rows();
  if (n == 0 || n != a.cols()) throw std::invalid_argument("leading minors need a square matrix");
  if (n > kMaxDim) throw std::invalid_argument("matrix dimension beyond supported cap");
  out.clear();
  out.reserve(static_cast<size_t>(n));
  out.push_back(T::real_part(a(0, 0)));
  if (early_exit_nonpositive && !(out[0] > 0.0)) return false;
  for (Eigen::Index k = 1; k < n; ++k) {
    double det_prev = out[static_cast<size_t>(k - 1)];
    if (det_prev == 0.0)
      throw std::domain_error("leading minor " + std::to_string(k) +
                              " is singular; the determinant recursion cannot continue");
    SmallMatrix<S> blk = a.topLeftCorner(k, k);
    SmallMatrix<S> t = small_inverse(blk);
    SmallVector<S> x = a.block(0, k, k, 1);
    S quad{};
    for (Eigen::Index i = 0; i < k; ++i) {
      S row{};
      for (Eigen::Index j = 0; j < k; ++j) row += t(i, j) * x(j);
      quad += T::conjugate(x(i)) * row;
    }
    double d = T::real_part(a(k, k)) * det_prev - det_prev * T::real_part(quad);
    out.push_back(d);
    if (early_exit_nonpositive && !(d > 0.0)) return false;
  }
  return true;
}

}  // namespace detail

/// Sequence det(A_1), ..., det(A_n) of leading principal minors.
template <class S>
std::vector<double> leading_minor_determinants(const DenseMatrix<S>& a) {
  std::vector<double> out;
  detail::leading_minors_impl<S>(a, out, false);
  return out;
}

std::vector<double> leading_minor_determinants(const QuaternionMatrix& a);

/// Positive definiteness by positivity of every leading principal minor.
template <class S>
bool is_positive_definite(const DenseMatrix<S>& a) {
  std::vector<double> out;
  return detail::leading_minors_impl<S>(a, out, true);
}

bool is_positive_definite(const QuaternionMatrix& a);

/// det(A + B) for A the constant matrix with every entry x and B = diag(d):
/// prod_i d_i + x * sum_i prod_{j != i} d_j.
double det_diag_plus_constant(double x, std::span<const double> diag);

Eigen::VectorXd eigenvalues_self_adjoint(const RealMatrix& a);
Eigen::VectorXd eigenvalues_self_adjoint(const ComplexMatrix& a);
Eigen::VectorXd eigenvalues_self_adjoint(const QuaternionMatrix& a);

RealMatrix sqrt_psd(const RealMatrix& a);
ComplexMatrix sqrt_psd(const ComplexMatrix& a);
QuaternionMatrix sqrt_psd(const QuaternionMatrix& a);

/// Symplectic embedding of a quaternionic matrix into M(2n, C): the entry
/// q = alpha + beta j becomes the 2x2 block [[alpha, beta], [-conj(beta),
/// conj(alpha)]]. Hermitian inputs embed to Hermitian matrices and leading
/// k x k quaternionic blocks map to leading 2k x 2k complex blocks.
ComplexMatrix embed_complex(const QuaternionMatrix& a);

/// Inverse of `embed_complex` on matrices with the embedded block structure.
QuaternionMatrix unembed_complex(const ComplexMatrix& b);

/// Moore determinant of a Hermitian quaternionic matrix, realized as the
/// nonnegative square root of the determinant of the complex embedding.
double qdet(const QuaternionMatrix& a);

/// Validates self-adjointness (1e-12), trace one (1e-12) and positive
/// definiteness; returns the state with the matrix exactly symmetrized.
template <class S>
SelfAdjointState<S> checked_state(DenseMatrix<S> m) {
  using T = ScalarTraits<S>;
  if (!is_self_adjoint<S>(m, 1e-12)) throw std::domain_error("state matrix is not self-adjoint");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) m(j, i) = T::conjugate(m(i, j));
    m(i, i) = S(T::real_part(m(i, i)));
  }
  if (std::abs(trace_real<S>(m) - 1.0) > 1e-12) throw std::domain_error("state matrix must have trace one");
  if (!is_positive_definite(m)) throw std::domain_error("state matrix is not positive definite");
  return SelfAdjointState<S>{std::move(m)};
}

template <class F>
decltype(auto) dispatch_field(Field f, F&& fn) {
  switch (f) {
    case Field::real: return fn(double{});
    case Field::complex: return fn(std::complex<double>{});
    case Field::quaternion: return fn(Quaternion{});
  }
  throw std::logic_error("unreachable");
}

}  // namespace statevol
