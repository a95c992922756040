#include "statevol/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace statevol {

namespace {

Eigen::VectorXd eigenvalues_2x2_hermitian(double a, double c, double offdiag_abs2) {
  double mean = 0.5 * (a + c);
  double disc = std::sqrt(0.25 * (a - c) * (a - c) + offdiag_abs2);
  double hi = mean + disc;
  // det/hi avoids the cancellation in mean - disc for near-singular input
  double det = a * c - offdiag_abs2;
  double lo = hi > 0.0 ? det / hi : mean - disc;
  Eigen::VectorXd ev(2);
  ev << lo, hi;
  return ev;
}

template <class M>
Eigen::VectorXd eigenvalues_via_solver(const M& a) {
  Eigen::SelfAdjointEigenSolver<M> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("self-adjoint eigensolver failed to converge");
  return solver.eigenvalues();
}

template <class M>
M sqrt_psd_impl(const M& a) {
  Eigen::SelfAdjointEigenSolver<M> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("self-adjoint eigensolver failed to converge");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-10)
      throw std::domain_error("sqrt_psd: matrix has a negative eigenvalue " + std::to_string(ev(i)));
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  M s = solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
  // symmetrize away the roundoff from the triple product
  M out = 0.5 * (s + M(s.adjoint()));
  return out;
}

}  // namespace

std::vector<double> leading_minor_determinants(const QuaternionMatrix& a) {
  ComplexMatrix b = embed_complex(a);
  std::vector<double> embedded;
  detail::leading_minors_impl<std::complex<double>>(b, embedded, false);
  std::vector<double> out(static_cast<size_t>(a.rows()));
  for (size_t k = 0; k < out.size(); ++k)
    out[k] = std::sqrt(std::max(embedded[2 * k + 1], 0.0));
  return out;
}

bool is_positive_definite(const QuaternionMatrix& a) {
  // A > 0 iff its complex embedding is positive definite; test the full
  // minor chain of the embedding.
  ComplexMatrix b = embed_complex(a);
  std::vector<double> scratch;
  return detail::leading_minors_impl<std::complex<double>>(b, scratch, true);
}

double det_diag_plus_constant(double x, std::span<const double> diag) {
  const size_t n = diag.size();
  double det_b = 1.0;
  for (double d : diag) det_b *= d;
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (size_t j = 0; j < n; ++j)
      if (j != i) p *= diag[j];
    sum += p;
  }
  return det_b + x * sum;
}

Eigen::VectorXd eigenvalues_self_adjoint(const RealMatrix& a) {
  if (a.rows() == 1) return Eigen::VectorXd::Constant(1, a(0, 0));
  if (a.rows() == 2) return eigenvalues_2x2_hermitian(a(0, 0), a(1, 1), a(0, 1) * a(1, 0));
  return eigenvalues_via_solver(a);
}

Eigen::VectorXd eigenvalues_self_adjoint(const ComplexMatrix& a) {
  if (a.rows() == 1) return Eigen::VectorXd::Constant(1, a(0, 0).real());
  if (a.rows() == 2)
    return eigenvalues_2x2_hermitian(a(0, 0).real(), a(1, 1).real(), std::norm(a(0, 1)));
  return eigenvalues_via_solver(a);
}

Eigen::VectorXd eigenvalues_self_adjoint(const QuaternionMatrix& a) {
  // the embedding doubles every eigenvalue; keep one copy of each pair
  Eigen::VectorXd doubled = eigenvalues_self_adjoint(ComplexMatrix(embed_complex(a)));
  Eigen::VectorXd out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) out(i) = 0.5 * (doubled(2 * i) + doubled(2 * i + 1));
  return out;
}

RealMatrix sqrt_psd(const RealMatrix& a) { return sqrt_psd_impl(a); }
ComplexMatrix sqrt_psd(const ComplexMatrix& a) { return sqrt_psd_impl(a); }

QuaternionMatrix sqrt_psd(const QuaternionMatrix& a) {
  // spectral functions commute with the embedding, so the complex square
  // root keeps the embedded block structure
  return unembed_complex(sqrt_psd(ComplexMatrix(embed_complex(a))));
}

ComplexMatrix embed_complex(const QuaternionMatrix& a) {
  const Eigen::Index n = a.rows();
  ComplexMatrix b(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      std::complex<double> alpha = q.alpha(), beta = q.beta();
      b(2 * i, 2 * j) = alpha;
      b(2 * i, 2 * j + 1) = beta;
      b(2 * i + 1, 2 * j) = -std::conj(beta);
      b(2 * i + 1, 2 * j + 1) = std::conj(alpha);
    }
  return b;
}

QuaternionMatrix unembed_complex(const ComplexMatrix& b) {
  if (b.rows() % 2 != 0 || b.rows() != b.cols())
    throw std::invalid_argument("unembed_complex expects a 2n x 2n matrix");
  const Eigen::Index n = b.rows() / 2;
  QuaternionMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = Quaternion::from_pair(b(2 * i, 2 * j), b(2 * i, 2 * j + 1));
  return a;
}

double qdet(const QuaternionMatrix& a) {
  std::complex<double> d = embed_complex(a).determinant();
  return std::sqrt(std::max(d.real(), 0.0));
}

}  // namespace statevol
