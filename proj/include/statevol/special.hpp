#pragma once

#include "statevol/exact.hpp"
#include "statevol/field.hpp"

namespace statevol {

BigInt factorial(int n);
BigInt double_factorial(int n);  // n!! with (-1)!! = 0!! = 1

/// Gamma for positive real argument (domain error otherwise).
double gamma_fn(double z);
double log_gamma(double z);

/// Exact Gamma(two_z / 2) for positive integer two_z. Even arguments give a
/// rational, odd ones a rational times sqrt(pi).
ExactValue gamma_exact(int two_z);

/// Surface of the unit sphere in R^n, exact form n*pi^(n/2)/Gamma(n/2+1).
ExactValue sphere_surface_exact(int n);
double sphere_surface(int n);

/// Radial moment of a unit ball shell: integral over (0,1) of x^a (1-x^2)^b.
double radial_moment(double a, double b);
ExactValue radial_moment_exact(int a, int two_b);  // integer a, half-integer b

/// Integral over the probability simplex with n vertices of (prod_i x_i)^k
/// with respect to the (n-1)-dimensional Lebesgue measure.
double simplex_moment(int n, double k);
ExactValue simplex_moment_exact(int n, int two_k);

/// Integral of (rho - <x,Tx>)^k over the solid ellipsoid <x,Tx> < rho, where
/// m is the real dimension of the integration domain (m = d*n for n scalar
/// coordinates over a field of dimension d) and det_t the scalar-field
/// determinant of T. The det_t power is 1/2, 1 or 2 for real, complex and
/// quaternionic T.
double ellipsoid_integral(Field field, int m, double det_t, double rho, double k);

}  // namespace statevol
