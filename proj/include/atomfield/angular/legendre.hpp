#pragma once

#include "atomfield/angular/rational.hpp"

#include <vector>

namespace atomfield::angular {

// Associated Legendre functions without the Condon-Shortley phase:
//   P_L^M(x) = (1 - x^2)^{M/2} d^M/dx^M P_L(x),
// so P_1^1(cos t) = sin t. The (-1)^M phase lives in the spherical harmonics.

/// P_L^M(x) for 0 <= M <= L, |x| <= 1, by upward recurrence in L from P_M^M.
/// Throws std::domain_error outside that range.
double assoc_legendre(int L, int M, double x);

/// P_L^M for -L <= M <= L, using P_L^{-M} = (-1)^M (L-M)!/(L+M)! P_L^M.
double assoc_legendre_signed(int L, int M, double x);

/// P_L(x) = P_L^0(x).
double legendre(int L, double x);

/// P_M^M(x), ..., P_{max_L}^M(x) indexed by L (entries L < M are zero).
std::vector<double> assoc_legendre_column(int max_L, int M, double x);

/// The same column at x = cos(theta), taking sqrt(1 - x^2) as |sin(theta)|
/// so small polar angles keep full relative precision.
std::vector<double> assoc_legendre_theta_column(int max_L, int M, double theta);

/// Exact form of P_L^M(cos t) = sin^M(t) (even(s) + cos(t) odd(s)) with
/// s = sin^2(t). Coefficients are in ascending powers of s. Summing these
/// forms before evaluation keeps high powers of sin(t) exact near the poles.
struct SinForm {
  std::vector<Rational> even;
  std::vector<Rational> odd;

  SinForm& operator+=(const SinForm& other);
  SinForm& operator*=(const Rational& factor);
  bool is_zero() const;
  /// Value of even(s) + cos(t) odd(s), without the sin^M(t) factor.
  long double reduced(long double theta) const;
};

/// P_L^M as a SinForm, for 0 <= M <= L. Throws std::domain_error otherwise.
SinForm assoc_legendre_sin_form(int L, int M);

}  // namespace atomfield::angular
