#pragma once

#include "atomfield/angular/sqrt_rational.hpp"
#include "atomfield/radial/polyexp.hpp"

namespace atomfield::radial {

/// Normalized hydrogenic radial function R_nl = normalization * shape(r),
/// lengths in a0. The shape is the rational polynomial-times-exponential
/// r^l L^{2l+1}_{n-l-1}(2r/n) e^{-r/n}; the normalization is the exact
/// SqrtRational making  int_0^inf R^2 r^2 dr = 1.
struct HydrogenRadial {
  int n = 1;
  int l = 0;
  angular::SqrtRational normalization;
  PolyExp shape;

  /// R_nl^2 with exact rational coefficients.
  PolyExp density() const;
  double operator()(double r) const;
};

/// Throws std::domain_error unless n >= 1 and 0 <= l < n.
HydrogenRadial hydrogen_radial(int n, int l);

}  // namespace atomfield::radial
