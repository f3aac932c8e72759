#pragma once

#include <functional>

namespace atomfield::radial {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) estimate of int_a^b f(r) dr.
///
/// `b` may be +infinity, in which case the integrand is mapped through
/// r = a + t/(1-t) onto t in [0, 1). Non-convergence within `max_depth`
/// bisections is not an error: the best estimate comes back with
/// `converged == false` and its error bound.
QuadratureResult quad_oracle(const std::function<double(double)>& f, double a, double b,
                             double relative_tolerance = 1e-10, unsigned max_depth = 15);

/// Fixed 30-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 59.
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

}  // namespace atomfield::radial
