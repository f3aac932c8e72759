#include "atomfield/radial/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace atomfield::radial {

QuadratureResult quad_oracle(const std::function<double(double)>& f, double a, double b,
                             double relative_tolerance, unsigned max_depth) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  if (!std::isfinite(a)) throw std::invalid_argument("quad_oracle needs a finite lower bound");
  if (!(b >= a)) throw std::invalid_argument("quad_oracle needs b >= a");

  QuadratureResult result;
  double l1 = 0.0;
  if (std::isinf(b)) {
    auto mapped = [&](double t) {
      if (t >= 1.0) return 0.0;
      const double one_minus = 1.0 - t;
      return f(a + t / one_minus) / (one_minus * one_minus);
    };
    result.value = Rule::integrate(mapped, 0.0, 1.0, max_depth, relative_tolerance, &result.error_estimate, &l1);
  } else {
    result.value = Rule::integrate(f, a, b, max_depth, relative_tolerance, &result.error_estimate, &l1);
  }
  const double scale = std::max(std::abs(result.value), std::numeric_limits<double>::min());
  result.converged = std::isfinite(result.value) &&
                     (result.error_estimate <= relative_tolerance * scale ||
                      result.error_estimate <= relative_tolerance * l1 * 1e-6);
  return result;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

}  // namespace atomfield::radial
