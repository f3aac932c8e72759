#include "atomfield/radial/hydrogen.hpp"

#include <cmath>
#include <string>

namespace atomfield::radial {

namespace {

BigInt binomial(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  return factorial(top) / (factorial(bottom) * factorial(top - bottom));
}

}  // namespace

PolyExp HydrogenRadial::density() const {
  return normalization.radicand() * (shape * shape);
}

double HydrogenRadial::operator()(double r) const {
  return normalization.to_double() * static_cast<double>(shape(r));
}

HydrogenRadial hydrogen_radial(int n, int l) {
  if (n < 1 || l < 0 || l >= n) {
    throw std::domain_error("hydrogenic state needs n >= 1 and 0 <= l < n (got n=" + std::to_string(n) +
                            ", l=" + std::to_string(l) + ")");
  }
  // L^{alpha}_p(x) = sum_i (-1)^i C(p+alpha, p-i) x^i / i!,  x = 2r/n
  const int p = n - l - 1;
  const int alpha = 2 * l + 1;
  const Rational decay(1, n);
  std::vector<PolyExpTerm> terms;
  for (int i = 0; i <= p; ++i) {
    Rational c = Rational(binomial(p + alpha, p - i)) * power(Rational(2, n), i) / Rational(factorial(i));
    if (i % 2 == 1) c = -c;
    terms.push_back({c, l + i, decay});
  }

  HydrogenRadial radial;
  radial.n = n;
  radial.l = l;
  radial.shape = PolyExp(std::move(terms));
  const Rational norm_integral = integrate_all((radial.shape * radial.shape).times_power(2));
  radial.normalization = angular::SqrtRational(1, Rational(1) / norm_integral);
  return radial;
}

}  // namespace atomfield::radial
