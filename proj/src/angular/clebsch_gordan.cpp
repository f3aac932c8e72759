#include "atomfield/angular/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace atomfield::angular {

SqrtRational clebsch_gordan(AngularIndex first, AngularIndex second, AngularIndex total) {
  if (!first.valid() || !second.valid() || !total.valid()) return {};

  // Everything below in doubled units.
  const int j1 = first.l.twice(), m1 = first.m.twice();
  const int j2 = second.l.twice(), m2 = second.m.twice();
  const int J = total.l.twice(), M = total.m.twice();

  if (m1 + m2 != M) return {};
  if (J < std::abs(j1 - j2) || J > j1 + j2) return {};
  if ((j1 + j2 + J) % 2 != 0) return {};

  // Integer arguments of the Racah formula.
  const int a = (j1 + j2 - J) / 2;
  const int b = (j1 - j2 + J) / 2;
  const int c = (-j1 + j2 + J) / 2;
  const int d = (j1 + j2 + J) / 2 + 1;
  const int j1pm = (j1 + m1) / 2, j1mm = (j1 - m1) / 2;
  const int j2pm = (j2 + m2) / 2, j2mm = (j2 - m2) / 2;
  const int Jpm = (J + M) / 2, Jmm = (J - M) / 2;
  const int s1 = (J - j2 + m1) / 2;  // k offset terms
  const int s2 = (J - j1 - m2) / 2;

  const int k_min = std::max({0, -s1, -s2});
  const int k_max = std::min({a, j1mm, j2pm});

  Rational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    const BigInt den = factorial(k) * factorial(a - k) * factorial(j1mm - k) * factorial(j2pm - k) *
                       factorial(s1 + k) * factorial(s2 + k);
    const Rational term(BigInt(1), den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum == 0) return {};

  Rational radicand = Rational(BigInt(J + 1) * factorial(a) * factorial(b) * factorial(c), factorial(d));
  radicand *= Rational(factorial(j1pm) * factorial(j1mm) * factorial(j2pm) * factorial(j2mm) *
                       factorial(Jpm) * factorial(Jmm));
  radicand *= sum * sum;
  return SqrtRational(sum > 0 ? 1 : -1, radicand);
}

SqrtRational clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M) {
  return clebsch_gordan(AngularIndex::integral(l1, m1), AngularIndex::integral(l2, m2),
                        AngularIndex::integral(L, M));
}

double HarmonicProduct::value(int L, int M) const {
  auto it = coefficients.find({L, M});
  if (it == coefficients.end()) return 0.0;
  return it->second.to_double() / std::sqrt(std::numbers::pi);
}

HarmonicProduct product_expand(int l1, int m1, int l2, int m2) {
  HarmonicProduct product;
  if (l1 < 0 || l2 < 0 || std::abs(m1) > l1 || std::abs(m2) > l2) return product;
  const int M = m1 + m2;
  for (int L = std::abs(l1 - l2); L <= l1 + l2; ++L) {
    if (std::abs(M) > L) continue;
    const SqrtRational parity = clebsch_gordan(l1, 0, l2, 0, L, 0);
    if (parity.is_zero()) continue;
    const SqrtRational coupling = clebsch_gordan(l1, m1, l2, m2, L, M);
    if (coupling.is_zero()) continue;
    const SqrtRational norm(1, Rational((2 * l1 + 1) * (2 * l2 + 1), 4 * (2 * L + 1)));
    product.coefficients.emplace(std::make_pair(L, M), norm * parity * coupling);
  }
  return product;
}

}  // namespace atomfield::angular
