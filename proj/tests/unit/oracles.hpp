#pragma once

// Test-side reference formulas, independent of the library's recurrences.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace test_oracles {

// Rodrigues oracle: P_L^M(x) = (1-x^2)^{M/2} d^{L+M}/dx^{L+M} (x^2-1)^L / (2^L L!),
// from the expanded polynomial in long double.
inline long double rodrigues(int L, int M, long double x) {
  std::vector<long double> poly(2 * L + 1, 0.0L);
  long double binom = 1.0L;
  for (int k = 0; k <= L; ++k) {
    poly[2 * k] = binom * ((L - k) % 2 == 0 ? 1.0L : -1.0L);
    binom = binom * (L - k) / (k + 1);
  }
  for (int d = 0; d < L + M; ++d) {
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) poly[i] = poly[i + 1] * (i + 1);
    poly.back() = 0.0L;
  }
  long double value = 0.0L;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * x + *it;
  long double norm = 1.0L;
  for (int i = 1; i <= L; ++i) norm *= 2.0L * i;
  return value / norm * std::pow(1.0L - x * x, M / 2.0L);
}

inline long double factorial_ld(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Y_l^m(theta, 0) with the (-1)^m phase, from the Rodrigues oracle.
inline long double harmonic(int l, int m, long double theta) {
  const int am = std::abs(m);
  long double y = std::sqrt((2 * l + 1) / (4 * std::numbers::pi_v<long double>) * factorial_ld(l - am) / factorial_ld(l + am)) *
                  rodrigues(l, am, std::cos(theta));
  if (m >= 0 && am % 2 == 1) y = -y;
  return y;
}

// d|Y_l^m|^2/dtheta by a 4th-order central difference in long double.
inline long double harmonic_norm_dtheta(int l, int m, long double theta) {
  const long double h = 1e-4L;
  auto f = [&](long double t) { return harmonic(l, m, t) * harmonic(l, m, t); };
  return (8 * (f(theta + h) - f(theta - h)) - (f(theta + 2 * h) - f(theta - 2 * h))) / (12 * h);
}

}  // namespace test_oracles
