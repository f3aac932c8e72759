#include "atomfield/oracle/spinor.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace atomfield::oracle {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pole_limit = 1e-12;
constexpr double fd_step = 1e-4;

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

double norm2(Complex z) { return std::norm(z); }

template <class F>
double five_point(F&& f, double x) {
  const double h = fd_step;
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

void check_pole(double theta) {
  if (std::abs(std::sin(theta)) < pole_limit) {
    throw PoleProximityError("sin(theta) = " + std::to_string(std::sin(theta)) + " too close to a pole");
  }
}

void check_spinor_label(bool upper, int l, int twice_mj) {
  if (l < 0 || (!upper && l < 1)) throw std::domain_error("j = l - 1/2 requires l >= 1");
  const int twice_j = upper ? 2 * l + 1 : 2 * l - 1;
  if (twice_mj % 2 == 0 || std::abs(twice_mj) > twice_j) {
    throw std::domain_error("|m_j| <= j violated (2j = " + std::to_string(twice_j) +
                            ", 2m_j = " + std::to_string(twice_mj) + ")");
  }
}

}  // namespace

double explicit_legendre(int l, int m, double theta) {
  if (l < 0 || m < 0) throw std::domain_error("explicit_legendre needs l, m >= 0");
  if (m > l) return 0.0;
  const long double x = std::cos(static_cast<long double>(theta));
  const long double s = std::abs(std::sin(static_cast<long double>(theta)));
  // P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k,l) x^(l-2k); differentiate m times.
  long double sum = 0.0L;
  for (int k = 0; 2 * k <= l; ++k) {
    const int n = l - 2 * k;
    if (n < m) continue;
    const long double term = binomial(l, k) * binomial(2 * l - 2 * k, l) * factorial(n) / factorial(n - m) *
                             std::pow(x, static_cast<long double>(n - m));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(std::ldexp(sum, -l) * std::pow(s, static_cast<long double>(m)));
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return {0.0, 0.0};
  const int a = std::abs(m);
  const double norm = std::sqrt((2 * l + 1) / (4 * pi) * static_cast<double>(factorial(l - a) / factorial(l + a)));
  const double phase = (a % 2 == 0) ? 1.0 : -1.0;
  const Complex y = phase * norm * explicit_legendre(l, a, theta) * std::polar(1.0, a * phi);
  if (m >= 0) return y;
  return phase * std::conj(y);
}

Complex spherical_harmonic_dtheta(int l, int m, double theta, double phi) {
  // Average of the raising and lowering forms; the m cot(theta) terms cancel.
  const double up = std::sqrt(static_cast<double>((l - m) * (l + m + 1)));
  const double down = std::sqrt(static_cast<double>((l + m) * (l - m + 1)));
  return 0.5 * (up * spherical_harmonic(l, m + 1, theta, phi) * std::polar(1.0, -phi) -
                down * spherical_harmonic(l, m - 1, theta, phi) * std::polar(1.0, phi));
}

double direct_orbital_current(int l, int m, RadialDensity rho, double r, double theta) {
  if (m == 0) return 0.0;
  check_pole(theta);
  const double y2 = norm2(spherical_harmonic(l, m, theta, 0.0));
  return pi * (-2.0 * rho.value / r) * m * y2 / std::sin(theta);
}

double direct_spin_current(int l, int m, int twice_ms, RadialDensity rho, double r, double theta,
                           DerivativeMode mode) {
  if (std::abs(twice_ms) != 1) throw std::domain_error("m_s = +-1/2 violated");
  const double y2 = norm2(spherical_harmonic(l, m, theta, 0.0));
  double dy2 = 0.0;
  if (mode == DerivativeMode::ladder) {
    dy2 = 2.0 * std::real(std::conj(spherical_harmonic(l, m, theta, 0.0)) *
                          spherical_harmonic_dtheta(l, m, theta, 0.0));
  } else {
    dy2 = five_point([&](double t) { return norm2(spherical_harmonic(l, m, t, 0.0)); }, theta);
  }
  return pi * twice_ms * (std::sin(theta) * rho.derivative * y2 + std::cos(theta) * (rho.value / r) * dy2);
}

SpinorAngular spinor_angular(bool upper, int l, int twice_mj, double theta, double phi) {
  check_spinor_label(upper, l, twice_mj);
  const int m = (twice_mj - 1) / 2;
  const double w = 2.0 * l + 1.0;
  const Complex ym = spherical_harmonic(l, m, theta, phi);
  const Complex ym1 = spherical_harmonic(l, m + 1, theta, phi);
  if (upper) return {std::sqrt((l + m + 1) / w) * ym, std::sqrt((l - m) / w) * ym1};
  return {std::sqrt((l - m) / w) * ym, -std::sqrt((l + m + 1) / w) * ym1};
}

SpinDensity spin_density(bool upper, int l, int twice_mj, double theta, double phi) {
  const SpinorAngular psi = spinor_angular(upper, l, twice_mj, theta, phi);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const Complex em = std::polar(1.0, -phi);
  const Complex ep = std::polar(1.0, phi);
  const Complex i(0.0, 1.0);
  auto expect = [&](Complex a11, Complex a12, Complex a21, Complex a22) {
    return std::conj(psi.up) * (a11 * psi.up + a12 * psi.down) + std::conj(psi.down) * (a21 * psi.up + a22 * psi.down);
  };
  const Complex sr = expect(c, s * em, s * ep, -c);
  const Complex st = expect(-s, c * em, c * ep, s);
  const Complex sp = expect(0.0, -i * em, i * ep, 0.0);
  SpinDensity d;
  d.sigma_r = sr.real();
  d.sigma_theta = st.real();
  d.sigma_phi = sp.real();
  d.max_imaginary = std::max({std::abs(sr.imag()), std::abs(st.imag()), std::abs(sp.imag())});
  return d;
}

double ladder_product(int l, int m, double theta, double phi, double* imaginary) {
  const Complex q = std::conj(spherical_harmonic(l, m, theta, phi)) * spherical_harmonic(l, m + 1, theta, phi) *
                    std::polar(1.0, -phi);
  if (imaginary) *imaginary = q.imag();
  return q.real();
}

TotalCurrent direct_total_current(bool upper, int l, int twice_mj, RadialDensity rho, double r, double theta,
                                  double phi) {
  check_spinor_label(upper, l, twice_mj);
  check_pole(theta);
  const int m = (twice_mj - 1) / 2;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double a = l - m;
  const double b = l + m + 1;
  const double ym2 = norm2(spherical_harmonic(l, m, theta, phi));
  const double ym12 = norm2(spherical_harmonic(l, m + 1, theta, phi));
  const double q = ladder_product(l, m, theta, phi);
  const double root = std::sqrt(a * b);

  TotalCurrent out;
  if (upper) {
    const double radial = rho.derivative - 2.0 * l * rho.value / r;
    out.factorized = pi / (2 * l + 1) * radial * (s * (b * ym2 - a * ym12) - 2.0 * c * root * q);
  } else {
    const double radial = rho.derivative + 2.0 * (l + 1) * rho.value / r;
    out.factorized = pi / (2 * l + 1) * radial * (s * (a * ym2 - b * ym12) + 2.0 * c * root * q);
  }

  const SpinorAngular psi = spinor_angular(upper, l, twice_mj, theta, phi);
  out.orbital = pi * (-2.0 * rho.value / (r * s)) * (m * norm2(psi.up) + (m + 1) * norm2(psi.down));

  const SpinDensity sd = spin_density(upper, l, twice_mj, theta, phi);
  const double dsigma_r = five_point([&](double t) { return spin_density(upper, l, twice_mj, t, phi).sigma_r; }, theta);
  // d(r R^2 sigma_theta)/dr = (R^2 + r dR^2/dr) sigma_theta
  out.spin = -pi / r * ((rho.value + r * rho.derivative) * sd.sigma_theta - rho.value * dsigma_r);
  out.chain = out.orbital + out.spin;
  return out;
}

}  // namespace atomfield::oracle
