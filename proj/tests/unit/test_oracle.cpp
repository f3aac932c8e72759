#include <doctest.h>

#include "atomfield/oracle/spinor.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

using namespace atomfield::oracle;

namespace {

constexpr double pi = std::numbers::pi;

double sphere_integral(const std::function<double(double)>& f) {
  using boost::math::quadrature::gauss;
  return 2 * pi * gauss<double, 30>::integrate([&](double x) { return f(std::acos(x)); }, -1.0, 1.0);
}

}  // namespace

TEST_CASE("spherical harmonics") {
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (double t : {0.3, 1.3, 2.6}) {
        const Complex y = spherical_harmonic(l, m, t, 0.0);
        CHECK(y.real() == doctest::Approx(static_cast<double>(test_oracles::harmonic(l, m, t))).epsilon(1e-13));
        CHECK(std::abs(y.imag()) < 1e-15);
        // d/dtheta from the ladder identities against a finite difference.
        const double fd = (spherical_harmonic(l, m, t + 1e-5, 0.0).real() - spherical_harmonic(l, m, t - 1e-5, 0.0).real()) / 2e-5;
        CHECK(spherical_harmonic_dtheta(l, m, t, 0.0).real() == doctest::Approx(fd).epsilon(1e-8));
      }
      CHECK(sphere_integral([&](double t) { return std::norm(spherical_harmonic(l, m, t, 0.0)); }) ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  const Complex y11 = spherical_harmonic(1, 1, 0.8, 0.5);
  CHECK(y11.real() == doctest::Approx(-std::sqrt(3 / (8 * pi)) * std::sin(0.8) * std::cos(0.5)).epsilon(1e-14));
  CHECK(explicit_legendre(2, 3, 0.4) == 0.0);
}

TEST_CASE("spinors: normalization and spin density") {
  for (int l = 0; l <= 3; ++l) {
    for (bool upper : {true, false}) {
      if (!upper && l == 0) continue;
      const int tj = upper ? 2 * l + 1 : 2 * l - 1;
      for (int tm = -tj; tm <= tj; tm += 2) {
        const double norm = sphere_integral([&](double t) {
          const auto psi = spinor_angular(upper, l, tm, t, 0.0);
          return std::norm(psi.up) + std::norm(psi.down);
        });
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
        const auto sd = spin_density(upper, l, tm, 1.1, 0.7);
        CHECK(std::abs(sd.sigma_phi) < 1e-15);
        CHECK(sd.max_imaginary < 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(spinor_angular(false, 0, 1, 1.0, 0.0), std::domain_error);
}

TEST_CASE("direct currents") {
  const RadialDensity rho{0.4, -0.1};
  // |2,1,1> orbital: pi (-2 rho/r) |Y_1^1|^2 / sin = -(3/4) (rho/r) sin(theta)
  CHECK(direct_orbital_current(1, 1, rho, 2.0, 0.9) == doctest::Approx(-0.75 * 0.2 * std::sin(0.9)).epsilon(1e-14));
  CHECK(direct_orbital_current(2, 0, rho, 2.0, 0.9) == 0.0);
  CHECK_THROWS_AS(direct_orbital_current(1, 1, rho, 1.0, 0.0), PoleProximityError);
  const double ladder = direct_spin_current(2, 1, 1, rho, 1.5, 0.8, DerivativeMode::ladder);
  const double numeric = direct_spin_current(2, 1, 1, rho, 1.5, 0.8, DerivativeMode::finite_difference);
  CHECK(ladder == doctest::Approx(numeric).epsilon(1e-9));
  CHECK_THROWS_AS(direct_spin_current(2, 1, 3, rho, 1.5, 0.8), std::domain_error);
  const auto total = direct_total_current(true, 2, 3, rho, 1.5, 0.8);
  CHECK(total.chain == doctest::Approx(total.factorized).epsilon(1e-8));
  CHECK(total.orbital + total.spin == doctest::Approx(total.chain).epsilon(1e-14));
}
