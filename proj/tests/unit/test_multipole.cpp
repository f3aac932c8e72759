#include <doctest.h>

#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/multipole/current_series.hpp"
#include "atomfield/radial/hydrogen.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <string>

using namespace atomfield;
using namespace atomfield::multipole;
using radial::PolyExp;
using test_oracles::harmonic;
using test_oracles::harmonic_norm_dtheta;
using test_oracles::rodrigues;

namespace {

HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }

std::map<int, Rational> alphas(std::initializer_list<std::pair<int, Rational>> list) { return {list.begin(), list.end()}; }

// alpha_L = pi (2L+1) / (2 L (L+1)) int_{-1}^{1} f(x) P_L^1(x) dx with
// f = m |Y_l^m|^2 / sin(theta); f P_L^1 is a polynomial in x.
double projected_alpha(int l, int m, int L) {
  using boost::math::quadrature::gauss;
  const double integral = gauss<double, 30>::integrate(
      [&](double x) {
        const long double t = std::acos(static_cast<long double>(x));
        const long double y = harmonic(l, m, t);
        return static_cast<double>(m * y * y / std::sin(t) * rodrigues(L, 1, x));
      },
      -1.0, 1.0);
  return std::numbers::pi * (2 * L + 1) / (2.0 * L * (L + 1)) * integral;
}

double sum_series(const MultipoleSeries& s, double r, double theta) {
  double sum = 0.0;
  for (const auto& [L, profile] : s.entries) sum += evaluate_profile(profile, r) * static_cast<double>(rodrigues(L, 1, std::cos(theta)));
  return sum;
}

}  // namespace

TEST_CASE("coefficient tables, printed values") {
  CHECK(total_coefficients(half(1), half(1)).alphas == alphas({{1, 1}}));
  CHECK(total_coefficients(half(3), half(3)).alphas == alphas({{1, Rational(6, 5)}, {3, Rational(-1, 5)}}));
  CHECK(total_coefficients(half(7), half(5)).alphas ==
        alphas({{1, Rational(20, 21)}, {3, Rational(10, 33)}, {5, Rational(-92, 273)}, {7, Rational(35, 429)}}));
  CHECK(orbital_coefficients(1, 1).alphas == alphas({{1, Rational(3, 8)}}));
  CHECK(orbital_coefficients(2, 0).alphas.empty());
  for (int l = 1; l <= 5; ++l) {
    for (int m = 1; m <= l; ++m) CHECK(orbital_coefficients(l, m).alphas.at(1) == Rational(3 * m, 8));
  }
  CHECK_THROWS_AS(orbital_coefficients(2, 3), std::domain_error);
  CHECK_THROWS_AS(total_coefficients(half(3), half(5)), std::domain_error);
}

TEST_CASE("orbital tables match Gauss-Legendre projection of m|Y|^2/sin") {
  double worst = 0.0;
  for (int l = 1; l <= 5; ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto table = orbital_coefficients(l, m);
      for (int L = 1; L <= 2 * l + 1; ++L) {
        const double expected = projected_alpha(l, m, L);
        const auto it = table.alphas.find(L);
        const double got = it == table.alphas.end() ? 0.0 : to_double(it->second);
        worst = std::max(worst, std::abs(got - expected));
      }
      if (m != 0) CHECK(table.max_L() == 2 * l - 1);
    }
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("total tables: l independence, symmetry and stretched-state shape") {
  for (int tj = 1; tj <= 9; tj += 2) {
    for (int tm = -tj; tm <= tj; tm += 2) {
      const auto table = total_coefficients(half(tj), half(tm));
      CHECK(total_coefficients_for_l((tj + 1) / 2, half(tj), half(tm)).alphas == table.alphas);
      CHECK(total_coefficients_for_l((tj - 1) / 2, half(tj), half(tm)).alphas == table.alphas);
      auto negated = total_coefficients(half(tj), half(-tm)).alphas;
      for (auto& [L, a] : negated) a = -a;
      CHECK(negated == table.alphas);
      CHECK(table.max_L() == tj);
    }
    // j = m_j: sum_L alpha_L P_L^1 is c sin^{2j}.
    const auto top = total_coefficients(half(tj), half(tj));
    double first = 0.0;
    for (double t : {0.4, 0.9, 1.5, 2.2, 2.8}) {
      long double sum = 0.0L;
      for (const auto& [L, a] : top.alphas) sum += to_long_double(a) * rodrigues(L, 1, std::cos(static_cast<long double>(t)));
      const double ratio = static_cast<double>(sum / std::pow(std::sin(static_cast<long double>(t)), tj));
      if (first == 0.0) first = ratio;
      CHECK(ratio == doctest::Approx(first).epsilon(1e-12));
    }
  }
  // The reduced upper form divides by l + m + 1, which vanishes at m_j = -j.
  CHECK_THROWS_AS(total_coefficients_for_l(1, half(3), half(-3), true), std::domain_error);
  CHECK(total_coefficients_for_l(1, half(3), half(1), true).alphas == total_coefficients(half(3), half(1)).alphas);
}

TEST_CASE("quantum state invariants name the violated rule") {
  CHECK_NOTHROW(QuantumState::ls(2, -2, half(-1), 3));
  CHECK_NOTHROW(QuantumState::coupled(2, half(3), half(3), 3));
  const auto message = [](auto&& make) -> std::string {
    try {
      make();
    } catch (const InvalidStateError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message([] { QuantumState::coupled(2, half(3), half(5)); }).find("|m_j| <= j") != std::string::npos);
  CHECK(message([] { QuantumState::coupled(2, half(7), half(1)); }).find("j = l +- 1/2") != std::string::npos);
  CHECK(message([] { QuantumState::ls(2, 3, half(1)); }).find("|m_l| <= l") != std::string::npos);
  CHECK(message([] { QuantumState::ls(1, 0, half(3)); }).find("m_s") != std::string::npos);
  CHECK(message([] { QuantumState::ls(2, 0, half(1), 2); }).find("l <= n-1") != std::string::npos);
  CHECK(message([] { QuantumState::coupled(1, half(1), half(2)); }).find("half-integ") != std::string::npos);
}

TEST_CASE("current series, worked example") {
  const PolyExp rho = radial::hydrogen_radial(3, 2).density();
  const auto s = current_series(QuantumState::ls(2, 1, half(1), 3), rho, CurrentPart::orbital);
  const Rational decay(2, 3);
  CHECK(s.analytic(1) == PolyExp::monomial(Rational(-2, 32805), 3, decay));
  CHECK(s.analytic(3) == PolyExp::monomial(Rational(-4, 98415), 3, decay));
  CHECK(current_series(QuantumState::ls(2, 0, half(1), 3), rho, CurrentPart::orbital).empty());

  // |3,2,3/2,3/2>: 4/(5 3^10) (15 - r) r^3 e^{-2r/3} (-6/5 P_1^1 + 1/5 P_3^1)
  const auto t = current_series(QuantumState::coupled(2, half(3), half(3), 3), rho, CurrentPart::total);
  const PolyExp radial = Rational(4, 5 * 59049) * (PolyExp::monomial(15, 3, decay) - PolyExp::monomial(1, 4, decay));
  CHECK(t.analytic(1) == Rational(-6, 5) * radial);
  CHECK(t.analytic(3) == Rational(1, 5) * radial);
}

TEST_CASE("LS currents match the wavefunction formulas") {
  for (int l = 1; l <= 3; ++l) {
    const PolyExp rho = radial::hydrogen_radial(4, l).density();
    const radial::RadialEvaluator value(rho);
    const radial::RadialEvaluator slope(rho.derivative());
    for (int m = -l; m <= l; ++m) {
      for (int tms : {-1, 1}) {
        const QuantumState state = QuantumState::ls(l, m, half(tms), 4);
        const auto orbital = current_series(state, rho, CurrentPart::orbital);
        const auto spin = current_series(state, rho, CurrentPart::spin);
        const SpinExpansion expansion = spin_coefficients(l, m, half(tms));
        CHECK(expansion.entries.rbegin()->first == 2 * l + 1);
        for (double r : {0.7, 3.0, 9.0}) {
          for (double th : {0.5, 1.2, 2.0}) {
            const long double y = harmonic(l, m, th);
            const double orbital_expected =
                static_cast<double>(std::numbers::pi * (-2.0 * value(r) / r) * m * y * y / std::sin(th));
            const double spin_expected = static_cast<double>(
                std::numbers::pi * tms *
                (std::sin(th) * slope(r) * y * y + std::cos(th) * (value(r) / r) * harmonic_norm_dtheta(l, m, th)));
            const double scale = std::abs(value(r) / r) + std::abs(slope(r));
            CHECK(std::abs(sum_series(orbital, r, th) - orbital_expected) <= 1e-12 * scale);
            CHECK(std::abs(sum_series(spin, r, th) - spin_expected) <= 1e-12 * scale);
          }
        }
      }
    }
  }
}

TEST_CASE("series evaluator agrees with the plain sum and keeps precision near the poles") {
  const PolyExp rho = radial::hydrogen_radial(4, 3).density();
  const auto s = current_series(QuantumState::coupled(3, half(7), half(7), 4), rho, CurrentPart::total);
  const SeriesEvaluator eval(s);
  for (double r : {0.5, 4.0, 12.0}) {
    for (double t : {0.6, 1.4, 2.5}) CHECK(eval(r, t) == doctest::Approx(sum_series(s, r, t)).epsilon(1e-12));
    // Stretched j = 7/2 current ~ sin^7: ratio to sin^7 is the same at the pole and the equator.
    const double ratio_pole = eval(r, 1e-3) / std::pow(std::sin(1e-3), 7);
    const double ratio_mid = eval(r, 1.0) / std::pow(std::sin(1.0), 7);
    CHECK(ratio_pole == doctest::Approx(ratio_mid).epsilon(1e-12));
  }
}

TEST_CASE("vector potential series") {
  const PolyExp rho = radial::hydrogen_radial(3, 2).density();
  const auto j = current_series(QuantumState::ls(2, 1, half(1), 3), rho, CurrentPart::orbital);
  const auto a = vector_potential_series(j);
  CHECK(a.quantity == Quantity::vector_potential);
  CHECK(a.analytic(1) == radial::vector_potential_profile(j.analytic(1), 1));
  CHECK_THROWS_AS(vector_potential_series(a), std::invalid_argument);
}
