#include <doctest.h>

#include "atomfield/radial/hydrogen.hpp"
#include "atomfield/radial/polyexp.hpp"
#include "atomfield/radial/quadrature.hpp"
#include "atomfield/radial/sampled_profile.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace atomfield;
using namespace atomfield::radial;

namespace {

// 150 digits: A_7 near r = 1e-6 cancels by more than 100 digits.
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<500>>;

// Direct 150-digit evaluation of a PolyExp, independent of RadialEvaluator.
double big_value(const PolyExp& f, double r) {
  Big sum = 0;
  const Big x = r;
  for (const auto& t : f.terms()) {
    Big term = Big(t.coefficient) * pow(x, t.power);
    if (t.decay != 0) term *= exp(-Big(t.decay) * x);
    sum += term;
  }
  return static_cast<double>(sum);
}

double tanh_sinh_integral(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, a, b);
}

double exp_sinh_integral(const std::function<double(double)>& f, double a) {
  boost::math::quadrature::exp_sinh<double> rule;
  return rule.integrate([&](double x) { return f(x); }, a, std::numeric_limits<double>::infinity());
}

const Rational two_thirds(2, 3);

}  // namespace

TEST_CASE("PolyExp normal form and calculus") {
  const PolyExp f = PolyExp::monomial(3, 2, two_thirds) + PolyExp::monomial(-3, 2, two_thirds) + PolyExp::constant(5);
  CHECK(f.terms().size() == 1);
  CHECK(f.str() == "(5)");
  const PolyExp g = PolyExp::monomial(1, 3, two_thirds);
  const PolyExp dg = g.derivative();
  CHECK(dg == PolyExp::monomial(3, 2, two_thirds) - PolyExp::monomial(two_thirds, 3, two_thirds));
  CHECK((g * g).terms().front().decay == Rational(4, 3));
  CHECK(g.times_power(-3) == PolyExp::monomial(1, 0, two_thirds));
  CHECK_THROWS_AS(PolyExp::monomial(1, 0, Rational(-1)), std::invalid_argument);
}

TEST_CASE("closed-form antiderivatives, spot values") {
  // int_0^inf r^4 e^{-2r/3} dr = 4! (3/2)^5
  CHECK(integrate_all(PolyExp::monomial(1, 4, two_thirds)) == Rational(729, 4));
  // int_r^inf c e^{-lambda r'} dr' = (c/lambda) e^{-lambda r}
  CHECK(integrate_upper(PolyExp::monomial(5, 0, two_thirds)) == PolyExp::monomial(Rational(15, 2), 0, two_thirds));
  // int_r^inf r'^-2 dr' = 1/r
  CHECK(integrate_upper(PolyExp::monomial(1, -2)) == PolyExp::monomial(1, -1));
  // int_0^1 r^3 e^{-2r/3} dr against tanh-sinh
  const PolyExp lower = integrate_lower(PolyExp::monomial(1, 3, two_thirds));
  const double expected = tanh_sinh_integral([](double r) { return r * r * r * std::exp(-2 * r / 3); }, 0.0, 1.0);
  CHECK(std::abs(big_value(lower, 1.0) - expected) / expected < 1e-10);
}

TEST_CASE("antiderivatives match independent quadrature") {
  const PolyExp f = PolyExp::monomial(Rational(1, 7), 5, Rational(1, 2)) - PolyExp::monomial(2, 2, Rational(1, 2)) +
                    PolyExp::monomial(Rational(3, 5), 0, Rational(3, 2));
  const PolyExp lower = integrate_lower(f);
  const PolyExp upper = integrate_upper(f);
  const auto fv = [&](double r) { return big_value(f, r); };
  for (double r : {0.3, 1.0, 4.0, 11.0, 25.0}) {
    const double lo = tanh_sinh_integral(fv, 0.0, r);
    const double hi = exp_sinh_integral(fv, r);
    CHECK(std::abs(big_value(lower, r) - lo) <= 1e-10 * std::abs(lo));
    CHECK(std::abs(big_value(upper, r) - hi) <= 1e-10 * std::abs(hi));
  }
  CHECK(lower.derivative() == f);
  CHECK(upper.derivative() == -f);
}

TEST_CASE("integrability errors") {
  const auto kind_of = [](auto&& call) {
    try {
      call();
    } catch (const RadialIntegralError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of([] { integrate_lower(PolyExp::monomial(1, -1)); }) == static_cast<int>(RadialIntegralError::Kind::convergence));
  CHECK(kind_of([] { integrate_upper(PolyExp::constant(1)); }) == static_cast<int>(RadialIntegralError::Kind::divergence));
  CHECK(kind_of([] { integrate_upper(PolyExp::monomial(1, -1)); }) == static_cast<int>(RadialIntegralError::Kind::divergence));
  CHECK(kind_of([] { integrate_upper(PolyExp::monomial(1, -1, 1)); }) ==
        static_cast<int>(RadialIntegralError::Kind::no_closed_form));
  CHECK(kind_of([] { integrate_all(PolyExp::monomial(1, 2)); }) == static_cast<int>(RadialIntegralError::Kind::divergence));
}

TEST_CASE("vector potential profile of a worked-example current") {
  // j_1 of |3,2,1> orbital: -2/32805 r^3 e^{-2r/3}. With j in mu_B/(pi a0^4) and A in
  // mu0 mu_B/(4 pi a0^2), A_1 = (4/3)[r^-2 int_0^r j r'^3 + r int_r^inf j r'^0].
  const PolyExp j = PolyExp::monomial(Rational(-2, 32805), 3, two_thirds);
  const PolyExp a = vector_potential_profile(j, 1);
  const auto jv = [&](double r) { return big_value(j, r); };
  for (double r : {0.5, 2.0, 9.0, 30.0}) {
    const double inner = tanh_sinh_integral([&](double x) { return jv(x) * x * x * x; }, 0.0, r);
    const double outer = exp_sinh_integral([&](double x) { return jv(x); }, r);
    const double expected = 4.0 * (inner / (r * r) + r * outer) / 3.0;
    CHECK(std::abs(big_value(a, r) - expected) <= 1e-10 * std::abs(expected));
  }
  CHECK(vector_potential_profile(PolyExp(), 3).is_zero());
  CHECK_THROWS_AS(vector_potential_profile(j, 0), std::invalid_argument);
}

TEST_CASE("evaluator stays accurate through cancellation near the origin") {
  // A_7 of a current ~ r^6 e^{-r/2}: the constant and exponential blocks cancel to O(r^7) at small r.
  const PolyExp j = PolyExp::monomial(Rational(1, 1000), 6, Rational(1, 2));
  const PolyExp a = vector_potential_profile(j, 7);
  const RadialEvaluator eval(a);
  for (double r : {1e-6, 1e-3, 0.05, 0.5, 2.0, 7.0, 20.0, 80.0}) {
    const double expected = big_value(a, r);
    CHECK(std::abs(eval(r) - expected) <= 1e-13 * std::abs(expected));
  }
}

TEST_CASE("hydrogen radial functions") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) CHECK(integrate_all(hydrogen_radial(n, l).density().times_power(2)) == 1);
  }
  const auto r10 = hydrogen_radial(1, 0);
  CHECK(r10(0.7) == doctest::Approx(2 * std::exp(-0.7)).epsilon(1e-14));
  const auto r21 = hydrogen_radial(2, 1);
  CHECK(r21(1.3) == doctest::Approx(1.3 * std::exp(-0.65) / (2 * std::sqrt(6.0))).epsilon(1e-14));
  const auto r32 = hydrogen_radial(3, 2);
  CHECK(r32(2.0) == doctest::Approx(4.0 / (81 * std::sqrt(30.0)) * 4.0 * std::exp(-2.0 / 3)).epsilon(1e-14));
  CHECK_THROWS_AS(hydrogen_radial(2, 2), std::domain_error);
}

TEST_CASE("adaptive quadrature oracle") {
  const auto e = quad_oracle([](double x) { return std::exp(-x); }, 0.0, std::numeric_limits<double>::infinity());
  CHECK(e.converged);
  CHECK(std::abs(e.value - 1.0) < 1e-12);
  const auto s = quad_oracle([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::abs(s.value - 2.0) < 1e-12);
  // int_0^inf r^4 e^{-2r/3} dr = 182.25
  const auto m = quad_oracle([](double r) { return std::pow(r, 4) * std::exp(-2 * r / 3); }, 0.0,
                             std::numeric_limits<double>::infinity());
  CHECK(std::abs(m.value - 182.25) / 182.25 < 1e-10);
  // Degree-59 polynomials are exact for the 30-point rule.
  const double gl = gauss_legendre([](double x) { return std::pow(x, 58); }, -1.0, 1.0);
  CHECK(gl == doctest::Approx(2.0 / 59).epsilon(1e-13));
}

TEST_CASE("sampled profiles") {
  std::vector<double> r;
  std::vector<double> v;
  for (int i = 0; i <= 200; ++i) {
    r.push_back(0.05 + 0.1 * i);
    v.push_back(r.back() * r.back() * std::exp(-r.back()));
  }
  const SampledProfile p(r, v);
  CHECK(p(3.0) == doctest::Approx(9 * std::exp(-3.0)).epsilon(1e-5));
  CHECK(p.derivative(3.0) == doctest::Approx((6 - 9) * std::exp(-3.0)).epsilon(1e-3));
  const double exact = tanh_sinh_integral([](double x) { return x * x * std::exp(-x); }, 1.0, 4.0);
  CHECK(p.integral(1.0, 4.0) == doctest::Approx(exact).epsilon(1e-6));
  CHECK_THROWS_AS(p(100.0), std::domain_error);
  CHECK_THROWS_AS(SampledProfile({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SampledProfile({1, 3, 2, 4}, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_NOTHROW(require_square_integrable(p));

  std::vector<double> bad(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) bad[i] = 1.0 / (r[i] * r[i]);  // R^2 ~ r^-2: R^2 r^2 = 1
  CHECK_THROWS_AS(require_square_integrable(SampledProfile(r, bad)), RadialIntegralError);
}

TEST_CASE("sampled vector potential approaches the analytic one") {
  const PolyExp j = PolyExp::monomial(Rational(-2, 32805), 3, two_thirds);
  std::vector<double> r;
  std::vector<double> v;
  for (int i = 0; i <= 4000; ++i) {
    r.push_back(1e-3 * std::pow(1e5, i / 4000.0));
    v.push_back(big_value(j, r.back()));
  }
  const auto result = sampled_vector_potential(SampledProfile(r, v), 1);
  const PolyExp a = vector_potential_profile(j, 1);
  for (double x : {0.5, 3.0, 10.0, 40.0}) {
    CHECK(std::abs(result.profile(x) - big_value(a, x)) <= 1e-5 * std::abs(big_value(a, x)));
  }
  CHECK(result.error_estimate < 1e-4);
}
