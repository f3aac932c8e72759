#include <doctest.h>

#include "atomfield/angular/angular_index.hpp"
#include "atomfield/angular/clebsch_gordan.hpp"
#include "atomfield/angular/legendre.hpp"
#include "atomfield/angular/rational.hpp"
#include "atomfield/angular/sqrt_rational.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

using namespace atomfield;
using namespace atomfield::angular;
using test_oracles::harmonic;
using test_oracles::rodrigues;

namespace {

// Clebsch-Gordan oracle: build |J M> by lowering from the top state of each J,
// fixing each top state by orthogonality to the higher multiplets and the
// Condon-Shortley choice <j1 j1, j2 J-j1 | J J> > 0. Indices are twice the values.
using Ket = std::map<std::pair<int, int>, double>;

double ladder(int tj, int tm) { return std::sqrt((tj + tm) * (tj - tm + 2) / 4.0); }

Ket lower(const Ket& ket, int tj1, int tj2) {
  Ket out;
  for (const auto& [m, c] : ket) {
    if (m.first > -tj1) out[{m.first - 2, m.second}] += c * ladder(tj1, m.first);
    if (m.second > -tj2) out[{m.first, m.second - 2}] += c * ladder(tj2, m.second);
  }
  return out;
}

double dot(const Ket& a, const Ket& b) {
  double s = 0.0;
  for (const auto& [m, c] : a) {
    if (auto it = b.find(m); it != b.end()) s += c * it->second;
  }
  return s;
}

std::map<std::pair<int, int>, Ket> lowering_oracle(int tj1, int tj2) {
  std::map<std::pair<int, int>, Ket> states;  // (twice J, twice M) -> ket
  for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) {
    Ket top;
    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
      const int tm2 = tJ - tm1;
      if (std::abs(tm2) <= tj2) top[{tm1, tm2}] = tm1 == tj1 ? 1.0 : 0.3 / (1 + std::abs(tm1));
    }
    for (int tK = tj1 + tj2; tK > tJ; tK -= 2) {
      const Ket& higher = states.at({tK, tJ});
      const double p = dot(top, higher);
      for (const auto& [m, c] : higher) top[m] -= p * c;
    }
    const double norm = std::sqrt(dot(top, top));
    const double sign = top.count({tj1, tJ - tj1}) && top.at({tj1, tJ - tj1}) < 0 ? -1.0 : 1.0;
    for (auto& [m, c] : top) c *= sign / norm;
    Ket current = top;
    for (int tM = tJ; tM >= -tJ; tM -= 2) {
      states[{tJ, tM}] = current;
      if (tM > -tJ) {
        current = lower(current, tj1, tj2);
        const double f = ladder(tJ, tM);
        for (auto& [m, c] : current) c /= f;
      }
    }
  }
  return states;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("half integers") {
  CHECK(HalfInteger::parse("3/2").twice() == 3);
  CHECK(HalfInteger::parse("-1/2").twice() == -1);
  CHECK(HalfInteger::parse("1.5").twice() == 3);
  CHECK(HalfInteger::parse("2").twice() == 4);
  CHECK_THROWS_AS(HalfInteger::parse("1/3"), std::invalid_argument);
  CHECK(HalfInteger::from_twice(5).str() == "5/2");
  CHECK(AngularIndex::from_twice(3, 1).valid());
  CHECK_FALSE(AngularIndex::from_twice(3, 2).valid());
  CHECK_FALSE(AngularIndex::integral(1, 2).valid());
}

TEST_CASE("sqrt rationals and surd sums") {
  const SqrtRational a(1, Rational(2, 3));
  const SqrtRational b(-1, Rational(3, 2));
  CHECK((a * b).require_rational() == -1);
  CHECK(SqrtRational::from_rational(Rational(-3, 4)).radicand() == Rational(9, 16));
  CHECK_THROWS_AS(SqrtRational(1, Rational(-1)), std::invalid_argument);
  SurdSum s;
  s += SqrtRational(1, 2);
  s += SqrtRational(1, 8);
  CHECK(s.surd_count() == 1);
  CHECK(s.to_double() == doctest::Approx(3 * std::sqrt(2.0)).epsilon(1e-15));
  s -= SqrtRational(1, 18);
  CHECK(s.is_zero());
  CHECK_FALSE(SurdSum(SqrtRational(1, 2)).to_rational().has_value());
}

TEST_CASE("Legendre functions match the Rodrigues formula") {
  double worst = 0.0;
  for (int L = 0; L <= 10; ++L) {
    for (int M = 0; M <= L; ++M) {
      for (double x : {-0.97, -0.5, -0.1, 0.0, 0.3, 0.77, 0.999}) {
        const double expected = static_cast<double>(rodrigues(L, M, x));
        const double scale = std::max(1.0, std::abs(expected));
        worst = std::max(worst, std::abs(assoc_legendre(L, M, x) - expected) / scale);
      }
    }
  }
  CHECK(worst < 1e-12);
  CHECK(legendre(3, std::cos(std::numbers::pi / 3)) == doctest::Approx(-7.0 / 16).epsilon(1e-15));
  CHECK(assoc_legendre(1, 1, 0.6) == doctest::Approx(0.8).epsilon(1e-15));  // no Condon-Shortley phase
  CHECK(assoc_legendre_signed(2, -1, 0.4) == doctest::Approx(-assoc_legendre(2, 1, 0.4) / 6).epsilon(1e-15));
  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.1), std::domain_error);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), std::domain_error);
}

TEST_CASE("theta column keeps relative precision at small angles") {
  const double t = 1e-9;
  const auto column = assoc_legendre_theta_column(7, 1, t);
  for (int L = 1; L <= 7; ++L) CHECK(column[L] == doctest::Approx(L * (L + 1) / 2.0 * t).epsilon(1e-12));
}

TEST_CASE("exact sin forms reproduce P_L^M") {
  double worst = 0.0;
  for (int L = 0; L <= 9; ++L) {
    for (int M = 0; M <= L; ++M) {
      const SinForm form = assoc_legendre_sin_form(L, M);
      for (double t : {0.01, 0.4, 1.2, 1.9, 3.1}) {
        const long double value = std::pow(std::sin(static_cast<long double>(t)), M) * form.reduced(t);
        const long double expected = rodrigues(L, M, std::cos(static_cast<long double>(t)));
        worst = std::max(worst, static_cast<double>(std::abs(value - expected) / std::max(1.0L, std::abs(expected))));
      }
    }
  }
  CHECK(worst < 1e-13);
  SinForm sum = assoc_legendre_sin_form(3, 1);
  SinForm minus = assoc_legendre_sin_form(3, 1);
  minus *= Rational(-1);
  sum += minus;
  CHECK(sum.is_zero());
}

TEST_CASE("Clebsch-Gordan spot values") {
  CHECK(clebsch_gordan(1, 0, 1, 0, 2, 0) == SqrtRational(1, Rational(2, 3)));
  CHECK(clebsch_gordan(1, 0, 1, 0, 1, 0).is_zero());
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) == SqrtRational(1, Rational(1, 3)));
  const auto half = AngularIndex::from_twice(1, 1);
  const auto half_down = AngularIndex::from_twice(1, -1);
  CHECK(clebsch_gordan(half, half_down, AngularIndex::integral(0, 0)) == SqrtRational(1, Rational(1, 2)));
  CHECK(clebsch_gordan(AngularIndex::integral(1, 0), half, AngularIndex::from_twice(1, 1)) ==
        SqrtRational(-1, Rational(1, 3)));
  // Selection rules never throw.
  CHECK(clebsch_gordan(1, 1, 1, 1, 1, 1).is_zero());
  CHECK(clebsch_gordan(1, 0, 1, 0, 5, 0).is_zero());
}

TEST_CASE("Clebsch-Gordan coefficients match the lowering-operator construction") {
  double worst = 0.0;
  int count = 0;
  for (int tj1 = 0; tj1 <= 4; ++tj1) {
    for (int tj2 = 0; tj2 <= 4; ++tj2) {
      for (const auto& [key, ket] : lowering_oracle(tj1, tj2)) {
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
          const int tm2 = key.second - tm1;
          if (std::abs(tm2) > tj2) continue;
          const double expected = ket.count({tm1, tm2}) ? ket.at({tm1, tm2}) : 0.0;
          const double got = clebsch_gordan(AngularIndex::from_twice(tj1, tm1), AngularIndex::from_twice(tj2, tm2),
                                            AngularIndex::from_twice(key.first, key.second))
                                 .to_double();
          worst = std::max(worst, std::abs(got - expected));
          ++count;
        }
      }
    }
  }
  CHECK(count > 500);
  CHECK(worst < 1e-13);
}

TEST_CASE("harmonic products match Gauss-Legendre projection") {
  using boost::math::quadrature::gauss;
  double worst = 0.0;
  for (int l1 = 0; l1 <= 3; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      for (int l2 = 0; l2 <= 3; ++l2) {
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto product = product_expand(l1, m1, l2, m2);
          const int M = m1 + m2;
          for (int L = std::abs(M); L <= l1 + l2; ++L) {
            // <Y_L^M | Y1 Y2> with the phi integral done analytically (2 pi).
            const double projection = 2 * std::numbers::pi * gauss<double, 30>::integrate(
                                                                  [&](double x) {
                                                                    const long double t = std::acos(x);
                                                                    return static_cast<double>(harmonic(l1, m1, t) * harmonic(l2, m2, t) *
                                                                                               harmonic(L, M, t));
                                                                  },
                                                                  -1.0, 1.0);
            worst = std::max(worst, std::abs(product.value(L, M) - projection));
            if (auto it = product.coefficients.find({L, M}); it == product.coefficients.end()) CHECK(std::abs(projection) < 1e-12);
          }
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}
