#include "atomfield/angular/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace atomfield::angular {

namespace {

void check_domain(int L, int M, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("Legendre argument " + std::to_string(x) + " outside [-1, 1]");
  }
  if (L < 0 || M < 0 || M > L) {
    throw std::domain_error("Legendre order requires 0 <= M <= L (got L=" + std::to_string(L) +
                            ", M=" + std::to_string(M) + ")");
  }
}

std::vector<double> column_from(int max_L, int M, double x, double s) {
  std::vector<double> column(static_cast<std::size_t>(max_L) + 1, 0.0);

  // P_M^M = (2M-1)!! (1-x^2)^{M/2}
  double pmm = 1.0;
  for (int i = 1; i <= M; ++i) pmm *= (2.0 * i - 1.0) * s;
  column[M] = pmm;
  if (max_L == M) return column;

  column[M + 1] = x * (2.0 * M + 1.0) * pmm;
  // (L-M) P_L^M = (2L-1) x P_{L-1}^M - (L+M-1) P_{L-2}^M
  for (int L = M + 2; L <= max_L; ++L) {
    column[L] = ((2.0 * L - 1.0) * x * column[L - 1] - (L + M - 1.0) * column[L - 2]) / (L - M);
  }
  return column;
}

}  // namespace

std::vector<double> assoc_legendre_column(int max_L, int M, double x) {
  check_domain(max_L, M, x);
  return column_from(max_L, M, x, std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x))));
}

std::vector<double> assoc_legendre_theta_column(int max_L, int M, double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("Legendre angle is not finite");
  check_domain(max_L, M, 0.0);
  return column_from(max_L, M, std::cos(theta), std::abs(std::sin(theta)));
}

double assoc_legendre(int L, int M, double x) {
  check_domain(L, M, x);
  return assoc_legendre_column(L, M, x)[L];
}

double assoc_legendre_signed(int L, int M, double x) {
  if (M >= 0) return assoc_legendre(L, M, x);
  const int k = -M;
  check_domain(L, k, x);
  double ratio = 1.0;  // (L-k)!/(L+k)!
  for (int i = L - k + 1; i <= L + k; ++i) ratio /= i;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * assoc_legendre(L, k, x);
}

double legendre(int L, double x) { return assoc_legendre(L, 0, x); }

namespace {

void add_into(std::vector<Rational>& target, const std::vector<Rational>& source, const Rational& factor) {
  if (target.size() < source.size()) target.resize(source.size(), Rational(0));
  for (std::size_t i = 0; i < source.size(); ++i) target[i] += factor * source[i];
}

void trim(std::vector<Rational>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

long double horner(const std::vector<Rational>& poly, long double s) {
  long double value = 0.0L;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * s + to_long_double(*it);
  return value;
}

}  // namespace

SinForm& SinForm::operator+=(const SinForm& other) {
  add_into(even, other.even, 1);
  add_into(odd, other.odd, 1);
  trim(even);
  trim(odd);
  return *this;
}

SinForm& SinForm::operator*=(const Rational& factor) {
  for (auto& c : even) c *= factor;
  for (auto& c : odd) c *= factor;
  trim(even);
  trim(odd);
  return *this;
}

bool SinForm::is_zero() const { return even.empty() && odd.empty(); }

long double SinForm::reduced(long double theta) const {
  const long double sine = std::sin(theta);
  const long double s = sine * sine;
  long double value = horner(even, s);
  if (!odd.empty()) value += std::cos(theta) * horner(odd, s);
  return value;
}

SinForm assoc_legendre_sin_form(int L, int M) {
  check_domain(L, M, 0.0);
  SinForm form;
  // P_L(x) = 2^-L sum_k (-1)^k C(L,k) C(2L-2k,L) x^(L-2k); differentiate M times,
  // then write x^(2j) = (1-s)^j and x^(2j+1) = x (1-s)^j.
  auto binomial = [](int n, int k) { return Rational(factorial(n) / (factorial(k) * factorial(n - k))); };
  for (int k = 0; 2 * k <= L; ++k) {
    const int n = L - 2 * k;
    if (n < M) break;
    Rational c = binomial(L, k) * binomial(2 * L - 2 * k, L) / power(Rational(2), L);
    if (k % 2 == 1) c = -c;
    c *= Rational(factorial(n) / factorial(n - M));
    const int p = n - M;
    const int j = p / 2;
    std::vector<Rational> expansion(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) expansion[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1 : -1) * binomial(j, i);
    add_into(p % 2 == 0 ? form.even : form.odd, expansion, c);
  }
  trim(form.even);
  trim(form.odd);
  return form;
}

}  // namespace atomfield::angular
