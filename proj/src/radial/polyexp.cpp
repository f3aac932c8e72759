#include "atomfield/radial/polyexp.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace atomfield::radial {

namespace {

bool term_order(const PolyExpTerm& a, const PolyExpTerm& b) {
  if (a.decay != b.decay) return a.decay < b.decay;
  return a.power < b.power;
}

// Sum_{i=0}^{k} k!/i! r^i / lambda^{k-i+1}, the tail block of the r^k e^{-lambda r} antiderivative.
std::vector<PolyExpTerm> exponential_block(const Rational& c, int k, const Rational& lambda) {
  std::vector<PolyExpTerm> block;
  block.reserve(static_cast<std::size_t>(k) + 1);
  Rational falling = 1;  // k!/i!, built from i = k downward
  for (int i = k; i >= 0; --i) {
    block.push_back({c * falling / power(lambda, k - i + 1), i, lambda});
    falling *= i;
  }
  return block;
}

}  // namespace

PolyExp::PolyExp(std::vector<PolyExpTerm> terms) : terms_(std::move(terms)) { normalize(); }

PolyExp PolyExp::monomial(const Rational& c, int power, const Rational& decay) {
  return PolyExp({{c, power, decay}});
}

void PolyExp::normalize() {
  for (const auto& term : terms_) {
    if (term.decay < 0) throw std::invalid_argument("PolyExp decay rate must be non-negative");
  }
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<PolyExpTerm> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().power == term.power && merged.back().decay == term.decay) {
      merged.back().coefficient += term.coefficient;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const PolyExpTerm& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

int PolyExp::min_power() const {
  int result = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.power < result) result = t.power;
    first = false;
  }
  return result;
}

int PolyExp::max_power() const {
  int result = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.power > result) result = t.power;
    first = false;
  }
  return result;
}

Rational PolyExp::max_decay() const {
  Rational result = 0;
  for (const auto& t : terms_) result = std::max(result, t.decay);
  return result;
}

PolyExp PolyExp::operator-() const {
  PolyExp result = *this;
  for (auto& t : result.terms_) t.coefficient = -t.coefficient;
  return result;
}

PolyExp operator+(const PolyExp& a, const PolyExp& b) {
  std::vector<PolyExpTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PolyExp(std::move(terms));
}

PolyExp operator-(const PolyExp& a, const PolyExp& b) { return a + (-b); }

PolyExp operator*(const PolyExp& a, const PolyExp& b) {
  std::vector<PolyExpTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({x.coefficient * y.coefficient, x.power + y.power, x.decay + y.decay});
    }
  }
  return PolyExp(std::move(terms));
}

PolyExp operator*(const Rational& s, const PolyExp& f) {
  if (s == 0) return {};
  PolyExp result = f;
  for (auto& t : result.terms_) t.coefficient *= s;
  return result;
}

PolyExp PolyExp::times_power(int shift) const {
  PolyExp result = *this;
  for (auto& t : result.terms_) t.power += shift;
  return result;
}

PolyExp PolyExp::derivative() const {
  std::vector<PolyExpTerm> terms;
  terms.reserve(2 * terms_.size());
  for (const auto& t : terms_) {
    if (t.power != 0) terms.push_back({t.coefficient * t.power, t.power - 1, t.decay});
    if (t.decay != 0) terms.push_back({-t.coefficient * t.decay, t.power, t.decay});
  }
  return PolyExp(std::move(terms));
}

long double PolyExp::operator()(long double r) const {
  long double total = 0.0L;
  for (const auto& t : terms_) {
    long double value = to_long_double(t.coefficient) * std::pow(r, static_cast<long double>(t.power));
    if (t.decay != 0) value *= std::exp(-to_long_double(t.decay) * r);
    total += value;
  }
  return total;
}

std::vector<Rational> PolyExp::laurent_series(int extra_orders, int& first_power) const {
  first_power = min_power();
  std::vector<Rational> series(static_cast<std::size_t>(extra_orders) + 1, Rational(0));
  for (const auto& t : terms_) {
    // c r^k sum_n (-lambda)^n / n! r^n
    Rational factor = t.coefficient;
    for (int n = 0;; ++n) {
      const int index = t.power + n - first_power;
      if (index > extra_orders) break;
      series[static_cast<std::size_t>(index)] += factor;
      if (t.decay == 0) break;
      factor *= -t.decay / (n + 1);
    }
  }
  return series;
}

std::string PolyExp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(t.coefficient) << ")";
    if (t.power != 0) out << "*r^" << t.power;
    if (t.decay != 0) out << "*exp(-" << to_string(t.decay) << "*r)";
  }
  return out.str();
}

PolyExp integrate_lower(const PolyExp& f) {
  std::vector<PolyExpTerm> terms;
  for (const auto& t : f.terms()) {
    if (t.power < 0) {
      throw RadialIntegralError(RadialIntegralError::Kind::convergence,
                                "integral from 0 diverges: term with r^" + std::to_string(t.power));
    }
    if (t.decay == 0) {
      terms.push_back({t.coefficient / (t.power + 1), t.power + 1, 0});
      continue;
    }
    // k!/lambda^{k+1} - e^{-lambda r} sum_i ...
    terms.push_back({t.coefficient * Rational(factorial(t.power)) / power(t.decay, t.power + 1), 0, 0});
    for (auto& block : exponential_block(t.coefficient, t.power, t.decay)) {
      block.coefficient = -block.coefficient;
      terms.push_back(std::move(block));
    }
  }
  return PolyExp(std::move(terms));
}

PolyExp integrate_upper(const PolyExp& f) {
  std::vector<PolyExpTerm> terms;
  for (const auto& t : f.terms()) {
    if (t.decay == 0) {
      if (t.power >= -1) {
        throw RadialIntegralError(RadialIntegralError::Kind::divergence,
                                  "integral to infinity diverges: undamped term r^" + std::to_string(t.power));
      }
      terms.push_back({-t.coefficient / (t.power + 1), t.power + 1, 0});
      continue;
    }
    if (t.power < 0) {
      throw RadialIntegralError(RadialIntegralError::Kind::no_closed_form,
                                "integral of r^" + std::to_string(t.power) +
                                    " exp(-lambda r) is an exponential integral, not a PolyExp");
    }
    for (auto& block : exponential_block(t.coefficient, t.power, t.decay)) terms.push_back(std::move(block));
  }
  return PolyExp(std::move(terms));
}

Rational integrate_all(const PolyExp& f) {
  Rational total = 0;
  for (const auto& t : f.terms()) {
    if (t.decay == 0 || t.power < 0) {
      throw RadialIntegralError(RadialIntegralError::Kind::divergence,
                                "integral over [0, inf) needs every term damped with k >= 0");
    }
    total += t.coefficient * Rational(factorial(t.power)) / power(t.decay, t.power + 1);
  }
  return total;
}

PolyExp vector_potential_profile(const PolyExp& current, int L) {
  if (L < 1) throw std::invalid_argument("multipole order must be >= 1");
  if (current.is_zero()) return {};
  const PolyExp inner = integrate_lower(current.times_power(L + 2)).times_power(-(L + 1));
  const PolyExp outer = integrate_upper(current.times_power(1 - L)).times_power(L);
  return Rational(4, 2 * L + 1) * (inner + outer);
}

namespace {

long double integer_power(long double x, int k) {
  long double base = k < 0 ? 1.0L / x : x;
  unsigned n = static_cast<unsigned>(k < 0 ? -k : k);
  long double result = 1.0L;
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

}  // namespace

void RadialEvaluator::Poly::add(int power, const Rational& c) {
  if (hi.empty()) first_power = power;
  const std::size_t index = static_cast<std::size_t>(power - first_power);
  if (hi.size() <= index) {
    hi.resize(index + 1, 0.0L);
    lo.resize(index + 1, 0.0L);
  }
  hi[index] = to_long_double(c);
  lo[index] = to_long_double(c - Rational(hi[index]));
}

long double RadialEvaluator::Poly::operator()(long double x, long double& magnitude) const {
  // Compensated Horner: the running error of every product and sum, plus the
  // low parts of the coefficients, is carried in `c`.
  if (hi.empty()) {
    magnitude = 0.0L;
    return 0.0L;
  }
  const std::size_t n = hi.size() - 1;
  long double s = hi[n];
  long double c = lo[n];
  long double m = std::abs(hi[n]);
  for (std::size_t k = n; k-- > 0;) {
    const long double p = s * x;
    const long double p_err = std::fma(s, x, -p);
    const long double t = p + hi[k];
    const long double b = t - p;
    const long double t_err = (p - (t - b)) + (hi[k] - b);
    s = t;
    c = c * x + (p_err + t_err + lo[k]);
    m = m * x + std::abs(hi[k]);
  }
  const long double scale = integer_power(x, first_power);
  magnitude = m * scale;
  return (s + c) * scale;
}

RadialEvaluator::RadialEvaluator(const PolyExp& f) : exact_(f) {
  // Blocks with different decays can cancel near the origin (poles, or a
  // constant against an exponential block); those need the series form.
  bool has_pole = false;
  for (const auto& t : f.terms()) {
    if (groups_.empty() || groups_.back().decay != t.decay) groups_.push_back({t.decay, to_long_double(t.decay), {}});
    groups_.back().poly.add(t.power, t.coefficient);
    has_pole = has_pole || t.power < 0;
  }
  const Rational lambda_max = f.max_decay();
  if (!(has_pole || groups_.size() > 1) || lambda_max == 0) return;

  switch_radius_ = 1.0 / to_double(lambda_max);
  const int extra = 48 + (f.max_power() - f.min_power());
  int first = 0;
  const std::vector<Rational> series = f.laurent_series(extra, first);
  // Cancelled poles leave exact zeros at the front.
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i] != 0 || !series_.hi.empty()) series_.add(first + static_cast<int>(i), series[i]);
  }
}

double RadialEvaluator::operator()(double r) const {
  // Within one decay group the compensated sum keeps full accuracy through a
  // cancellation of about 1e18; across groups each exponential carries a
  // rounding error of 1e-19, so a cancellation beyond 1e4 goes to exact_value.
  constexpr long double group_limit = 1e18L;
  constexpr long double cross_limit = 1e4L;
  const long double x = r;
  if (r < switch_radius_) {
    long double magnitude = 0.0L;
    const long double value = series_(x, magnitude);
    if (magnitude <= group_limit * std::abs(value)) return static_cast<double>(value);
    return exact_value(r);
  }
  long double total = 0.0L;
  long double magnitude = 0.0L;
  for (const auto& g : groups_) {
    long double group_magnitude = 0.0L;
    const long double value = g.poly(x, group_magnitude);
    if (group_magnitude > group_limit * std::abs(value)) return exact_value(r);
    const long double factor = g.decay == 0 ? 1.0L : std::exp(-g.decay_value * x);
    total += value * factor;
    magnitude += std::abs(value * factor);
  }
  if (magnitude <= cross_limit * std::abs(total)) return static_cast<double>(total);
  return exact_value(r);
}

namespace {

// sum_i c_i r^k_i e^{-lambda_i r} at precision Float, one exponential per decay
// group (terms are sorted by decay). `magnitude` receives sum |term|.
template <class Float>
Float sum_terms(const std::vector<PolyExpTerm>& terms, double r, Float& magnitude) {
  const Float x(r);
  auto to_float = [](const Rational& q) {
    return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
  };
  Float total = 0;
  magnitude = 0;
  std::size_t i = 0;
  while (i < terms.size()) {
    const Rational& decay = terms[i].decay;
    const Float factor = decay == 0 ? Float(1) : Float(exp(-x * to_float(decay)));
    for (; i < terms.size() && terms[i].decay == decay; ++i) {
      const Float value = to_float(terms[i].coefficient) * pow(x, terms[i].power) * factor;
      total += value;
      magnitude += abs(value);
    }
  }
  return total;
}

}  // namespace

double RadialEvaluator::exact_value(double r) const {
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_bin_float_50;
  cpp_bin_float_50 magnitude;
  const cpp_bin_float_50 total = sum_terms(exact_.terms(), r, magnitude);
  // 50 digits leave at least 20 after a cancellation of up to 30.
  if (magnitude <= 1e30 * abs(total)) return static_cast<double>(total);
  cpp_bin_float_100 wide_magnitude;
  return static_cast<double>(sum_terms(exact_.terms(), r, wide_magnitude));
}

}  // namespace atomfield::radial
