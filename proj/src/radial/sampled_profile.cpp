#include "atomfield/radial/sampled_profile.hpp"

#include "atomfield/radial/polyexp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace atomfield::radial {

SampledProfile::SampledProfile(std::vector<double> radii, std::vector<double> values)
    : radii_(std::move(radii)), values_(std::move(values)) {
  if (radii_.size() != values_.size()) throw std::invalid_argument("radial grid and values differ in length");
  if (radii_.size() < 4) throw std::invalid_argument("sampled radial profile needs at least 4 nodes");
  if (!(radii_.front() > 0.0)) throw std::invalid_argument("sampled radial grid must start at r > 0");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!std::isfinite(radii_[i]) || !std::isfinite(values_[i])) {
      throw std::invalid_argument("non-finite entry in sampled radial profile at row " + std::to_string(i));
    }
    if (i > 0 && !(radii_[i] > radii_[i - 1])) {
      throw std::invalid_argument("sampled radial grid must be strictly increasing (row " + std::to_string(i) + ")");
    }
  }

  // Natural spline: tridiagonal system for the interior second derivatives.
  const std::size_t n = radii_.size();
  second_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = radii_[i] - radii_[i - 1];
    const double h1 = radii_[i + 1] - radii_[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((values_[i + 1] - values_[i]) / h1 - (values_[i] - values_[i - 1]) / h0);
  }
  // Thomas algorithm on rows 1..n-2 (sub-diagonal of row i is h_{i-1}).
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double sub = radii_[i] - radii_[i - 1];
    const double w = sub / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    second_[i] = (rhs[i] - upper[i] * second_[i + 1]) / diag[i];
    if (i == 1) break;
  }
}

std::size_t SampledProfile::segment(double r) const {
  if (radii_.empty() || r < radii_.front() || r > radii_.back()) {
    throw std::domain_error("r = " + std::to_string(r) + " outside the sampled radial grid");
  }
  auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
  std::size_t i = static_cast<std::size_t>(it - radii_.begin());
  if (i == 0) i = 1;
  if (i >= radii_.size()) i = radii_.size() - 1;
  return i - 1;
}

double SampledProfile::operator()(double r) const {
  const std::size_t i = segment(r);
  const double h = radii_[i + 1] - radii_[i];
  const double a = (radii_[i + 1] - r) / h;
  const double b = (r - radii_[i]) / h;
  return a * values_[i] + b * values_[i + 1] +
         ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * h * h / 6.0;
}

double SampledProfile::derivative(double r) const {
  const std::size_t i = segment(r);
  const double h = radii_[i + 1] - radii_[i];
  const double a = (radii_[i + 1] - r) / h;
  const double b = (r - radii_[i]) / h;
  return (values_[i + 1] - values_[i]) / h +
         (-(3.0 * a * a - 1.0) * second_[i] + (3.0 * b * b - 1.0) * second_[i + 1]) * h / 6.0;
}

namespace {

// Integral of the spline piece on [x_i, x_{i+1}] from x_i up to x.
double piece_integral(double x0, double x1, double y0, double y1, double m0, double m1, double x) {
  const double h = x1 - x0;
  const double b = (x - x0) / h;  // 0..1
  const double a = 1.0 - b;
  // int of a*y0 + b*y1 + ((a^3-a) m0 + (b^3-b) m1) h^2/6 over t in [x0, x], dt = h db
  const double int_a = (1.0 - a * a) / 2.0;  // int_0^b a db
  const double int_b = b * b / 2.0;
  const double int_a3 = (1.0 - a * a * a * a) / 4.0;
  const double int_b3 = b * b * b * b / 4.0;
  return h * (y0 * int_a + y1 * int_b + ((int_a3 - int_a) * m0 + (int_b3 - int_b) * m1) * h * h / 6.0);
}

}  // namespace

double SampledProfile::integral(double a, double b) const {
  if (radii_.empty()) return 0.0;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  a = std::max(a, radii_.front());
  b = std::min(b, radii_.back());
  if (b <= a) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < radii_.size(); ++i) {
    const double x0 = radii_[i], x1 = radii_[i + 1];
    if (x1 <= a || x0 >= b) continue;
    const double lo = std::max(a, x0), hi = std::min(b, x1);
    total += piece_integral(x0, x1, values_[i], values_[i + 1], second_[i], second_[i + 1], hi) -
             piece_integral(x0, x1, values_[i], values_[i + 1], second_[i], second_[i + 1], lo);
  }
  return sign * total;
}

std::vector<double> SampledProfile::cumulative_integral() const {
  std::vector<double> out(radii_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < radii_.size(); ++i) {
    out[i + 1] = out[i] + piece_integral(radii_[i], radii_[i + 1], values_[i], values_[i + 1], second_[i],
                                         second_[i + 1], radii_[i + 1]);
  }
  return out;
}

SampledProfile SampledProfile::coarsened() const {
  std::vector<double> r, v;
  for (std::size_t i = 0; i < radii_.size(); i += 2) {
    r.push_back(radii_[i]);
    v.push_back(values_[i]);
  }
  if (r.back() != radii_.back()) {
    r.push_back(radii_.back());
    v.push_back(values_.back());
  }
  return SampledProfile(std::move(r), std::move(v));
}

namespace {

std::vector<double> potential_on_nodes(const SampledProfile& current, int L, const std::vector<double>& nodes) {
  const SampledProfile inner = current.map([L](double r, double j) { return j * std::pow(r, L + 2); });
  const SampledProfile outer = current.map([L](double r, double j) { return j * std::pow(r, 1 - L); });
  const std::vector<double> inner_cum = inner.cumulative_integral();
  const std::vector<double> outer_cum = outer.cumulative_integral();
  const double outer_total = outer_cum.back();
  const double scale = 4.0 / (2.0 * L + 1.0);

  std::vector<double> out;
  out.reserve(nodes.size());
  const auto& grid = current.radii();
  for (double r : nodes) {
    auto it = std::lower_bound(grid.begin(), grid.end(), r);
    const std::size_t k = static_cast<std::size_t>(it - grid.begin());
    const double lower = inner_cum[k];
    const double upper = outer_total - outer_cum[k];
    out.push_back(scale * (lower / std::pow(r, L + 1) + std::pow(r, L) * upper));
  }
  return out;
}

}  // namespace

SampledIntegralResult sampled_vector_potential(const SampledProfile& current, int L) {
  if (L < 1) throw std::invalid_argument("multipole order must be >= 1");
  SampledIntegralResult result;
  std::vector<double> fine = potential_on_nodes(current, L, current.radii());
  result.profile = SampledProfile(current.radii(), fine);

  const SampledProfile coarse_current = current.coarsened();
  const std::vector<double> coarse = potential_on_nodes(coarse_current, L, coarse_current.radii());
  // Fourth-order spline quadrature: error ~ (fine - coarse) / 15.
  for (std::size_t i = 0; i < coarse_current.radii().size(); ++i) {
    const double r = coarse_current.radii()[i];
    const double estimate = std::abs(result.profile(r) - coarse[i]) / 15.0;
    result.error_estimate = std::max(result.error_estimate, estimate);
  }

  const double r0 = current.r_min();
  result.truncation_estimate = 4.0 / (2.0 * L + 1.0) * std::abs(current.values().front()) * r0 * r0 / (L + 3.0);
  return result;
}

void require_square_integrable(const SampledProfile& density) {
  const auto& r = density.radii();
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) f[i] = std::abs(density.values()[i]) * r[i] * r[i];
  double grid_integral = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i) grid_integral += 0.5 * (f[i] + f[i - 1]) * (r[i] - r[i - 1]);
  if (!(grid_integral > 0.0)) throw RadialIntegralError(RadialIntegralError::Kind::divergence, "radial density is zero on the whole grid");

  // Local exponent of f between two nodes; NaN when either value is zero.
  auto exponent = [&](std::size_t a, std::size_t b) { return std::log(f[b] / f[a]) / std::log(r[b] / r[a]); };
  const std::size_t n = r.size();
  const double inner = exponent(0, 1);
  if (f[0] * r[0] > 1e-12 * grid_integral && inner <= -1.0) {
    throw RadialIntegralError(RadialIntegralError::Kind::divergence,
                              "R^2 r^2 grows like r^" + std::to_string(inner) + " towards the origin; the norm integral diverges");
  }
  const double outer = exponent(n - 2, n - 1);
  if (f[n - 1] * r[n - 1] > 1e-12 * grid_integral && outer >= -1.0) {
    throw RadialIntegralError(RadialIntegralError::Kind::divergence,
                              "R^2 r^2 decays like r^" + std::to_string(outer) + " at the end of the grid; the norm integral diverges");
  }
}

}  // namespace atomfield::radial
