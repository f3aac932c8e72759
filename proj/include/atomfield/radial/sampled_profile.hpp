#pragma once

#include <vector>

namespace atomfield::radial {

/// Radial function known on a strictly increasing grid r_0 < r_1 < ... with
/// r_0 > 0, interpolated by a natural cubic spline.
///
/// Sampled profiles are the second-class path for non-hydrogenic inputs:
/// evaluation is only defined inside [r_0, r_last], and integrals treat the
/// function as zero outside that range.
class SampledProfile {
 public:
  SampledProfile() = default;
  /// Throws std::invalid_argument for fewer than 4 nodes, unsorted or
  /// non-positive radii, mismatched sizes or non-finite values.
  SampledProfile(std::vector<double> radii, std::vector<double> values);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }
  double r_min() const { return radii_.front(); }
  double r_max() const { return radii_.back(); }
  bool empty() const { return radii_.empty(); }

  /// Throws std::domain_error outside [r_min, r_max].
  double operator()(double r) const;
  double derivative(double r) const;

  /// Exact integral of the spline over [a, b] intersected with the grid range.
  double integral(double a, double b) const;

  /// Cumulative integrals from r_0 to every node.
  std::vector<double> cumulative_integral() const;

  /// Pointwise transform on the nodes, re-splined.
  template <class F>
  SampledProfile map(F&& f) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = f(radii_[i], values_[i]);
    return SampledProfile(radii_, std::move(out));
  }

  /// Every other node (always keeping the last); used for Richardson estimates.
  SampledProfile coarsened() const;

 private:
  std::size_t segment(double r) const;
  std::vector<double> radii_;
  std::vector<double> values_;
  std::vector<double> second_;  // spline second derivatives at nodes
};

struct SampledIntegralResult {
  SampledProfile profile;
  double error_estimate = 0.0;       // Richardson estimate against the coarsened grid
  double truncation_estimate = 0.0;  // neglected contribution from r < r_0
};

/// Vector potential multipole A_L on the grid of `current` (same units as
/// vector_potential_profile). The integrand is clamped to zero below r_0 and
/// above r_last.
SampledIntegralResult sampled_vector_potential(const SampledProfile& current, int L);

/// Checks that int_0^inf R^2 r^2 dr is finite for a density R^2 known on a
/// grid. Beyond either end the integrand is extrapolated by the power law
/// through the two outermost nodes: r^p needs p > -1 towards the origin and
/// p < -1 towards infinity unless the boundary value is negligible (below
/// 1e-12 of the grid integral). Throws RadialIntegralError (divergence).
void require_square_integrable(const SampledProfile& density);

}  // namespace atomfield::radial
