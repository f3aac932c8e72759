#pragma once

#include "atomfield/angular/legendre.hpp"
#include "atomfield/radial/polyexp.hpp"
#include "atomfield/radial/sampled_profile.hpp"

#include <map>
#include <variant>

namespace atomfield::multipole {

/// Analytic (exact PolyExp) or sampled radial function.
using RadialProfile = std::variant<radial::PolyExp, radial::SampledProfile>;

enum class Quantity { current, vector_potential, field };

/// Axisymmetric azimuthal quantity X_phi(r, theta) = sum_L X_L(r) P_L^1(cos theta)
/// over odd L >= 1.
///
/// Units (lengths in a0):
///   current           mu_B / (pi a0^4)
///   vector_potential  mu0 mu_B / (4 pi a0^2)
struct MultipoleSeries {
  Quantity quantity = Quantity::current;
  std::map<int, RadialProfile> entries;

  bool empty() const { return entries.empty(); }
  bool is_analytic() const;
  /// The PolyExp at order L; throws std::logic_error for sampled entries
  /// and std::out_of_range if L is absent.
  const radial::PolyExp& analytic(int L) const;
};

/// Radial value of one entry (sampled entries throw outside their grid).
double evaluate_profile(const RadialProfile& profile, double r);

/// Evaluates sum_L X_L(r) P_L^1(cos theta) for an analytic series.
///
/// The orders are combined exactly before any rounding: for each radial term
/// r^k e^{-lambda r} the angular factor sum_L c_{L,k} P_L^1 is kept as one
/// polynomial in sin^2(theta). States whose current vanishes as a high power of
/// sin(theta) at the poles therefore keep full relative precision there, where
/// a plain sum over L would cancel. Each decay group is summed separately, so
/// accuracy near r = 0 assumes a single decay (true of every current series).
class SeriesEvaluator {
 public:
  SeriesEvaluator() = default;
  /// Throws std::logic_error for sampled entries.
  explicit SeriesEvaluator(const MultipoleSeries& series);

  double operator()(double r, double theta) const;

 private:
  struct Term {
    int power = 0;
    angular::SinForm angular;
  };
  struct Group {
    long double decay = 0.0L;
    std::vector<Term> terms;
  };
  std::vector<Group> groups_;
};

}  // namespace atomfield::multipole
