#pragma once

#include "atomfield/multipole/series.hpp"
#include "atomfield/radial/polyexp.hpp"

#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace atomfield::field {

using multipole::MultipoleSeries;
using multipole::RadialProfile;

/// Field value at (r, theta); r in a0, B in mu0 mu_B / (4 pi a0^3).
struct FieldSample {
  double r = 0.0;
  double theta = 0.0;
  double B_r = 0.0;
  double B_theta = 0.0;
};

/// Radial parts of one multipole order:
///   A_phi   = potential(r) P_L^1(cos theta)
///   B_r     = radial(r)    P_L(cos theta),   radial = L(L+1) A_L / r
///   B_theta = polar(r)     P_L^1(cos theta), polar  = -(1/r) d(r A_L)/dr
struct FieldMultipole {
  int L = 1;
  RadialProfile potential;
  RadialProfile radial;
  RadialProfile polar;
};

/// Axisymmetric field B = curl(A_phi phi-hat) assembled order by order.
/// Immutable after construction and safe to evaluate concurrently.
class AxisymmetricField {
 public:
  AxisymmetricField() = default;
  explicit AxisymmetricField(std::vector<FieldMultipole> multipoles);

  const std::vector<FieldMultipole>& multipoles() const { return multipoles_; }
  std::vector<int> orders() const;
  bool empty() const { return multipoles_.empty(); }

  /// Radial range where the field is defined: (0, inf) for analytic input,
  /// the common grid range for sampled input.
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }

  /// Throws std::domain_error for r <= 0 (the origin is singular for the
  /// generic formulas) or r outside a sampled grid. theta may include the poles.
  FieldSample operator()(double r, double theta) const;
  /// Contribution of order L alone; throws std::out_of_range if L is absent.
  FieldSample component(int L, double r, double theta) const;
  /// A_phi in mu0 mu_B / (4 pi a0^2).
  double potential(double r, double theta) const;
  /// r sin(theta) A_phi, constant along field lines.
  double flux_function(double r, double theta) const;

  /// Radial parts of order L at r (A_L, radial, polar).
  struct RadialValues {
    double potential = 0.0;
    double radial = 0.0;
    double polar = 0.0;
  };
  RadialValues radial_values(int L, double r) const;

 private:
  using Evaluator = std::variant<radial::RadialEvaluator, radial::SampledProfile>;
  struct Entry {
    int L = 1;
    Evaluator potential;
    Evaluator radial;
    Evaluator polar;
  };
  static double eval(const Evaluator& e, double r);
  void check_radius(double r) const;
  const Entry& entry(int L) const;

  std::vector<FieldMultipole> multipoles_;
  std::vector<Entry> entries_;
  int max_L_ = 0;
  double r_min_ = 0.0;
  double r_max_ = std::numeric_limits<double>::infinity();
};

/// Builds the field of a vector-potential series. Analytic entries are
/// differentiated exactly; sampled entries use the spline derivative.
/// Throws std::invalid_argument if the series is not a vector potential.
AxisymmetricField field_from_potential(const MultipoleSeries& potential);

/// Log-spaced r and uniformly spaced theta, both endpoints included.
struct GridSpec {
  double r_min = 0.05;
  double r_max = 30.0;
  int n_r = 60;
  double theta_min = 0.0;
  double theta_max = 0.0;  // 0 with theta_min 0 selects cell centres (i + 1/2) pi / n_theta
  int n_theta = 60;
};

std::vector<double> grid_radii(const GridSpec& grid);
std::vector<double> grid_angles(const GridSpec& grid);

/// Samples in r-major order (all theta for the first radius, then the next).
/// Throws std::domain_error unless 0 < r_min < r_max, n_r, n_theta >= 2 and
/// 0 <= theta_min < theta_max <= pi.
std::vector<FieldSample> sample_grid(const AxisymmetricField& field, const GridSpec& grid);

enum class Termination { closed, left_domain, step_limit };

struct LinePoint {
  double r = 0.0;
  /// Polar angle measured from +z in the meridian plane, in (-pi, pi];
  /// negative values lie in the mirrored half plane (phi + pi).
  double theta = 0.0;
};

struct FieldLine {
  std::vector<LinePoint> points;
  Termination termination = Termination::step_limit;
  bool on_axis = false;             // started on the symmetry axis
  double closure_gap = std::numeric_limits<double>::infinity();  // a0, when closed
  double flux_drift = 0.0;          // max |psi - psi_start| along the line
};

struct TraceOptions {
  double arc_step = 0.01;
  long max_steps = 1000000;
  double r_min = 0.05;
  double r_max = 60.0;
  int min_closure_steps = 10;
};

/// Raised when |B| falls below 1e-14 field units on a line, or the line
/// direction reverses within one step (a field null).
class StagnationError : public std::runtime_error {
 public:
  StagnationError(const std::string& what, LinePoint where) : std::runtime_error(what), where_(where) {}
  LinePoint where() const { return where_; }

 private:
  LinePoint where_;
};

/// Fixed-step RK4 integration of the unit tangent B/|B| in the meridian
/// plane (x = r sin theta, z = r cos theta). The line is closed when a step
/// passes within arc_step of the start after at least min_closure_steps
/// steps; closure_gap is the distance from the start to that step segment.
/// Throws std::domain_error if the start lies outside [r_min, r_max].
FieldLine trace_field_line(const AxisymmetricField& field, LinePoint start, const TraceOptions& options = {});

}  // namespace atomfield::field
