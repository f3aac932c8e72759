#include "atomfield/field/field.hpp"

#include "atomfield/angular/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace atomfield::field {

using radial::PolyExp;
using radial::RadialEvaluator;
using radial::SampledProfile;

namespace {

FieldMultipole analytic_multipole(int L, const PolyExp& a) {
  FieldMultipole m;
  m.L = L;
  m.potential = a;
  m.radial = Rational(L * (L + 1)) * a.times_power(-1);
  // -(1/r) d(r A)/dr = -(A/r + A')
  m.polar = -(a.times_power(-1) + a.derivative());
  return m;
}

FieldMultipole sampled_multipole(int L, const SampledProfile& a) {
  FieldMultipole m;
  m.L = L;
  m.potential = a;
  m.radial = a.map([L](double r, double v) { return L * (L + 1) * v / r; });
  m.polar = a.map([&a](double r, double v) { return -(v / r + a.derivative(r)); });
  return m;
}

}  // namespace

AxisymmetricField::AxisymmetricField(std::vector<FieldMultipole> multipoles) : multipoles_(std::move(multipoles)) {
  std::sort(multipoles_.begin(), multipoles_.end(), [](const auto& a, const auto& b) { return a.L < b.L; });
  auto make = [](const RadialProfile& p) -> Evaluator {
    if (const auto* poly = std::get_if<PolyExp>(&p)) return RadialEvaluator(*poly);
    return std::get<SampledProfile>(p);
  };
  for (const auto& m : multipoles_) {
    if (m.L < 1 || m.L % 2 == 0) throw std::invalid_argument("field multipole order must be odd and >= 1");
    entries_.push_back(Entry{m.L, make(m.potential), make(m.radial), make(m.polar)});
    max_L_ = std::max(max_L_, m.L);
    for (const RadialProfile* p : {&m.potential, &m.radial, &m.polar}) {
      if (const auto* s = std::get_if<SampledProfile>(p)) {
        r_min_ = std::max(r_min_, s->r_min());
        r_max_ = std::min(r_max_, s->r_max());
      }
    }
  }
}

std::vector<int> AxisymmetricField::orders() const {
  std::vector<int> out;
  for (const auto& e : entries_) out.push_back(e.L);
  return out;
}

double AxisymmetricField::eval(const Evaluator& e, double r) {
  if (const auto* ev = std::get_if<RadialEvaluator>(&e)) return (*ev)(r);
  return std::get<SampledProfile>(e)(r);
}

void AxisymmetricField::check_radius(double r) const {
  if (!(r > 0.0)) throw std::domain_error("field is singular at r = 0 (got r = " + std::to_string(r) + ")");
  if (r < r_min_ || r > r_max_) {
    throw std::domain_error("r = " + std::to_string(r) + " outside the sampled range [" + std::to_string(r_min_) +
                            ", " + std::to_string(r_max_) + "]");
  }
}

const AxisymmetricField::Entry& AxisymmetricField::entry(int L) const {
  for (const auto& e : entries_) {
    if (e.L == L) return e;
  }
  throw std::out_of_range("no multipole of order " + std::to_string(L));
}

AxisymmetricField::RadialValues AxisymmetricField::radial_values(int L, double r) const {
  check_radius(r);
  const Entry& e = entry(L);
  return {eval(e.potential, r), eval(e.radial, r), eval(e.polar, r)};
}

FieldSample AxisymmetricField::operator()(double r, double theta) const {
  check_radius(r);
  FieldSample s{r, theta, 0.0, 0.0};
  if (entries_.empty()) return s;
  const auto p0 = angular::assoc_legendre_theta_column(max_L_, 0, theta);
  const auto p1 = angular::assoc_legendre_theta_column(max_L_, 1, theta);
  for (const auto& e : entries_) {
    s.B_r += eval(e.radial, r) * p0[e.L];
    s.B_theta += eval(e.polar, r) * p1[e.L];
  }
  return s;
}

FieldSample AxisymmetricField::component(int L, double r, double theta) const {
  check_radius(r);
  const Entry& e = entry(L);
  const auto p0 = angular::assoc_legendre_theta_column(L, 0, theta);
  const auto p1 = angular::assoc_legendre_theta_column(L, 1, theta);
  return {r, theta, eval(e.radial, r) * p0[L], eval(e.polar, r) * p1[L]};
}

double AxisymmetricField::potential(double r, double theta) const {
  check_radius(r);
  if (entries_.empty()) return 0.0;
  const auto p1 = angular::assoc_legendre_theta_column(max_L_, 1, theta);
  double a = 0.0;
  for (const auto& e : entries_) a += eval(e.potential, r) * p1[e.L];
  return a;
}

double AxisymmetricField::flux_function(double r, double theta) const {
  return r * std::sin(theta) * potential(r, theta);
}

AxisymmetricField field_from_potential(const MultipoleSeries& potential) {
  if (potential.quantity != multipole::Quantity::vector_potential) {
    throw std::invalid_argument("field_from_potential expects a vector-potential series");
  }
  std::vector<FieldMultipole> multipoles;
  for (const auto& [L, profile] : potential.entries) {
    if (const auto* poly = std::get_if<PolyExp>(&profile)) {
      multipoles.push_back(analytic_multipole(L, *poly));
    } else {
      multipoles.push_back(sampled_multipole(L, std::get<SampledProfile>(profile)));
    }
  }
  return AxisymmetricField(std::move(multipoles));
}

namespace {

void check_grid(const GridSpec& g) {
  if (!(g.r_min > 0.0 && g.r_min < g.r_max && std::isfinite(g.r_max))) {
    throw std::domain_error("grid requires 0 < r_min < r_max");
  }
  if (g.n_r < 2 || g.n_theta < 2) throw std::domain_error("grid requires n_r >= 2 and n_theta >= 2");
  const bool centres = g.theta_min == 0.0 && g.theta_max == 0.0;
  if (!centres && !(g.theta_min >= 0.0 && g.theta_min < g.theta_max && g.theta_max <= std::numbers::pi)) {
    throw std::domain_error("grid requires 0 <= theta_min < theta_max <= pi");
  }
}

}  // namespace

std::vector<double> grid_radii(const GridSpec& g) {
  check_grid(g);
  std::vector<double> out(static_cast<std::size_t>(g.n_r));
  const double lo = std::log(g.r_min);
  const double hi = std::log(g.r_max);
  for (int i = 0; i < g.n_r; ++i) out[i] = std::exp(lo + (hi - lo) * i / (g.n_r - 1));
  out.front() = g.r_min;
  out.back() = g.r_max;
  return out;
}

std::vector<double> grid_angles(const GridSpec& g) {
  check_grid(g);
  std::vector<double> out(static_cast<std::size_t>(g.n_theta));
  if (g.theta_min == 0.0 && g.theta_max == 0.0) {
    for (int i = 0; i < g.n_theta; ++i) out[i] = (i + 0.5) * std::numbers::pi / g.n_theta;
  } else {
    for (int i = 0; i < g.n_theta; ++i) out[i] = g.theta_min + (g.theta_max - g.theta_min) * i / (g.n_theta - 1);
  }
  return out;
}

std::vector<FieldSample> sample_grid(const AxisymmetricField& field, const GridSpec& grid) {
  const auto radii = grid_radii(grid);
  const auto angles = grid_angles(grid);
  std::vector<FieldSample> out;
  out.reserve(radii.size() * angles.size());
  for (double r : radii) {
    for (double t : angles) out.push_back(field(r, t));
  }
  return out;
}

namespace {

struct Vec2 {
  double x = 0.0;
  double z = 0.0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }
double norm(Vec2 a) { return std::hypot(a.x, a.z); }

LinePoint to_polar(Vec2 p) { return {norm(p), std::atan2(p.x, p.z)}; }

constexpr double stagnation_threshold = 1e-14;

// Cartesian field in the full meridian plane; x < 0 is the mirrored half.
Vec2 cartesian_field(const AxisymmetricField& field, Vec2 p) {
  const double r = norm(p);
  const double theta = std::atan2(std::abs(p.x), p.z);
  const FieldSample s = field(r, theta);
  const double side = p.x < 0.0 ? -1.0 : 1.0;
  return {side * (s.B_r * std::sin(theta) + s.B_theta * std::cos(theta)),
          s.B_r * std::cos(theta) - s.B_theta * std::sin(theta)};
}

Vec2 unit_tangent(const AxisymmetricField& field, Vec2 p) {
  const Vec2 b = cartesian_field(field, p);
  const double m = norm(b);
  if (m < stagnation_threshold) {
    throw StagnationError("field line stagnates: |B| = " + std::to_string(m) + " below 1e-14", to_polar(p));
  }
  return (1.0 / m) * b;
}

double segment_distance(Vec2 a, Vec2 b, Vec2 p, double& t_raw) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  t_raw = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  const double t = std::clamp(t_raw, 0.0, 1.0);
  return norm(p - (a + t * d));
}

double signed_flux(const AxisymmetricField& field, Vec2 p) {
  return field.flux_function(norm(p), std::atan2(std::abs(p.x), p.z));
}

}  // namespace

FieldLine trace_field_line(const AxisymmetricField& field, LinePoint start, const TraceOptions& options) {
  if (!(options.arc_step > 0.0) || options.max_steps < 1) throw std::invalid_argument("trace needs arc_step > 0, max_steps >= 1");
  if (!(start.r >= options.r_min && start.r <= options.r_max)) {
    throw std::domain_error("field-line start r = " + std::to_string(start.r) + " outside [" +
                            std::to_string(options.r_min) + ", " + std::to_string(options.r_max) + "]");
  }
  const Vec2 origin{start.r * std::sin(start.theta), start.r * std::cos(start.theta)};
  FieldLine line;
  line.on_axis = std::abs(origin.x) <= 1e-12 * start.r;
  line.points.push_back(to_polar(origin));
  const double psi0 = signed_flux(field, origin);

  const double h = options.arc_step;
  Vec2 p = origin;
  Vec2 previous_direction = unit_tangent(field, p);
  for (long step = 1; step <= options.max_steps; ++step) {
    const Vec2 k1 = unit_tangent(field, p);
    if (dot(k1, previous_direction) < 0.0) {
      throw StagnationError("field line reverses direction (field null crossed)", to_polar(p));
    }
    const Vec2 k2 = unit_tangent(field, p + (0.5 * h) * k1);
    const Vec2 k3 = unit_tangent(field, p + (0.5 * h) * k2);
    const Vec2 k4 = unit_tangent(field, p + h * k3);
    const Vec2 next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    previous_direction = k1;

    const double r = norm(next);
    if (r < options.r_min || r > options.r_max) {
      line.termination = Termination::left_domain;
      return line;
    }
    line.points.push_back(to_polar(next));
    line.flux_drift = std::max(line.flux_drift, std::abs(signed_flux(field, next) - psi0));

    if (step >= options.min_closure_steps) {
      double t_raw = 0.0;
      const double gap = segment_distance(p, next, origin, t_raw);
      if (gap <= h && t_raw < 1.0) {
        line.termination = Termination::closed;
        line.closure_gap = gap;
        return line;
      }
    }
    p = next;
  }
  line.termination = Termination::step_limit;
  return line;
}

}  // namespace atomfield::field
