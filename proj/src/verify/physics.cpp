#include "common.hpp"

#include "atomfield/angular/legendre.hpp"
#include "atomfield/field/pipeline.hpp"
#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/oracle/spinor.hpp"
#include "atomfield/radial/hydrogen.hpp"
#include "atomfield/radial/quadrature.hpp"

#include <cstdio>
#include <numbers>
#include <random>

namespace atomfield::verify {

using namespace detail;
using field::AxisymmetricField;
using field::WorkedExample;
using multipole::CurrentPart;
using multipole::QuantumState;
using radial::PolyExp;

namespace {

constexpr double pi = std::numbers::pi;

angular::HalfInteger half(int twice) { return angular::HalfInteger::from_twice(twice); }

struct NamedField {
  std::string name;
  field::Pipeline pipeline;
};

std::vector<NamedField> physics_fields() {
  std::vector<NamedField> out;
  out.push_back({"|3,2,1> orbital", field::worked_example_pipeline(WorkedExample::orbital_321)});
  out.push_back({"|3,2,3/2,3/2>", field::worked_example_pipeline(WorkedExample::j32_mj32)});
  out.push_back({"|4,3,7/2,1/2>", field::build_pipeline(QuantumState::coupled(3, half(7), half(1), 4),
                                                         radial::hydrogen_radial(4, 3).density())});
  out.push_back({"|4,2,-1,+1/2> total", field::build_pipeline(QuantumState::ls(2, -1, half(1), 4),
                                                               radial::hydrogen_radial(4, 2).density())});
  return out;
}

double divergence(const AxisymmetricField& f, double r, double t) {
  const double h = 1e-3 * r;
  const double radial = richardson_difference([&](double x) { return x * x * f(x, t).B_r; }, r, h) / (r * r);
  const double polar =
      richardson_difference([&](double x) { return std::sin(x) * f(r, x).B_theta; }, t, 1e-3) / (r * std::sin(t));
  return radial + polar;
}

std::vector<CheckResult> divergence_checks(const std::vector<NamedField>& fields) {
  std::mt19937_64 rng(20240531);
  std::uniform_real_distribution<double> log_r(std::log(0.2), std::log(30.0));
  std::uniform_real_distribution<double> theta(0.05, pi - 0.05);
  MaxError numeric;
  bool exact_ok = true;
  for (const auto& nf : fields) {
    for (int i = 0; i < 200; ++i) {
      const double r = std::exp(log_r(rng));
      numeric.add(std::abs(divergence(nf.pipeline.field, r, theta(rng))));
    }
    // (1/r^2) d(r^2 B_rL)/dr + L(L+1) B_thetaL / r = 0 order by order.
    for (const auto& m : nf.pipeline.field.multipoles()) {
      const auto& radial = std::get<PolyExp>(m.radial);
      const auto& polar = std::get<PolyExp>(m.polar);
      exact_ok = exact_ok && (radial.times_power(2).derivative() + Rational(m.L * (m.L + 1)) * polar.times_power(1)).is_zero();
    }
  }
  return {judge("div B = 0 at 800 random points (finite differences, field units)", numeric.value, 1e-7),
          exact("div B = 0 order by order (exact radial identity)", exact_ok)};
}

std::vector<CheckResult> flux_checks(const std::vector<NamedField>& fields) {
  MaxError shell;
  MaxError cap;
  for (const auto& nf : fields) {
    const auto& f = nf.pipeline.field;
    for (double R : {0.5, 3.0, 12.0, 40.0}) {
      // Integrals over x = cos(theta).
      const double closed = 2 * pi * R * R * radial::gauss_legendre([&](double x) { return f(R, std::acos(x)).B_r; }, -1.0, 1.0);
      const double scale =
          2 * pi * R * R * radial::gauss_legendre([&](double x) { return std::abs(f(R, std::acos(x)).B_r); }, -1.0, 1.0);
      shell.add(std::abs(closed) / scale);
      for (double t0 : {0.4, pi / 2, 2.2}) {
        const double through_cap =
            2 * pi * R * R * radial::gauss_legendre([&](double x) { return f(R, std::acos(x)).B_r; }, std::cos(t0), 1.0);
        const double circulation = 2 * pi * R * std::sin(t0) * f.potential(R, t0);
        cap.add(relative_error(through_cap, circulation, 1e-12 * scale));
      }
    }
  }
  return {judge("zero net flux through spheres (Gauss-Legendre, relative to |flux|)", shell.value, 1e-12),
          judge("flux through polar caps equals the circulation of A", cap.value, 1e-10)};
}

std::vector<CheckResult> far_field_checks() {
  const auto p = field::worked_example_pipeline(WorkedExample::orbital_321);
  const double r = 200.0;
  MaxError dipole;
  MaxError total;
  for (double t : cell_centres(20)) {
    const double c = std::cos(t);
    dipole.add(std::abs(r * r * r * p.field.component(1, r, t).B_r / c + 2.0));
    total.add(std::abs(r * r * r * p.field(r, t).B_r / c + 2.0));
  }
  std::vector<CheckResult> out;
  out.push_back(judge("|3,2,1> dipole term: r^3 B_r1 / cos(theta) -> -2 at r = 200", dipole.value, 1e-6));
  CheckResult full = judge("|3,2,1> full field: r^3 B_r / cos(theta) -> -2 at r = 200", total.value, 1e-6);
  if (full.status == Status::fail) {
    full.status = Status::reported;
    full.note = "octupole tail -216 (5cos^3 - 3cos) / r^5 contributes O(r^-2) to r^3 B_r; the dipole term carries the limit";
  }
  out.push_back(full);
  return out;
}

std::vector<CheckResult> decay_checks(const std::vector<NamedField>& fields) {
  // Orders with a net moment decay as r^-(L+1). An order whose moment vanishes
  // (for instance the dipole of |l, m, m_s> with m + 2 m_s = 0) has no
  // undamped term at all and falls off exponentially.
  MaxError scaling;
  bool ordering = true;
  bool confined = true;
  int power_law = 0;
  int exponential = 0;
  for (const auto& nf : fields) {
    const auto& f = nf.pipeline.field;
    double previous_ratio = 2.0;
    for (const auto& [L, profile] : nf.pipeline.potential.entries) {
      const auto& a = std::get<PolyExp>(profile);
      Rational moment = 0;
      bool other_undamped = false;
      for (const auto& t : a.terms()) {
        if (t.decay != 0) continue;
        if (t.power == -(L + 1)) {
          moment = t.coefficient;
        } else {
          other_undamped = true;
        }
      }
      confined = confined && !other_undamped;
      if (moment == 0) {
        ++exponential;
        continue;
      }
      ++power_law;
      const double near = f.radial_values(L, 100.0).potential;
      const double far = f.radial_values(L, 200.0).potential;
      const double ratio = std::abs(far / near);
      scaling.add(std::abs(ratio * std::pow(2.0, L + 1) - 1.0));
      ordering = ordering && ratio < previous_ratio;
      previous_ratio = ratio;
    }
  }
  const std::string note = std::to_string(power_law) + " orders with a moment, " + std::to_string(exponential) +
                           " with zero moment (exponentially confined)";
  return {judge("A_L(200)/A_L(100) = 2^-(L+1)", scaling.value, 1e-6, note),
          exact("higher multipoles decay faster", ordering),
          exact("the only undamped term of A_L is the r^-(L+1) moment term", confined)};
}

std::vector<CheckResult> origin_checks() {
  bool regular = true;
  MaxError near;
  int count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const PolyExp rho = radial::hydrogen_radial(n, l).density();
      std::vector<QuantumState> states;
      for (int m = -l; m <= l; ++m) {
        states.push_back(QuantumState::ls(l, m, half(1), n));
        states.push_back(QuantumState::ls(l, m, half(-1), n));
      }
      for (int tj : {2 * l - 1, 2 * l + 1}) {
        for (int tm = -tj; tm <= tj && tj >= 1; tm += 2) states.push_back(QuantumState::coupled(l, half(tj), half(tm), n));
      }
      for (const auto& s : states) {
        const auto potential = multipole::vector_potential_series(multipole::current_series(s, rho));
        for (const auto& [L, profile] : potential.entries) {
          const auto& A = std::get<PolyExp>(profile);
          int first = 0;
          const auto series = A.laurent_series(std::max(0, L - A.min_power()) + 4, first);
          std::vector<std::pair<int, Rational>> kept;
          for (std::size_t i = 0; i < series.size(); ++i) {
            const int power = first + static_cast<int>(i);
            if (power < L) regular = regular && series[i] == 0;
            else if (power <= L + 3) kept.emplace_back(power, series[i]);
          }
          // A_L / r^L near the origin against the truncated Laurent sum.
          const radial::RadialEvaluator eval(A);
          for (double r : {1e-6, 1e-3}) {
            double expected = 0.0;
            for (const auto& [power, c] : kept) expected += to_double(c) * std::pow(r, power - L);
            near.add(relative_error(eval(r) / std::pow(r, L), expected, 1e-300));
          }
          ++count;
        }
      }
    }
  }
  return {exact("A_L has no Laurent terms below r^L (n <= 5, both couplings)", regular,
                std::to_string(count) + " multipoles"),
          judge("A_L / r^L finite near the origin (r = 1e-6, 1e-3)", near.value, 1e-9)};
}

}  // namespace

std::vector<CheckResult> verify_physics() {
  const auto fields = physics_fields();
  std::vector<CheckResult> out;
  for (auto* part : {&divergence_checks, &flux_checks, &decay_checks}) {
    for (auto& r : (*part)(fields)) out.push_back(std::move(r));
  }
  for (auto& r : far_field_checks()) out.push_back(std::move(r));
  for (auto& r : origin_checks()) out.push_back(std::move(r));
  return out;
}

namespace {

CheckResult closure_check(const std::string& name, const AxisymmetricField& f, const std::vector<double>& seeds) {
  MaxError gap;
  std::string note;
  bool ok = true;
  // Lines seeded close to the nucleus sit on small flux values and swing out
  // to a few hundred a0 before returning, so the domain is widened.
  field::TraceOptions options;
  options.r_max = 1000.0;
  for (double r0 : seeds) {
    try {
      const auto line = field::trace_field_line(f, {r0, pi / 2}, options);
      const double psi = std::abs(f.flux_function(r0, pi / 2));
      char text[96];
      std::snprintf(text, sizeof text, "r0 = %g: %zu steps, relative flux drift %.1e; ", r0, line.points.size(),
                    line.flux_drift / psi);
      note += text;
      if (line.termination != field::Termination::closed) {
        ok = false;
        gap.add(std::numeric_limits<double>::infinity());
      } else {
        gap.add(line.closure_gap);
      }
    } catch (const field::StagnationError& e) {
      ok = false;
      gap.add(std::numeric_limits<double>::infinity());
      note += e.what() + std::string("; ");
    }
  }
  CheckResult r = judge(name, gap.value, 1e-3, note);
  if (!ok) r.status = Status::fail;
  return r;
}

AxisymmetricField point_dipole() {
  multipole::MultipoleSeries a;
  a.quantity = multipole::Quantity::vector_potential;
  a.entries[1] = PolyExp::monomial(1, -2);
  return field::field_from_potential(a);
}

CheckResult dipole_shape_check() {
  // Lines of a point dipole follow r = r0 sin^2(theta) into the origin.
  const AxisymmetricField f = point_dipole();
  field::TraceOptions opt;
  opt.r_min = 0.2;
  MaxError err;
  const double r0 = 3.0;
  const auto line = field::trace_field_line(f, {r0, pi / 2}, opt);
  for (const auto& p : line.points) {
    const double s = std::sin(p.theta);
    err.add(std::abs(p.r - r0 * s * s) / r0);
  }
  CheckResult r = judge("point-dipole line follows r = r0 sin^2(theta)", err.value, 1e-6,
                        std::to_string(line.points.size()) + " points, ends " + std::string(
                            line.termination == field::Termination::left_domain ? "at the inner boundary" : "elsewhere"));
  if (line.termination != field::Termination::left_domain) r.status = Status::fail;
  return r;
}

// For j = m_j the angular factor sum_L alpha_L P_L^1 should be c sin^{2j}:
// in the exact sin form that is a single even coefficient at s^{j - 1/2}.
bool is_sin_power(const multipole::CoefficientTable& table, int power) {
  angular::SinForm sum;
  for (const auto& [L, a] : table.alphas) {
    angular::SinForm term = angular::assoc_legendre_sin_form(L, 1);
    term *= a;
    sum += term;
  }
  const std::size_t top = static_cast<std::size_t>(power - 1) / 2;
  if (!sum.odd.empty() || sum.even.size() != top + 1) return false;
  for (std::size_t i = 0; i < top; ++i) {
    if (sum.even[i] != 0) return false;
  }
  return true;
}

std::vector<CheckResult> confinement_checks() {
  bool tables = true;
  for (int tj = 1; tj <= 9; tj += 2) tables = tables && is_sin_power(multipole::total_coefficients(half(tj), half(tj)), tj);
  MaxError direct;
  for (int tj : {3, 5}) {
    for (bool upper : {true, false}) {
      const int l = upper ? (tj - 1) / 2 : (tj + 1) / 2;
      const oracle::RadialDensity rho{0.3, -0.2};
      std::vector<double> ratios;
      for (double t : cell_centres(40)) {
        ratios.push_back(oracle::direct_total_current(upper, l, tj, rho, 1.5, t).factorized / std::pow(std::sin(t), tj));
      }
      const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
      direct.add((*hi - *lo) / std::abs(ratios.front()));
    }
  }
  return {exact("j = m_j current angular factor is c sin^{2j}(theta), j <= 9/2 (tables, exact)", tables),
          judge("j = m_j = 3/2, 5/2 direct spinor current proportional to sin^3, sin^5", direct.value, 1e-10)};
}

}  // namespace

std::vector<CheckResult> verify_figures() {
  std::vector<CheckResult> out;
  out.push_back(closure_check("|3,2,3/2,3/2> equatorial seeds r = 1, 2, 4, 8 close",
                              field::worked_example_pipeline(WorkedExample::j32_mj32).field, {1, 2, 4, 8}));
  out.push_back(closure_check("|3,2,1> orbital seed r = 2 closes",
                              field::worked_example_pipeline(WorkedExample::orbital_321).field, {2}));
  out.push_back(closure_check("|2,1,1> orbital (pure dipole) seeds r = 1, 4 close",
                              field::build_pipeline(QuantumState::ls(1, 1, half(1), 2),
                                                    radial::hydrogen_radial(2, 1).density(), CurrentPart::orbital)
                                  .field,
                              {1, 4}));
  out.push_back(dipole_shape_check());
  for (auto& r : confinement_checks()) out.push_back(std::move(r));
  return out;
}

}  // namespace atomfield::verify
