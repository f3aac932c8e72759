#include <doctest.h>

#include "atomfield/field/closed_form.hpp"
#include "atomfield/field/field.hpp"
#include "atomfield/field/pipeline.hpp"
#include "atomfield/radial/hydrogen.hpp"

#include <cmath>
#include <numbers>

using namespace atomfield;
using namespace atomfield::field;
using radial::PolyExp;

namespace {

constexpr double pi = std::numbers::pi;

AxisymmetricField from_profile(int L, const PolyExp& a) {
  multipole::MultipoleSeries s;
  s.quantity = multipole::Quantity::vector_potential;
  s.entries[L] = a;
  return field_from_potential(s);
}

}  // namespace

TEST_CASE("uniform field from A = r sin(theta) / 2") {
  const auto f = from_profile(1, PolyExp::monomial(Rational(1, 2), 1));
  for (double r : {0.3, 2.0, 17.0}) {
    for (double t : {0.0, 0.7, pi / 2, 2.9, pi}) {
      const auto b = f(r, t);
      CHECK(b.B_r == doctest::Approx(std::cos(t)).epsilon(1e-14));
      CHECK(b.B_theta == doctest::Approx(-std::sin(t)).epsilon(1e-14));
    }
  }
}

TEST_CASE("point dipole field and its lines") {
  const auto f = from_profile(1, PolyExp::monomial(1, -2));
  for (double r : {0.5, 3.0}) {
    for (double t : {0.3, 1.1, 2.4}) {
      const auto b = f(r, t);
      CHECK(b.B_r == doctest::Approx(2 * std::cos(t) / (r * r * r)).epsilon(1e-14));
      CHECK(b.B_theta == doctest::Approx(std::sin(t) / (r * r * r)).epsilon(1e-14));
    }
  }
  CHECK(f.flux_function(2.0, 0.6) == doctest::Approx(std::sin(0.6) * std::sin(0.6) / 2.0).epsilon(1e-14));

  // r = r0 sin^2(theta) until the line reaches the inner boundary.
  TraceOptions opt;
  opt.r_min = 0.2;
  const auto line = trace_field_line(f, {3.0, pi / 2}, opt);
  CHECK(line.termination == Termination::left_domain);
  double worst = 0.0;
  for (const auto& p : line.points) worst = std::max(worst, std::abs(p.r - 3.0 * std::sin(p.theta) * std::sin(p.theta)));
  CHECK(worst < 1e-6);
}

TEST_CASE("lines of a pure dipole current distribution close") {
  const auto p = build_pipeline(multipole::QuantumState::ls(1, 1, angular::HalfInteger::from_twice(1), 2),
                                radial::hydrogen_radial(2, 1).density(), multipole::CurrentPart::orbital);
  CHECK(p.field.orders() == std::vector<int>{1});
  for (double r0 : {1.0, 4.0}) {
    const auto line = trace_field_line(p.field, {r0, pi / 2});
    CHECK(line.termination == Termination::closed);
    CHECK(line.closure_gap <= 1e-3);
    CHECK(line.flux_drift <= 1e-9 * std::abs(p.field.flux_function(r0, pi / 2)));
  }
}

TEST_CASE("tracing limits") {
  const auto f = from_profile(1, PolyExp::monomial(1, -2));
  CHECK_THROWS_AS(trace_field_line(f, {100.0, 1.0}), std::domain_error);
  TraceOptions few;
  few.max_steps = 5;
  CHECK(trace_field_line(f, {3.0, pi / 2}, few).termination == Termination::step_limit);
  const auto axis = trace_field_line(f, {3.0, 0.0});
  CHECK(axis.on_axis);
}

TEST_CASE("orbital |3,2,1> field at r = 9 on the axis matches the closed form") {
  const auto p = worked_example_pipeline(WorkedExample::orbital_321);
  const auto ref = closed_form_reference(WorkedExample::orbital_321);
  const auto b = p.field(9.0, 0.0);
  const double br = ref(ReferenceComponent::Br1, 9.0, 0.0) + ref(ReferenceComponent::Br3, 9.0, 0.0);
  CHECK(b.B_r == doctest::Approx(br).epsilon(1e-12));
  CHECK(std::abs(b.B_theta) < 1e-15);
}

TEST_CASE("zero-current state gives an all-zero grid") {
  const auto p = build_pipeline(multipole::QuantumState::ls(2, 0, angular::HalfInteger::from_twice(1), 3),
                                radial::hydrogen_radial(3, 2).density(), multipole::CurrentPart::orbital);
  CHECK(p.field.empty());
  GridSpec g;
  g.n_r = 4;
  g.n_theta = 3;
  const auto samples = sample_grid(p.field, g);
  CHECK(samples.size() == 12);
  for (const auto& s : samples) {
    CHECK(s.B_r == 0.0);
    CHECK(s.B_theta == 0.0);
  }
}

TEST_CASE("grid layout and validation") {
  GridSpec g;
  g.r_min = 1.0;
  g.r_max = 100.0;
  g.n_r = 3;
  g.n_theta = 4;
  const auto r = grid_radii(g);
  CHECK(r[1] == doctest::Approx(10.0).epsilon(1e-15));
  const auto t = grid_angles(g);
  CHECK(t.front() == doctest::Approx(pi / 8).epsilon(1e-15));
  const auto f = from_profile(1, PolyExp::monomial(1, -2));
  const auto samples = sample_grid(f, g);
  CHECK(samples[1].r == samples[0].r);  // r-major
  g.r_min = 0.0;
  CHECK_THROWS_AS(sample_grid(f, g), std::domain_error);
  CHECK_THROWS_AS(f(0.0, 1.0), std::domain_error);
}
