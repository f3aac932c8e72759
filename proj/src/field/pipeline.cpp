#include "atomfield/field/pipeline.hpp"

#include "atomfield/angular/legendre.hpp"
#include "atomfield/radial/hydrogen.hpp"

namespace atomfield::field {

using multipole::CurrentPart;
using multipole::QuantumState;

Pipeline build_pipeline(const QuantumState& state, const radial::PolyExp& density, CurrentPart part) {
  Pipeline p;
  p.current = multipole::current_series(state, density, part);
  p.potential = multipole::vector_potential_series(p.current);
  p.field = field_from_potential(p.potential);
  return p;
}

Pipeline build_pipeline(const QuantumState& state, const radial::SampledProfile& density, CurrentPart part) {
  Pipeline p;
  p.current = multipole::current_series(state, density, part);
  p.potential = multipole::vector_potential_series(p.current);
  p.field = field_from_potential(p.potential);
  return p;
}

Pipeline worked_example_pipeline(WorkedExample example) {
  const radial::PolyExp density = radial::hydrogen_radial(3, 2).density();
  if (example == WorkedExample::orbital_321) {
    return build_pipeline(QuantumState::ls(2, 1, angular::HalfInteger::from_twice(1), 3), density,
                          CurrentPart::orbital);
  }
  return build_pipeline(
      QuantumState::coupled(2, angular::HalfInteger::from_twice(3), angular::HalfInteger::from_twice(3), 3), density,
      CurrentPart::total);
}

double pipeline_component(const AxisymmetricField& field, ReferenceComponent c, double r, double theta) {
  const int L = component_order(c);
  if (is_potential(c)) {
    return field.radial_values(L, r).potential * angular::assoc_legendre_theta_column(L, 1, theta)[L];
  }
  const FieldSample s = field.component(L, r, theta);
  return is_radial(c) ? s.B_r : s.B_theta;
}

radial::PolyExp closed_form_profile(const ClosedForm& form) {
  using radial::PolyExp;
  const Rational decay(2, 3);
  PolyExp bracket = PolyExp::monomial(form.tail, form.tail_power);
  for (const auto& [coef, k] : form.exp_block) bracket += PolyExp::monomial(coef, k, decay);
  // sin = P_1^1, cos = P_1, 4cos^2 sin - sin^3 = (2/3) P_3^1, 5cos^3 - 3cos = 2 P_3
  Rational angular = 1;
  if (form.angle == ClosedForm::Angle::sin_cubic_mix) angular = Rational(2, 3);
  if (form.angle == ClosedForm::Angle::cos_cubic_mix) angular = 2;
  return (form.prefactor * angular) * bracket;
}

}  // namespace atomfield::field
