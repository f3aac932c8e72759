#pragma once

#include "atomfield/field/closed_form.hpp"
#include "atomfield/field/field.hpp"
#include "atomfield/multipole/current_series.hpp"

namespace atomfield::field {

/// State -> current multipoles -> vector-potential multipoles -> field.
struct Pipeline {
  MultipoleSeries current;
  MultipoleSeries potential;
  AxisymmetricField field;
};

/// Propagates radial::RadialIntegralError for non-integrable densities.
Pipeline build_pipeline(const multipole::QuantumState& state, const radial::PolyExp& density,
                        multipole::CurrentPart part = multipole::CurrentPart::total);
Pipeline build_pipeline(const multipole::QuantumState& state, const radial::SampledProfile& density,
                        multipole::CurrentPart part = multipole::CurrentPart::total);

/// The state and current part behind a worked example, with the hydrogen
/// n = 3, l = 2 density.
Pipeline worked_example_pipeline(WorkedExample example);

/// Pipeline value of one closed-form component at (r, theta), angular factor included.
double pipeline_component(const AxisymmetricField& field, ReferenceComponent c, double r, double theta);

/// Closed form of a component as an exact radial PolyExp in the pipeline's
/// normalization (the coefficient of P_L^1 for A and B_theta, of P_L for B_r).
radial::PolyExp closed_form_profile(const ClosedForm& form);

}  // namespace atomfield::field
