#pragma once

#include "atomfield/multipole/quantum_state.hpp"
#include "atomfield/multipole/series.hpp"

namespace atomfield::multipole {

/// Which part of the current density to expand.
enum class CurrentPart { orbital, spin, total };

/// Multipole series of the azimuthal current j_phi(r, theta) = sum_L j_L(r) P_L^1(cos theta)
/// for a state with radial density R_nl^2 (units mu_B / (pi a0^4)).
///
/// LS states: orbital part from the Table-1 coefficients, spin part from the
/// SpinExpansion; total is their sum. J states: total from the Table-2
/// coefficients, orbital part as the spin-weighted sum of the two components'
/// orbital currents, spin = total - orbital.
///
/// Zero entries are dropped, so an m_l = 0 orbital series is empty.
/// Throws radial::RadialIntegralError if R^2 r^2 is not integrable over [0, inf).
MultipoleSeries current_series(const QuantumState& state, const radial::PolyExp& density,
                               CurrentPart part = CurrentPart::total);

/// The same construction for a density sampled on a grid.
MultipoleSeries current_series(const QuantumState& state, const radial::SampledProfile& density,
                               CurrentPart part = CurrentPart::total);

/// Vector-potential series from a current series, order by order.
/// Analytic entries use the exact two-sided radial integral; sampled entries
/// use spline quadrature. Propagates radial::RadialIntegralError.
MultipoleSeries vector_potential_series(const MultipoleSeries& current);

}  // namespace atomfield::multipole
