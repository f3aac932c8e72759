#pragma once

#include <complex>
#include <stdexcept>

namespace atomfield::oracle {

// Brute-force current densities evaluated straight from the wavefunctions.
// Nothing here touches the multipole machinery: spherical harmonics come from
// the explicit power-sum form of P_l^m with factorial normalization.
//
// Units: r in a0; R^2 in a0^-3; currents in mu_B / (pi a0^4), the unit of the
// multipole series, so a physical current c * mu_B / a0^4 is returned as pi * c.

using Complex = std::complex<double>;

/// P_l^m(cos theta), m >= 0, without Condon-Shortley phase, from the explicit
/// derivative of the Legendre power sum. Zero when m > l.
double explicit_legendre(int l, int m, double theta);

/// Y_l^m(theta, phi) = (-1)^m sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m e^{i m phi}
/// for m >= 0 and Y_l^{-m} = (-1)^m conj(Y_l^m). Zero when |m| > l.
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// d Y_l^m / d theta from the ladder identities (no 1/sin(theta) terms).
Complex spherical_harmonic_dtheta(int l, int m, double theta, double phi);

/// Radial density R^2 and its derivative at one radius.
struct RadialDensity {
  double value = 0.0;       // R^2(r)
  double derivative = 0.0;  // dR^2/dr
};

/// Thrown when a 1/sin(theta) evaluation is requested too close to a pole.
class PoleProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// -2 (R^2/r) m |Y_l^m|^2 / sin(theta). Throws PoleProximityError if
/// sin(theta) < 1e-12 and m != 0.
double direct_orbital_current(int l, int m, RadialDensity rho, double r, double theta);

enum class DerivativeMode { ladder, finite_difference };

/// 2 m_s [sin(theta) dR^2/dr |Y|^2 + cos(theta) (R^2/r) d|Y|^2/dtheta] for the
/// S_z eigenstate |l m m_s>, m_s given as twice its value (+-1).
/// finite_difference uses a 5-point central stencil with h = 1e-4.
double direct_spin_current(int l, int m, int twice_ms, RadialDensity rho, double r, double theta,
                           DerivativeMode mode = DerivativeMode::ladder);

/// Two-component spinor of a J eigenstate with j = l +- 1/2 (upper = l + 1/2),
/// m_j = m + 1/2, at one point (the radial factor R is left out).
struct SpinorAngular {
  Complex up;
  Complex down;
};
SpinorAngular spinor_angular(bool upper, int l, int twice_mj, double theta, double phi);

/// Expectation values of the spherical Pauli matrices divided by R^2.
/// The imaginary parts vanish for these states and are kept for checks.
struct SpinDensity {
  double sigma_r = 0.0;
  double sigma_theta = 0.0;
  double sigma_phi = 0.0;
  double max_imaginary = 0.0;
};
SpinDensity spin_density(bool upper, int l, int twice_mj, double theta, double phi);

/// Total current of a J eigenstate by two independent routes:
///  factorized: the closed product of the radial bracket and angular brace;
///  chain: orbital current of both spinor components plus the spin current
///         -(1/r)[d(r <sigma_theta>)/dr - d<sigma_r>/dtheta] with a numeric
///         theta derivative;
/// orbital and spin hold the two parts of the chain.
struct TotalCurrent {
  double factorized = 0.0;
  double chain = 0.0;
  double orbital = 0.0;
  double spin = 0.0;
};
/// Throws std::domain_error for invalid labels and PoleProximityError near the poles.
TotalCurrent direct_total_current(bool upper, int l, int twice_mj, RadialDensity rho, double r, double theta,
                                  double phi = 0.0);

/// The real product Y_l^{m*} Y_l^{m+1} e^{-i phi} (imaginary part returned via out-parameter).
double ladder_product(int l, int m, double theta, double phi, double* imaginary = nullptr);

}  // namespace atomfield::oracle
