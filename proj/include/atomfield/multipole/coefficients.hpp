#pragma once

#include "atomfield/angular/angular_index.hpp"
#include "atomfield/angular/rational.hpp"

#include <map>

namespace atomfield::multipole {

using angular::HalfInteger;

enum class TableKind { orbital, total };

/// Exact multipole coefficients alpha_L (odd L) of an angular current profile.
///
/// Orbital tables are normalized so that the angular factor of the orbital
/// current, f_lm(theta) = m |Y_l^m|^2 / sin(theta), equals
/// (1/pi) sum_L alpha_L P_L^1(cos theta). That choice gives alpha_1 = 3m/8.
///
/// Total tables follow
///   j = +-(mu_B / 4 pi) {dR^2/dr + [2 -+ (2j+1)] R^2/r} sum_L alpha_L P_L^1(cos theta),
/// upper sign for j = l + 1/2.
struct CoefficientTable {
  TableKind kind = TableKind::orbital;
  int l = 0;   // orbital tables
  int ml = 0;  // orbital tables
  HalfInteger j;   // total tables
  HalfInteger mj;  // total tables
  std::map<int, Rational> alphas;

  int max_L() const { return alphas.empty() ? 0 : alphas.rbegin()->first; }
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// alpha^{lm}_L for L = 1, 3, ..., 2l-1. m = 0 gives an empty table.
/// Throws std::domain_error if l < 0 or |m| > l.
CoefficientTable orbital_coefficients(int l, int m);

/// alpha^{j m_j}_L for L = 1, 3, ..., 2j, computed for both l = j + 1/2 and
/// l = j - 1/2 and required to agree (throws std::logic_error otherwise).
/// Throws std::domain_error if j is not a positive half-integer or |m_j| > j.
CoefficientTable total_coefficients(HalfInteger j, HalfInteger mj);

/// The same table derived from one specific l (l = j +- 1/2).
/// `reduced` selects the closed forms in which the vanishing top term for
/// j = l - 1/2 is dropped and the top term for j = l + 1/2 is rewritten with
/// (l+m+1) C^{2l 0}_{l m+1 l -(m+1)} = (l-m) C^{2l 0}_{l m l -m}; that form
/// divides by l+m+1 and is rejected (std::domain_error) when m_j = -j.
CoefficientTable total_coefficients_for_l(int l, HalfInteger j, HalfInteger mj, bool reduced = false);

struct SpinTerm {
  Rational deriv;  // multiplies dR^2/dr
  Rational over_r; // multiplies R^2/r
  friend bool operator==(const SpinTerm&, const SpinTerm&) = default;
};

/// Spin-current expansion for an S_z eigenstate |l m m_s>:
///   j^s = 2 m_s mu_B (2l+1)/(4 pi) (-1)^m sum_L [deriv dR^2/dr + over_r R^2/r] P_L^1,
/// L = 1, 3, ..., 2l+1. The spin current does not factor into a single radial
/// times angular product, hence two coefficients per order.
struct SpinExpansion {
  int l = 0;
  int m = 0;
  HalfInteger ms = HalfInteger::from_twice(1);
  std::map<int, SpinTerm> entries;

  /// 2 m_s (2l+1) (-1)^m / 4: the prefactor in units mu_B / pi.
  Rational prefactor() const;
};

/// Throws std::domain_error if l < 0, |m| > l or m_s != +-1/2.
SpinExpansion spin_coefficients(int l, int m, HalfInteger ms);

}  // namespace atomfield::multipole
