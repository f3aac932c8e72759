#pragma once

#include "atomfield/angular/angular_index.hpp"
#include "atomfield/angular/sqrt_rational.hpp"

#include <map>
#include <utility>

namespace atomfield::angular {

/// Exact Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M> (Condon-Shortley phase),
/// from the Racah closed-form sum in rational arithmetic.
///
/// Any combination violating the coupling rules (triangle condition,
/// m1 + m2 = M, |m| <= j, parity of 2j and 2m) yields zero; it never throws.
SqrtRational clebsch_gordan(AngularIndex first, AngularIndex second, AngularIndex total);

/// Integer-l convenience overload: C^{L M}_{l1 m1 l2 m2}.
SqrtRational clebsch_gordan(int l1, int m1, int l2, int m2, int L, int M);

/// Coefficients of Y_L^M in the product Y_{l1}^{m1} Y_{l2}^{m2}:
///   sqrt((2l1+1)(2l2+1) / (4 pi (2L+1))) C^{L0}_{l1 0 l2 0} C^{LM}_{l1 m1 l2 m2}.
///
/// The 1/sqrt(pi) factor is kept out of the exact values: the true coefficient
/// is `coefficients.at({L, M}).to_double() / sqrt(pi)`. Only non-zero entries
/// are stored and every key has M = m1 + m2.
struct HarmonicProduct {
  std::map<std::pair<int, int>, SqrtRational> coefficients;

  /// Numerical coefficient including the 1/sqrt(pi); zero if absent.
  double value(int L, int M) const;
};

HarmonicProduct product_expand(int l1, int m1, int l2, int m2);

}  // namespace atomfield::angular
