#include "atomfield/multipole/coefficients.hpp"

#include "atomfield/angular/clebsch_gordan.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace atomfield::multipole {

using angular::clebsch_gordan;
using angular::SqrtRational;
using angular::SurdSum;

namespace {

int parity_sign(int m) { return (m % 2 == 0) ? 1 : -1; }

// C^{K0}_{l0l0} C^{K0}_{l a l -a}: the coefficient pairs behind |Y_l^a|^2, always rational.
Rational density_pair(int l, int a, int K) {
  if (K < 0) return 0;
  return (clebsch_gordan(l, 0, l, 0, K, 0) * clebsch_gordan(l, a, l, -a, K, 0)).require_rational();
}

void check_total_label(HalfInteger j, HalfInteger mj) {
  if (j.is_integer() || j.twice() < 1) throw std::domain_error("j >= 1/2 half-integral violated (j = " + j.str() + ")");
  if (mj.is_integer()) throw std::domain_error("m_j half-integral violated (m_j = " + mj.str() + ")");
  if (std::abs(mj.twice()) > j.twice()) {
    throw std::domain_error("|m_j| <= j violated (j = " + j.str() + ", m_j = " + mj.str() + ")");
  }
}

}  // namespace

CoefficientTable orbital_coefficients(int l, int m) {
  if (l < 0) throw std::domain_error("l >= 0 violated");
  if (std::abs(m) > l) {
    throw std::domain_error("|m_l| <= l violated (l = " + std::to_string(l) + ", m_l = " + std::to_string(m) + ")");
  }
  CoefficientTable table;
  table.kind = TableKind::orbital;
  table.l = l;
  table.ml = m;
  if (m == 0) return table;

  // alpha_L = (-1)^m (2l+1)/8 C^{L0}_{l-1 0 l 0}
  //           { sqrt((l-m-1)(l-m)/(L(L+1))) C^{L1}_{l-1 m+1 l -m}
  //             - sqrt((l+m-1)(l+m)/(L(L+1))) C^{L-1}_{l-1 m-1 l -m} }
  const SqrtRational front = SqrtRational::from_rational(Rational(parity_sign(m) * (2 * l + 1), 8));
  for (int L = 1; L <= 2 * l - 1; L += 2) {
    const SqrtRational parity = clebsch_gordan(l - 1, 0, l, 0, L, 0);
    const int ladder = L * (L + 1);
    const SqrtRational raise(1, Rational((l - m - 1) * (l - m), ladder));
    const SqrtRational lower(1, Rational((l + m - 1) * (l + m), ladder));
    SurdSum sum;
    sum += front * parity * raise * clebsch_gordan(l - 1, m + 1, l, -m, L, 1);
    sum -= front * parity * lower * clebsch_gordan(l - 1, m - 1, l, -m, L, -1);
    table.alphas[L] = sum.require_rational();
  }
  return table;
}

CoefficientTable total_coefficients_for_l(int l, HalfInteger j, HalfInteger mj, bool reduced) {
  check_total_label(j, mj);
  if (l < 0 || std::abs(j.twice() - 2 * l) != 1) {
    throw std::domain_error("j = l +- 1/2 violated (l = " + std::to_string(l) + ", j = " + j.str() + ")");
  }
  const bool upper = j.twice() == 2 * l + 1;
  const int m = (mj.twice() - 1) / 2;
  const int a = l - m;      // weight of the Y^m component (j = l - 1/2)
  const int b = l + m + 1;  // weight of the Y^{m+1} component (j = l - 1/2)

  if (reduced && upper && b == 0) {
    throw std::domain_error("reduced top-order form divides by l+m+1 = 0 (m_j = -j)");
  }

  auto c1 = [&](int K) { return density_pair(l, m, K); };
  auto c2 = [&](int K) { return density_pair(l, m + 1, K); };

  const int top = reduced ? 2 * l - 1 : 2 * l + 1;
  CoefficientTable table;
  table.kind = TableKind::total;
  table.j = j;
  table.mj = mj;

  for (int L = 1; L <= top; L += 2) {
    Rational x = 0;
    // Terms fed by P_{L-1} (shifted from the sin(theta) and cos(theta) d/dtheta recurrences).
    const Rational first_norm(1, L * (2 * L - 1));
    if (!upper) {
      x += first_norm * (Rational(a * (L - 2 * b)) * c1(L - 1) + Rational(b * (L - 2 * a)) * c2(L - 1));
    } else {
      x += first_norm * (Rational(b * (L + 2 * a)) * c1(L - 1) + Rational(a * (L + 2 * b)) * c2(L - 1));
    }
    // Terms fed by P_{L+1}.
    if (L <= 2 * l - 1) {
      const Rational second_norm(1, (L + 1) * (2 * L + 3));
      if (!upper) {
        x -= second_norm * (Rational(a * (L + 1 + 2 * b)) * c1(L + 1) + Rational(b * (L + 1 + 2 * a)) * c2(L + 1));
      } else {
        x -= second_norm * (Rational(b * (L + 1 - 2 * a)) * c1(L + 1) + Rational(a * (L + 1 - 2 * b)) * c2(L + 1));
      }
    }
    table.alphas[L] = (upper ? parity_sign(m) : -parity_sign(m)) * x;
  }

  if (reduced && upper) {
    // (2l+1)^2 / ((4l+1)(l+m+1)) C^{2l 0}_{l0l0} C^{2l 0}_{l m l -m}
    const Rational top_term = Rational((2 * l + 1) * (2 * l + 1), (4 * l + 1) * b) * c1(2 * l);
    table.alphas[2 * l + 1] = parity_sign(m) * top_term;
  }

  // The unreduced j = l - 1/2 sum runs to 2l+1 = 2j+2; that order must cancel.
  if (!upper && !reduced) {
    auto it = table.alphas.find(2 * l + 1);
    if (it != table.alphas.end()) {
      if (it->second != 0) throw std::logic_error("top multipole of a j = l - 1/2 current did not cancel");
      table.alphas.erase(it);
    }
  }
  return table;
}

CoefficientTable total_coefficients(HalfInteger j, HalfInteger mj) {
  check_total_label(j, mj);
  const int l_lower = (j.twice() + 1) / 2;  // j = l - 1/2
  const int l_upper = (j.twice() - 1) / 2;  // j = l + 1/2
  CoefficientTable from_lower = total_coefficients_for_l(l_lower, j, mj);
  CoefficientTable from_upper = total_coefficients_for_l(l_upper, j, mj);
  if (from_lower.alphas != from_upper.alphas) {
    throw std::logic_error("total-current coefficients depend on l for j = " + j.str() + ", m_j = " + mj.str());
  }
  return from_upper;
}

Rational SpinExpansion::prefactor() const {
  return Rational(ms.twice() * (2 * l + 1) * parity_sign(m), 4);
}

SpinExpansion spin_coefficients(int l, int m, HalfInteger ms) {
  if (l < 0) throw std::domain_error("l >= 0 violated");
  if (std::abs(m) > l) {
    throw std::domain_error("|m_l| <= l violated (l = " + std::to_string(l) + ", m_l = " + std::to_string(m) + ")");
  }
  if (std::abs(ms.twice()) != 1) throw std::domain_error("m_s = +-1/2 violated");
  SpinExpansion expansion;
  expansion.l = l;
  expansion.m = m;
  expansion.ms = ms;
  for (int L = 1; L <= 2 * l + 1; L += 2) {
    SpinTerm term;
    const Rational below = density_pair(l, m, L - 1) / (2 * L - 1);
    term.deriv += below;
    term.over_r -= (L - 1) * below;
    if (L <= 2 * l - 1) {
      const Rational above = density_pair(l, m, L + 1) / (2 * L + 3);
      term.deriv -= above;
      term.over_r -= (L + 2) * above;
    }
    expansion.entries[L] = term;
  }
  return expansion;
}

}  // namespace atomfield::multipole
