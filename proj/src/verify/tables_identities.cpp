#include "common.hpp"

#include "atomfield/angular/clebsch_gordan.hpp"
#include "atomfield/angular/legendre.hpp"
#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/oracle/spinor.hpp"
#include "atomfield/radial/quadrature.hpp"

#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace atomfield::verify {

using namespace detail;
using angular::AngularIndex;
using angular::clebsch_gordan;
using angular::HalfInteger;
using angular::SqrtRational;
using angular::SurdSum;
using multipole::CoefficientTable;

namespace detail {

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> cell_centres(int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = (i + 0.5) * std::numbers::pi / n;
  return out;
}

}  // namespace detail

namespace {

struct PrintedRow {
  int a = 0;  // l, or 2j
  int b = 0;  // m, or 2m_j
  std::vector<Rational> alphas;  // L = 1, 3, 5, ...
};

const std::vector<PrintedRow>& printed_orbital() {
  static const std::vector<PrintedRow> rows{
      {1, 1, {Rational(3, 8)}},
      {2, 1, {Rational(3, 8), Rational(2, 8)}},
      {2, 2, {Rational(6, 8), Rational(-1, 8)}},
      {3, 1, {Rational(3, 8), Rational(7, 24), Rational(5, 24)}},
      {3, 2, {Rational(6, 8), Rational(7, 24), Rational(-4, 24)}},
      {3, 3, {Rational(9, 8), Rational(-7, 24), Rational(1, 24)}},
  };
  return rows;
}

const std::vector<PrintedRow>& printed_total() {
  static const std::vector<PrintedRow> rows{
      {1, 1, {Rational(1)}},
      {3, 1, {Rational(2, 5), Rational(3, 5)}},
      {3, 3, {Rational(6, 5), Rational(-1, 5)}},
      {5, 1, {Rational(9, 35), Rational(4, 15), Rational(10, 21)}},
      {5, 3, {Rational(27, 35), Rational(7, 15), Rational(-5, 21)}},
      {5, 5, {Rational(9, 7), Rational(-1, 3), Rational(1, 21)}},
      {7, 1, {Rational(4, 21), Rational(2, 11), Rational(20, 91), Rational(175, 429)}},
      {7, 3, {Rational(4, 7), Rational(14, 33), Rational(68, 273), Rational(-35, 143)}},
      {7, 5, {Rational(20, 21), Rational(10, 33), Rational(-92, 273), Rational(35, 429)}},
      {7, 7, {Rational(4, 3), Rational(-14, 33), Rational(4, 39), Rational(-5, 429)}},
  };
  return rows;
}

CheckResult compare_row(const std::string& name, const CoefficientTable& table, const PrintedRow& row) {
  std::map<int, Rational> expected;
  for (std::size_t i = 0; i < row.alphas.size(); ++i) expected[static_cast<int>(2 * i + 1)] = row.alphas[i];
  if (table.alphas == expected) return exact(name, true, std::to_string(expected.size()) + " entries exact");
  std::string note = "computed {";
  for (const auto& [L, a] : table.alphas) note += " " + std::to_string(L) + ":" + to_string(a);
  note += " } printed {";
  for (const auto& [L, a] : expected) note += " " + std::to_string(L) + ":" + to_string(a);
  return exact(name, false, note + " }");
}

}  // namespace

std::vector<CheckResult> verify_tables() {
  std::vector<CheckResult> out;
  int entries = 0;
  for (const auto& row : printed_orbital()) {
    out.push_back(compare_row("table1 l=" + std::to_string(row.a) + " m=" + std::to_string(row.b),
                              multipole::orbital_coefficients(row.a, row.b), row));
    entries += static_cast<int>(row.alphas.size());
  }
  for (const auto& row : printed_total()) {
    const HalfInteger j = HalfInteger::from_twice(row.a);
    const HalfInteger mj = HalfInteger::from_twice(row.b);
    std::string name = "table2 j=" + j.str() + " mj=" + mj.str();
    try {
      out.push_back(compare_row(name, multipole::total_coefficients(j, mj), row));
    } catch (const std::exception& e) {
      out.push_back(exact(name, false, e.what()));
    }
    entries += static_cast<int>(row.alphas.size());
  }

  // Both l = j +- 1/2 routes agree (total_coefficients throws otherwise), for every m_j.
  {
    bool ok = true;
    std::string note;
    for (int tj = 1; tj <= 9; tj += 2) {
      for (int tm = -tj; tm <= tj; tm += 2) {
        try {
          (void)multipole::total_coefficients(HalfInteger::from_twice(tj), HalfInteger::from_twice(tm));
        } catch (const std::exception& e) {
          ok = false;
          note = e.what();
        }
      }
    }
    out.push_back(exact("total coefficients independent of l (j <= 9/2, all m_j)", ok, note));
  }

  // Reduced closed forms agree with the unreduced sums wherever they are defined.
  {
    bool ok = true;
    int compared = 0;
    for (int l = 0; l <= 4; ++l) {
      for (int tj : {2 * l - 1, 2 * l + 1}) {
        if (tj < 1) continue;
        for (int tm = -tj; tm <= tj; tm += 2) {
          const bool upper = tj == 2 * l + 1;
          if (upper && tm == -tj) continue;  // divides by l+m+1 = 0
          const auto j = HalfInteger::from_twice(tj);
          const auto mj = HalfInteger::from_twice(tm);
          ok = ok && multipole::total_coefficients_for_l(l, j, mj, true).alphas ==
                         multipole::total_coefficients_for_l(l, j, mj, false).alphas;
          ++compared;
        }
      }
    }
    out.push_back(exact("reduced top-order forms match unreduced sums", ok, std::to_string(compared) + " tables"));
  }

  // Antisymmetry in m and dipole linearity alpha_1 = 3m/8.
  {
    bool anti = true;
    bool dipole = true;
    for (int l = 1; l <= 5; ++l) {
      for (int m = 1; m <= l; ++m) {
        const auto plus = multipole::orbital_coefficients(l, m);
        const auto minus = multipole::orbital_coefficients(l, -m);
        for (const auto& [L, a] : plus.alphas) anti = anti && minus.alphas.at(L) == -a;
        dipole = dipole && plus.alphas.at(1) == Rational(3 * m, 8);
      }
    }
    out.push_back(exact("orbital alpha_L(-m) = -alpha_L(m), l <= 5", anti));
    out.push_back(exact("orbital dipole alpha_1 = 3m/8, l <= 5", dipole));
  }

  // Cutoffs: orbital 2l-1, spin 2l+1, total 2j.
  {
    bool ok = true;
    for (int l = 1; l <= 5; ++l) {
      for (int m = -l; m <= l; ++m) {
        if (m != 0) ok = ok && multipole::orbital_coefficients(l, m).max_L() == 2 * l - 1;
        ok = ok && multipole::spin_coefficients(l, m, HalfInteger::from_twice(1)).entries.rbegin()->first == 2 * l + 1;
      }
    }
    for (int tj = 1; tj <= 9; tj += 2) {
      for (int tm = -tj; tm <= tj; tm += 2) {
        const auto t = multipole::total_coefficients(HalfInteger::from_twice(tj), HalfInteger::from_twice(tm));
        ok = ok && t.max_L() == tj && t.alphas.size() == static_cast<std::size_t>((tj + 1) / 2);
      }
    }
    out.push_back(exact("table shapes: orbital 2l-1, spin 2l+1, total 2j", ok));
  }

  out.push_back(exact("printed table entries reproduced", all_passed(out),
                      std::to_string(entries) + " entries in " +
                          std::to_string(printed_orbital().size() + printed_total().size()) + " rows"));
  return out;
}

namespace {

// Clebsch-Gordan values for fixed (l1, l2), keyed by (2m1, 2L, 2M).
using CgCache = std::map<std::tuple<int, int, int>, SqrtRational>;

CgCache cg_table(int tl1, int tl2) {
  CgCache cache;
  for (int tL = std::abs(tl1 - tl2); tL <= tl1 + tl2; tL += 2) {
    for (int tM = -tL; tM <= tL; tM += 2) {
      for (int tm1 = -tl1; tm1 <= tl1; tm1 += 2) {
        const int tm2 = tM - tm1;
        if (std::abs(tm2) > tl2) continue;
        cache[{tm1, tL, tM}] = clebsch_gordan(AngularIndex::from_twice(tl1, tm1), AngularIndex::from_twice(tl2, tm2),
                                              AngularIndex::from_twice(tL, tM));
      }
    }
  }
  return cache;
}

CheckResult cg_orthogonality() {
  bool ok = true;
  int sums = 0;
  for (int tl1 = 0; tl1 <= 6; ++tl1) {
    for (int tl2 = 0; tl2 <= 6; ++tl2) {
      const CgCache cache = cg_table(tl1, tl2);
      for (int tL = std::abs(tl1 - tl2); tL <= tl1 + tl2; tL += 2) {
        for (int tK = std::abs(tl1 - tl2); tK <= tl1 + tl2; tK += 2) {
          for (int tM = -std::min(tL, tK); tM <= std::min(tL, tK); tM += 2) {
            SurdSum sum;
            for (int tm1 = -tl1; tm1 <= tl1; tm1 += 2) {
              const auto a = cache.find({tm1, tL, tM});
              const auto b = cache.find({tm1, tK, tM});
              if (a != cache.end() && b != cache.end()) sum += a->second * b->second;
            }
            const auto value = sum.to_rational();
            ok = ok && value && *value == (tL == tK ? 1 : 0);
            ++sums;
          }
        }
      }
    }
  }
  return exact("CG orthogonality, l1, l2 <= 3 (integer and half-integer)", ok, std::to_string(sums) + " sums exact");
}

CheckResult cg_selection_rules() {
  bool ok = true;
  int checked = 0;
  for (int l1 = 0; l1 <= 4; ++l1) {
    for (int l2 = 0; l2 <= 4; ++l2) {
      for (int L = 0; L <= 9; ++L) {
        const bool triangle = std::abs(l1 - l2) <= L && L <= l1 + l2;
        if ((l1 + l2 + L) % 2 == 1 || !triangle) {
          ok = ok && clebsch_gordan(l1, 0, l2, 0, L, 0).is_zero();
          ++checked;
        }
        for (int m1 = -l1; m1 <= l1; ++m1) {
          for (int m2 = -l2; m2 <= l2; ++m2) {
            for (int M = -L; M <= L; ++M) {
              if (M != m1 + m2 || !triangle) {
                ok = ok && clebsch_gordan(l1, m1, l2, m2, L, M).is_zero();
                ++checked;
              }
            }
          }
        }
      }
    }
  }
  return exact("CG selection rules (parity, triangle, m1 + m2 = M), l <= 4", ok,
               std::to_string(checked) + " forbidden coefficients are zero");
}

CheckResult legendre_orthogonality() {
  MaxError err;
  for (int m = 0; m <= 8; ++m) {
    for (int p = m; p <= 8; ++p) {
      for (int q = m; q <= 8; ++q) {
        const double integral = radial::gauss_legendre(
            [&](double x) { return angular::assoc_legendre(p, m, x) * angular::assoc_legendre(q, m, x); }, -1.0, 1.0);
        auto norm = [m](int n) {
          double f = 2.0 / (2 * n + 1);
          for (int i = n - m + 1; i <= n + m; ++i) f *= i;
          return f;
        };
        const double expected = p == q ? norm(q) : 0.0;
        err.add(std::abs(integral - expected) / std::sqrt(norm(p) * norm(q)));
      }
    }
  }
  return judge("Legendre orthogonality, p, q <= 8 (Gauss-Legendre)", err.value, 1e-12);
}

template <class Lhs, class Rhs>
double grid_identity(Lhs&& lhs, Rhs&& rhs, int points) {
  double scale = 0.0;
  double worst = 0.0;
  for (double t : cell_centres(points)) {
    const double a = lhs(t);
    const double b = rhs(t);
    scale = std::max({scale, std::abs(a), std::abs(b)});
    worst = std::max(worst, std::abs(a - b));
  }
  return scale > 0.0 ? worst / scale : worst;
}

std::vector<CheckResult> legendre_recurrences() {
  using angular::assoc_legendre;
  auto P = [](int L, int M, double t) { return L < 0 || M > L ? 0.0 : assoc_legendre(L, M, std::cos(t)); };
  MaxError sin_rec;
  MaxError cos_rec;
  MaxError deriv;
  MaxError cos_deriv;
  MaxError reduction;
  for (int L = 0; L <= 8; ++L) {
    for (int m = 0; m <= L; ++m) {
      sin_rec.add(grid_identity([&](double t) { return std::sin(t) * P(L, m, t); },
                                [&](double t) { return (P(L + 1, m + 1, t) - P(L - 1, m + 1, t)) / (2 * L + 1); }, 100));
      cos_rec.add(grid_identity(
          [&](double t) { return std::cos(t) * P(L, m, t); },
          [&](double t) { return ((L - m + 1) * P(L + 1, m, t) + (L + m) * P(L - 1, m, t)) / (2 * L + 1); }, 100));
    }
    deriv.add(grid_identity([&](double t) { return central_difference([&](double s) { return P(L, 0, s); }, t, 1e-4); },
                            [&](double t) { return -P(L, 1, t); }, 100));
    cos_deriv.add(grid_identity(
        [&](double t) { return std::cos(t) * -P(L, 1, t); },
        [&](double t) { return -(L * P(L + 1, 1, t) + (L + 1) * P(L - 1, 1, t)) / (2 * L + 1); }, 100));
  }
  for (int L = 1; L <= 9; ++L) {
    reduction.add(grid_identity(
        [&](double t) {
          return richardson_difference([&](double s) { return std::sin(s) * P(L, 1, s); }, t, 1e-3) / std::sin(t);
        },
        [&](double t) { return L * (L + 1) * P(L, 0, t); }, 100));
  }
  return {
      judge("sin(theta) P_L^m = (P_{L+1}^{m+1} - P_{L-1}^{m+1})/(2L+1), L <= 8", sin_rec.value, 1e-12),
      judge("cos(theta) P_l^m = ((l-m+1) P_{l+1}^m + (l+m) P_{l-1}^m)/(2l+1), l <= 8", cos_rec.value, 1e-12),
      judge("dP_L/dtheta = -P_L^1 (finite differences)", deriv.value, 1e-8),
      judge("cos(theta) dP_L/dtheta = -(L P_{L+1}^1 + (L+1) P_{L-1}^1)/(2L+1)", cos_deriv.value, 1e-12),
      judge("(1/sin) d(sin P_L^1)/dtheta = L(L+1) P_L, L <= 9 (finite differences)", reduction.value, 1e-10),
  };
}

CheckResult ladder_cg_identity() {
  bool ok = true;
  int checked = 0;
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l - 1; ++m) {
      for (int L = 1; L <= 2 * l; ++L) {
        SurdSum diff;
        diff += SqrtRational(1, Rational(L * (L + 1))) * clebsch_gordan(l, -m, l, m + 1, L, 1);
        const SqrtRational root(1, Rational((l - m) * (l + m + 1)));
        diff -= root * clebsch_gordan(l, -(m + 1), l, m + 1, L, 0);
        diff -= root * clebsch_gordan(l, -m, l, m, L, 0);
        ok = ok && diff.is_zero();
        ++checked;
      }
    }
  }
  return exact("sqrt(L(L+1)) C^{L1}_{l -m l m+1} = sqrt((l-m)(l+m+1)) (C^{L0}_{l -(m+1) l m+1} + C^{L0}_{l -m l m}), l <= 4",
               ok, std::to_string(checked) + " cases");
}

CheckResult highest_term_identity() {
  bool ok = true;
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) {
      SurdSum diff;
      diff += SqrtRational::from_rational(l + m + 1) * clebsch_gordan(l, m + 1, l, -(m + 1), 2 * l, 0);
      diff -= SqrtRational::from_rational(l - m) * clebsch_gordan(l, m, l, -m, 2 * l, 0);
      ok = ok && diff.is_zero();
    }
  }
  return exact("(l+m+1) C^{2l 0}_{l m+1 l -(m+1)} = (l-m) C^{2l 0}_{l m l -m}, l <= 4", ok);
}

CheckResult m_over_sin_identity() {
  MaxError err;
  const double phi = 0.7;
  for (int l = 1; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) {
      double scale = 0.0;
      double worst = 0.0;
      for (double t : cell_centres(50)) {
        const oracle::Complex lhs = static_cast<double>(m) * oracle::spherical_harmonic(l, m, t, phi) / std::sin(t);
        const double front = -0.5 * std::sqrt((2.0 * l + 1) / (2.0 * l - 1));
        const oracle::Complex rhs =
            front * (std::sqrt(static_cast<double>((l - m - 1) * (l - m))) * std::polar(1.0, -phi) *
                         oracle::spherical_harmonic(l - 1, m + 1, t, phi) +
                     std::sqrt(static_cast<double>((l + m - 1) * (l + m))) * std::polar(1.0, phi) *
                         oracle::spherical_harmonic(l - 1, m - 1, t, phi));
        scale = std::max(scale, std::abs(lhs));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      err.add(scale > 0.0 ? worst / scale : worst);
    }
  }
  return judge("m Y_l^m / sin(theta) ladder expansion, l <= 4 (pointwise)", err.value, 1e-10);
}

}  // namespace

std::vector<CheckResult> verify_identities() {
  std::vector<CheckResult> out;
  out.push_back(cg_orthogonality());
  out.push_back(cg_selection_rules());
  out.push_back(legendre_orthogonality());
  for (auto& r : legendre_recurrences()) out.push_back(std::move(r));
  out.push_back(ladder_cg_identity());
  out.push_back(highest_term_identity());
  out.push_back(m_over_sin_identity());
  return out;
}

Scope parse_scope(const std::string& name) {
  static const std::map<std::string, Scope> names{
      {"tables", Scope::tables},   {"identities", Scope::identities}, {"examples", Scope::examples},
      {"oracle", Scope::oracle},   {"physics", Scope::physics},       {"quadrature", Scope::quadrature},
      {"figures", Scope::figures}, {"all", Scope::all}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown verification scope '" + name + "'");
  return it->second;
}

std::string scope_name(Scope scope) {
  switch (scope) {
    case Scope::tables: return "tables";
    case Scope::identities: return "identities";
    case Scope::examples: return "examples";
    case Scope::oracle: return "oracle";
    case Scope::physics: return "physics";
    case Scope::quadrature: return "quadrature";
    case Scope::figures: return "figures";
    case Scope::all: return "all";
  }
  return "?";
}

std::string status_name(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::reported: return "reported";
  }
  return "?";
}

std::vector<CheckResult> run(Scope scope) {
  using Fn = std::vector<CheckResult> (*)();
  const std::vector<std::pair<Scope, Fn>> suites{
      {Scope::tables, verify_tables},   {Scope::identities, verify_identities}, {Scope::examples, verify_examples},
      {Scope::oracle, verify_oracle},   {Scope::physics, verify_physics},       {Scope::quadrature, verify_quadrature},
      {Scope::figures, verify_figures}};
  std::vector<CheckResult> out;
  for (const auto& [s, fn] : suites) {
    if (scope != Scope::all && scope != s) continue;
    try {
      for (auto& r : fn()) out.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.push_back(exact(scope_name(s) + " suite", false, std::string("threw: ") + e.what()));
    }
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == Status::fail; });
}

double relative_error(double a, double b, double floor) {
  const double denom = std::max(std::abs(b), floor);
  if (denom == 0.0) return std::abs(a - b) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(a - b) / denom;
}

}  // namespace atomfield::verify
