#include "common.hpp"

#include "atomfield/angular/legendre.hpp"
#include "atomfield/multipole/current_series.hpp"
#include "atomfield/oracle/spinor.hpp"
#include "atomfield/radial/hydrogen.hpp"
#include "atomfield/radial/quadrature.hpp"

#include <functional>
#include <numbers>

namespace atomfield::verify {

using namespace detail;
using multipole::CurrentPart;
using multipole::QuantumState;
using radial::PolyExp;

namespace {

// Analytic comparisons resolve values down to 1e-12 of the grid maximum.
// Paths with a numeric theta derivative carry round-off of about 1e-12 of
// the grid maximum in absolute terms, so their relative error is measured
// against max(|b|, 1e-4 * grid max).
constexpr double analytic_floor = 1e-12;
constexpr double difference_floor = 1e-4;

constexpr int grid_n = 40;
constexpr int oracle_n = 4;

struct Grid {
  std::vector<double> radii = log_space(0.1, 30.0, grid_n);
  std::vector<double> angles = cell_centres(grid_n);
};

struct DensityEvaluator {
  radial::RadialEvaluator value;
  radial::RadialEvaluator derivative;
  explicit DensityEvaluator(const PolyExp& rho) : value(rho), derivative(rho.derivative()) {}
  oracle::RadialDensity operator()(double r) const { return {value(r), derivative(r)}; }
};

// Accumulates grid values of a pair (computed, reference) and reports the
// floored relative error once the reference scale is known.
class PairCollector {
 public:
  void add(double computed, double reference) {
    got_.push_back(computed);
    ref_.push_back(reference);
    scale_ = std::max(scale_, std::abs(reference));
  }
  double error(double floor) const {
    MaxError err;
    for (std::size_t i = 0; i < got_.size(); ++i) err.add(relative_error(got_[i], ref_[i], floor * scale_));
    return err.value;
  }

 private:
  std::vector<double> got_;
  std::vector<double> ref_;
  double scale_ = 0.0;
};

struct LsErrors {
  MaxError orbital;
  MaxError spin;
  MaxError total;
  MaxError ladder_vs_difference;
  int states = 0;
};

void check_ls_state(int l, int m, int twice_ms, const DensityEvaluator& rho, const PolyExp& density, const Grid& g,
                    LsErrors& errs) {
  const QuantumState state = QuantumState::ls(l, m, angular::HalfInteger::from_twice(twice_ms), oracle_n);
  const multipole::SeriesEvaluator orbital(multipole::current_series(state, density, CurrentPart::orbital));
  const multipole::SeriesEvaluator spin(multipole::current_series(state, density, CurrentPart::spin));
  const multipole::SeriesEvaluator total(multipole::current_series(state, density, CurrentPart::total));
  PairCollector po;
  PairCollector ps;
  PairCollector pt;
  PairCollector pd;
  for (double r : g.radii) {
    const auto d = rho(r);
    for (double t : g.angles) {
      const double o = oracle::direct_orbital_current(l, m, d, r, t);
      const double s = oracle::direct_spin_current(l, m, twice_ms, d, r, t, oracle::DerivativeMode::ladder);
      const double s_fd = oracle::direct_spin_current(l, m, twice_ms, d, r, t, oracle::DerivativeMode::finite_difference);
      po.add(orbital(r, t), o);
      ps.add(spin(r, t), s);
      pt.add(total(r, t), o + s);
      pd.add(s_fd, s);
    }
  }
  errs.orbital.add(po.error(analytic_floor));
  errs.spin.add(ps.error(analytic_floor));
  errs.total.add(pt.error(analytic_floor));
  errs.ladder_vs_difference.add(pd.error(difference_floor));
  ++errs.states;
}

struct JErrors {
  MaxError total;
  MaxError chain;
  MaxError orbital;
  MaxError spin;
  MaxError azimuthal;
  MaxError phi_independence;
  MaxError norm;
  int states = 0;
};

void check_j_state(int l, int twice_j, int twice_mj, const DensityEvaluator& rho, const PolyExp& density,
                   const Grid& g, JErrors& errs) {
  const bool upper = twice_j == 2 * l + 1;
  const QuantumState state = QuantumState::coupled(l, angular::HalfInteger::from_twice(twice_j),
                                                   angular::HalfInteger::from_twice(twice_mj), oracle_n);
  const multipole::SeriesEvaluator total(multipole::current_series(state, density, CurrentPart::total));
  const multipole::SeriesEvaluator orbital(multipole::current_series(state, density, CurrentPart::orbital));
  const multipole::SeriesEvaluator spin(multipole::current_series(state, density, CurrentPart::spin));
  PairCollector pt;
  PairCollector pc;
  PairCollector po;
  PairCollector ps;
  PairCollector pphi;
  for (double r : g.radii) {
    const auto d = rho(r);
    for (double t : g.angles) {
      const auto direct = oracle::direct_total_current(upper, l, twice_mj, d, r, t);
      pt.add(total(r, t), direct.factorized);
      pc.add(direct.chain, direct.factorized);
      po.add(orbital(r, t), direct.orbital);
      ps.add(spin(r, t), direct.spin);
      pphi.add(oracle::direct_total_current(upper, l, twice_mj, d, r, t, 1.3).factorized, direct.factorized);
    }
  }
  for (double t : g.angles) {
    for (double phi : {0.0, 0.9, 2.5}) {
      const auto sd = oracle::spin_density(upper, l, twice_mj, t, phi);
      errs.azimuthal.add(std::abs(sd.sigma_phi) + sd.max_imaginary);
    }
  }
  const double norm = 2 * std::numbers::pi * radial::gauss_legendre(
                                                 [&](double x) {
                                                   const auto psi = oracle::spinor_angular(upper, l, twice_mj, std::acos(x), 0.0);
                                                   return std::norm(psi.up) + std::norm(psi.down);
                                                 },
                                                 -1.0, 1.0);
  errs.norm.add(std::abs(norm - 1.0));
  errs.total.add(pt.error(analytic_floor));
  errs.chain.add(pc.error(difference_floor));
  errs.orbital.add(po.error(analytic_floor));
  errs.spin.add(ps.error(difference_floor));
  errs.phi_independence.add(pphi.error(analytic_floor));
  ++errs.states;
}

}  // namespace

std::vector<CheckResult> verify_oracle() {
  const Grid g;
  LsErrors ls;
  JErrors js;
  for (int l = 0; l <= 3; ++l) {
    const PolyExp density = radial::hydrogen_radial(oracle_n, l).density();
    const DensityEvaluator rho(density);
    for (int m = -l; m <= l; ++m) {
      for (int tms : {-1, 1}) check_ls_state(l, m, tms, rho, density, g, ls);
    }
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1) continue;
      for (int tm = -tj; tm <= tj; tm += 2) check_j_state(l, tj, tm, rho, density, g, js);
    }
  }
  const std::string ls_note = std::to_string(ls.states) + " LS states, 40 x 40 grid, n = 4";
  const std::string j_note = std::to_string(js.states) + " J states, 40 x 40 grid, n = 4";
  const std::string fd_note = "; floor 1e-4 of grid max for the numeric theta derivative";
  return {
      judge("LS orbital current: multipoles vs direct wavefunction", ls.orbital.value, 1e-10, ls_note),
      judge("LS spin current: multipoles vs direct wavefunction", ls.spin.value, 1e-10, ls_note),
      judge("LS total current: multipoles vs direct wavefunction", ls.total.value, 1e-10, ls_note),
      judge("LS spin current: ladder vs finite-difference theta derivative", ls.ladder_vs_difference.value, 1e-7,
            ls_note + fd_note),
      judge("J total current: multipoles vs factorized spinor current", js.total.value, 1e-10, j_note),
      judge("J total current: factorized vs spin-density chain", js.chain.value, 1e-7, j_note + fd_note),
      judge("J orbital part: multipoles vs spinor components", js.orbital.value, 1e-10, j_note),
      judge("J spin part: multipoles vs spin-density curl", js.spin.value, 1e-7, j_note + fd_note),
      judge("J spin density has no azimuthal or imaginary part", js.azimuthal.value, 1e-13, j_note),
      judge("J total current independent of phi", js.phi_independence.value, 1e-12, j_note),
      judge("J spinors normalized over the sphere", js.norm.value, 1e-12, j_note),
  };
}

}  // namespace atomfield::verify
