#include "atomfield/multipole/current_series.hpp"

#include "atomfield/multipole/coefficients.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <stdexcept>

namespace atomfield::multipole {

using radial::PolyExp;
using radial::SampledProfile;

namespace {

// j_L = deriv * dR^2/dr + over_r * R^2/r
struct RadialPair {
  Rational deriv = 0;
  Rational over_r = 0;
  bool is_zero() const { return deriv == 0 && over_r == 0; }
};

using PairSeries = std::map<int, RadialPair>;

void add_orbital(PairSeries& out, int l, int m, const Rational& weight) {
  if (weight == 0 || m == 0 || std::abs(m) > l) return;
  for (const auto& [L, alpha] : orbital_coefficients(l, m).alphas) out[L].over_r += -2 * weight * alpha;
}

PairSeries orbital_pairs(const QuantumState& state) {
  PairSeries out;
  if (state.coupling() == Coupling::ls) {
    add_orbital(out, state.l(), state.ml(), 1);
    return out;
  }
  const int l = state.l();
  const int m = state.spinor_m();
  const Rational w_lower_m(l - m, 2 * l + 1);
  const Rational w_lower_m1(l + m + 1, 2 * l + 1);
  if (state.is_upper()) {
    add_orbital(out, l, m, w_lower_m1);
    add_orbital(out, l, m + 1, w_lower_m);
  } else {
    add_orbital(out, l, m, w_lower_m);
    add_orbital(out, l, m + 1, w_lower_m1);
  }
  return out;
}

PairSeries total_pairs_coupled(const QuantumState& state) {
  PairSeries out;
  const CoefficientTable table = total_coefficients(state.j(), state.mj());
  // +-(1/4) {dR^2/dr + [2 -+ (2j+1)] R^2/r}
  const int sign = state.is_upper() ? 1 : -1;
  const Rational over_r_factor = 2 - sign * (state.j().twice() + 1);
  for (const auto& [L, alpha] : table.alphas) {
    const Rational scale = sign * alpha / 4;
    out[L].deriv += scale;
    out[L].over_r += scale * over_r_factor;
  }
  return out;
}

PairSeries spin_pairs_ls(const QuantumState& state) {
  PairSeries out;
  const SpinExpansion spin = spin_coefficients(state.l(), state.ml(), state.ms());
  const Rational prefactor = spin.prefactor();
  for (const auto& [L, term] : spin.entries) {
    out[L].deriv += prefactor * term.deriv;
    out[L].over_r += prefactor * term.over_r;
  }
  return out;
}

PairSeries combine(PairSeries a, const PairSeries& b, int sign) {
  for (const auto& [L, pair] : b) {
    a[L].deriv += sign * pair.deriv;
    a[L].over_r += sign * pair.over_r;
  }
  return a;
}

PairSeries pairs_for(const QuantumState& state, CurrentPart part) {
  PairSeries out;
  if (state.coupling() == Coupling::ls) {
    switch (part) {
      case CurrentPart::orbital: out = orbital_pairs(state); break;
      case CurrentPart::spin: out = spin_pairs_ls(state); break;
      case CurrentPart::total: out = combine(orbital_pairs(state), spin_pairs_ls(state), 1); break;
    }
  } else {
    switch (part) {
      case CurrentPart::orbital: out = orbital_pairs(state); break;
      case CurrentPart::spin: out = combine(total_pairs_coupled(state), orbital_pairs(state), -1); break;
      case CurrentPart::total: out = total_pairs_coupled(state); break;
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

}  // namespace

bool MultipoleSeries::is_analytic() const {
  for (const auto& [L, profile] : entries) {
    if (!std::holds_alternative<PolyExp>(profile)) return false;
  }
  return true;
}

const PolyExp& MultipoleSeries::analytic(int L) const {
  const RadialProfile& profile = entries.at(L);
  if (const auto* poly = std::get_if<PolyExp>(&profile)) return *poly;
  throw std::logic_error("multipole entry " + std::to_string(L) + " is sampled, not analytic");
}

double evaluate_profile(const RadialProfile& profile, double r) {
  if (const auto* poly = std::get_if<PolyExp>(&profile)) return static_cast<double>((*poly)(r));
  return std::get<SampledProfile>(profile)(r);
}

SeriesEvaluator::SeriesEvaluator(const MultipoleSeries& series) {
  std::map<std::pair<Rational, int>, angular::SinForm> combined;
  for (const auto& [L, profile] : series.entries) {
    const PolyExp* poly = std::get_if<PolyExp>(&profile);
    if (poly == nullptr) throw std::logic_error("SeriesEvaluator needs analytic entries");
    const angular::SinForm form = angular::assoc_legendre_sin_form(L, 1);
    for (const auto& t : poly->terms()) {
      angular::SinForm term = form;
      term *= t.coefficient;
      combined[{t.decay, t.power}] += term;
    }
  }
  for (auto& [key, form] : combined) {
    if (form.is_zero()) continue;
    const long double decay = to_long_double(key.first);
    if (groups_.empty() || groups_.back().decay != decay) groups_.push_back({decay, {}});
    groups_.back().terms.push_back({key.second, std::move(form)});
  }
}

double SeriesEvaluator::operator()(double r, double theta) const {
  const long double x = r;
  long double total = 0.0L;
  for (const auto& g : groups_) {
    // Neumaier summation over the radial powers.
    long double sum = 0.0L;
    long double compensation = 0.0L;
    for (const auto& t : g.terms) {
      const long double term = t.angular.reduced(theta) * std::pow(x, static_cast<long double>(t.power));
      const long double next = sum + term;
      compensation += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
      sum = next;
    }
    total += (sum + compensation) * (g.decay == 0 ? 1.0L : std::exp(-g.decay * x));
  }
  return static_cast<double>(total * std::sin(static_cast<long double>(theta)));
}

MultipoleSeries current_series(const QuantumState& state, const PolyExp& density, CurrentPart part) {
  (void)radial::integrate_all(density.times_power(2));  // throws if R^2 r^2 is not integrable

  const PolyExp deriv = density.derivative();
  const PolyExp over_r = density.times_power(-1);
  MultipoleSeries series;
  series.quantity = Quantity::current;
  for (const auto& [L, pair] : pairs_for(state, part)) {
    PolyExp profile = pair.deriv * deriv + pair.over_r * over_r;
    if (!profile.is_zero()) series.entries.emplace(L, std::move(profile));
  }
  return series;
}

MultipoleSeries current_series(const QuantumState& state, const SampledProfile& density, CurrentPart part) {
  radial::require_square_integrable(density);
  std::vector<double> deriv(density.radii().size());
  std::vector<double> over_r(density.radii().size());
  for (std::size_t i = 0; i < deriv.size(); ++i) {
    const double r = density.radii()[i];
    deriv[i] = density.derivative(r);
    over_r[i] = density.values()[i] / r;
  }
  MultipoleSeries series;
  series.quantity = Quantity::current;
  for (const auto& [L, pair] : pairs_for(state, part)) {
    const double a = to_double(pair.deriv);
    const double b = to_double(pair.over_r);
    std::vector<double> values(deriv.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = a * deriv[i] + b * over_r[i];
    series.entries.emplace(L, SampledProfile(density.radii(), std::move(values)));
  }
  return series;
}

MultipoleSeries vector_potential_series(const MultipoleSeries& current) {
  if (current.quantity != Quantity::current) throw std::invalid_argument("expected a current series");
  MultipoleSeries potential;
  potential.quantity = Quantity::vector_potential;
  for (const auto& [L, profile] : current.entries) {
    if (const auto* poly = std::get_if<PolyExp>(&profile)) {
      potential.entries.emplace(L, radial::vector_potential_profile(*poly, L));
    } else {
      potential.entries.emplace(L, radial::sampled_vector_potential(std::get<SampledProfile>(profile), L).profile);
    }
  }
  return potential;
}

}  // namespace atomfield::multipole
