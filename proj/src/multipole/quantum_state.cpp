#include "atomfield/multipole/quantum_state.hpp"

#include <cstdlib>

namespace atomfield::multipole {

namespace {

void check_n(std::optional<int> n, int l) {
  if (!n) return;
  if (*n < 1) throw InvalidStateError("n >= 1 violated (n = " + std::to_string(*n) + ")");
  if (l >= *n) {
    throw InvalidStateError("l <= n-1 violated (n = " + std::to_string(*n) + ", l = " + std::to_string(l) + ")");
  }
}

}  // namespace

QuantumState QuantumState::ls(int l, int ml, HalfInteger ms, std::optional<int> n) {
  if (l < 0) throw InvalidStateError("l >= 0 violated (l = " + std::to_string(l) + ")");
  if (std::abs(ml) > l) {
    throw InvalidStateError("|m_l| <= l violated (l = " + std::to_string(l) + ", m_l = " + std::to_string(ml) + ")");
  }
  if (std::abs(ms.twice()) != 1) throw InvalidStateError("m_s = +-1/2 violated (m_s = " + ms.str() + ")");
  check_n(n, l);
  QuantumState state;
  state.coupling_ = Coupling::ls;
  state.n_ = n;
  state.l_ = l;
  state.ml_ = ml;
  state.ms_ = ms;
  state.j_ = HalfInteger::from_twice(2 * l + ms.twice());
  state.mj_ = HalfInteger::from_twice(2 * ml + ms.twice());
  return state;
}

QuantumState QuantumState::coupled(int l, HalfInteger j, HalfInteger mj, std::optional<int> n) {
  if (l < 0) throw InvalidStateError("l >= 0 violated (l = " + std::to_string(l) + ")");
  if (j.is_integer() || j.twice() < 1) throw InvalidStateError("j >= 1/2 half-integral violated (j = " + j.str() + ")");
  if (std::abs(j.twice() - 2 * l) != 1) {
    throw InvalidStateError("j = l +- 1/2 violated (l = " + std::to_string(l) + ", j = " + j.str() + ")");
  }
  if (mj.is_integer()) throw InvalidStateError("m_j half-integral violated (m_j = " + mj.str() + ")");
  if (std::abs(mj.twice()) > j.twice()) {
    throw InvalidStateError("|m_j| <= j violated (j = " + j.str() + ", m_j = " + mj.str() + ")");
  }
  check_n(n, l);
  QuantumState state;
  state.coupling_ = Coupling::j;
  state.n_ = n;
  state.l_ = l;
  state.j_ = j;
  state.mj_ = mj;
  state.ml_ = (mj.twice() - 1) / 2;
  return state;
}

std::string QuantumState::str() const {
  std::string prefix = n_ ? "n=" + std::to_string(*n_) + "," : std::string();
  if (coupling_ == Coupling::ls) {
    return "|" + prefix + "l=" + std::to_string(l_) + ",ml=" + std::to_string(ml_) + ",ms=" + ms_.str() + ">";
  }
  return "|" + prefix + "l=" + std::to_string(l_) + ",j=" + j_.str() + ",mj=" + mj_.str() + ">";
}

}  // namespace atomfield::multipole
