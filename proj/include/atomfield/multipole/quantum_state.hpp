#pragma once

#include "atomfield/angular/angular_index.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace atomfield::multipole {

using angular::HalfInteger;

enum class Coupling { ls, j };

/// Thrown for quantum numbers that violate a state invariant; what() names the rule.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bound-state label: LS-coupled |n l m_l m_s> or J-coupled |n l j m_j>.
class QuantumState {
 public:
  /// Throws InvalidStateError unless l >= 0, |m_l| <= l, m_s = +-1/2 and
  /// (when given) n > l.
  static QuantumState ls(int l, int ml, HalfInteger ms, std::optional<int> n = std::nullopt);

  /// Throws InvalidStateError unless j = l +- 1/2 with j >= 1/2, |m_j| <= j,
  /// m_j half-integral, and (when given) n > l.
  static QuantumState coupled(int l, HalfInteger j, HalfInteger mj, std::optional<int> n = std::nullopt);

  Coupling coupling() const { return coupling_; }
  std::optional<int> n() const { return n_; }
  int l() const { return l_; }
  int ml() const { return ml_; }
  HalfInteger ms() const { return ms_; }
  HalfInteger j() const { return j_; }
  HalfInteger mj() const { return mj_; }

  /// j = l + 1/2 (upper) versus j = l - 1/2.
  bool is_upper() const { return j_.twice() == 2 * l_ + 1; }

  /// Integer m of the spin-up spinor component, m_j - 1/2.
  int spinor_m() const { return (mj_.twice() - 1) / 2; }

  std::string str() const;

 private:
  QuantumState() = default;
  Coupling coupling_ = Coupling::ls;
  std::optional<int> n_;
  int l_ = 0;
  int ml_ = 0;
  HalfInteger ms_ = HalfInteger::from_twice(1);
  HalfInteger j_ = HalfInteger::from_twice(1);
  HalfInteger mj_ = HalfInteger::from_twice(1);
};

}  // namespace atomfield::multipole
