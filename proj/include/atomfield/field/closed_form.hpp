#pragma once

#include "atomfield/angular/rational.hpp"

#include <string>
#include <vector>

namespace atomfield::field {

/// Hydrogen n = 3, l = 2 worked examples with published closed forms.
enum class WorkedExample {
  orbital_321,  // orbital current of |n=3, l=2, m_l=1>
  j32_mj32,     // total current of |n=3, l=2, j=3/2, m_j=3/2>
};

/// printed: the expressions as published. corrected: the same expressions
/// with the known misprints (see ClosedFormReference::notes) fixed.
enum class Transcription { printed, corrected };

enum class ReferenceComponent { A1, A3, Br1, Br3, Bt1, Bt3 };

/// Multipole order and kind of a component.
int component_order(ReferenceComponent c);
bool is_potential(ReferenceComponent c);
bool is_radial(ReferenceComponent c);
std::string component_name(ReferenceComponent c);
const std::vector<ReferenceComponent>& all_components();

/// One closed form: prefactor * angle(theta) * [e^{-2r/3} sum_k c_k r^k + tail r^p],
/// in the scaled units (lengths a0, A in mu0 mu_B/(4 pi a0^2), B in mu0 mu_B/(4 pi a0^3)).
struct ClosedForm {
  enum class Angle { sin, cos, sin_cubic_mix, cos_cubic_mix };  // sin, cos, 4cos^2 sin - sin^3, 5cos^3 - 3cos
  Rational prefactor;
  Angle angle = Angle::sin;
  std::vector<std::pair<Rational, int>> exp_block;
  Rational tail;
  int tail_power = 0;

  /// Evaluated in 50-digit floating point and rounded once.
  double operator()(double r, double theta) const;
  /// Radial bracket only (prefactor times bracket, without the angular factor).
  double radial(double r) const;
};

struct TranscriptionNote {
  ReferenceComponent component;
  std::string description;
};

/// Literal transcriptions of the closed-form A and B components of a worked
/// example; used only as regression oracles.
class ClosedFormReference {
 public:
  ClosedFormReference(WorkedExample example, Transcription transcription);

  WorkedExample example() const { return example_; }
  Transcription transcription() const { return transcription_; }
  const ClosedForm& form(ReferenceComponent c) const;
  double operator()(ReferenceComponent c, double r, double theta) const { return form(c)(r, theta); }

  /// Misprints known in the printed version of this example. Components
  /// listed here differ between the printed and corrected transcriptions.
  const std::vector<TranscriptionNote>& notes() const { return notes_; }
  bool has_known_typo(ReferenceComponent c) const;

 private:
  WorkedExample example_;
  Transcription transcription_;
  std::vector<ClosedForm> forms_;  // indexed by ReferenceComponent
  std::vector<TranscriptionNote> notes_;
};

ClosedFormReference closed_form_reference(WorkedExample example, Transcription transcription = Transcription::printed);

}  // namespace atomfield::field
