#include "atomfield/field/closed_form.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace atomfield::field {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

long long pow3(int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

// num / (five * 3^k), with five = 5 or 1
Rational c(long long num, int five, int k) { return Rational(num, five * pow3(k)); }

Float50 to_float(const Rational& q) {
  return Float50(boost::multiprecision::numerator(q)) / Float50(boost::multiprecision::denominator(q));
}

using Angle = ClosedForm::Angle;
using RC = ReferenceComponent;

std::vector<ClosedForm> orbital_321() {
  // Order matches ReferenceComponent: A1, A3, Br1, Br3, Bt1, Bt3.
  return {
      {1, Angle::sin,
       {{c(2, 5, 6), 3}, {c(8, 5, 5), 2}, {c(19, 5, 4), 1}, {c(2, 1, 2), 0}, {c(2, 1, 1), -1}, {1, -2}},
       -1, -2},
      {54, Angle::sin_cubic_mix,
       {{c(1, 5, 9), 3}, {c(4, 5, 8), 2}, {c(4, 5, 6), 1}, {c(2, 1, 5), 0}, {c(4, 1, 4), -1}, {c(2, 1, 2), -2},
        {c(2, 1, 1), -3}, {1, -4}},
       -1, -4},
      {2, Angle::cos,
       {{c(2, 5, 6), 2}, {c(8, 5, 5), 1}, {c(19, 5, 4), 0}, {c(2, 1, 2), -1}, {c(2, 1, 1), -2}, {1, -3}},
       -1, -3},
      {216, Angle::cos_cubic_mix,
       {{c(1, 5, 9), 2}, {c(4, 5, 8), 1}, {c(4, 5, 6), 0}, {c(2, 1, 5), -1}, {c(4, 1, 4), -2}, {c(2, 1, 2), -3},
        {c(2, 1, 1), -4}, {1, -5}},
       -1, -5},
      {1, Angle::sin,
       {{c(4, 5, 7), 3}, {c(8, 5, 6), 2}, {c(14, 5, 5), 1}, {c(22, 5, 4), 0}, {c(2, 1, 2), -1}, {c(2, 1, 1), -2},
        {1, -3}},
       -1, -3},
      {162, Angle::sin_cubic_mix,
       {{c(2, 5, 11), 3}, {c(4, 5, 10), 2}, {c(4, 5, 8), 1}, {c(4, 5, 6), 0}, {c(2, 1, 5), -1}, {c(4, 1, 4), -2},
        {c(2, 1, 2), -3}, {c(2, 1, 1), -4}, {1, -5}},
       -1, -5},
  };
}

std::vector<ClosedForm> j32_mj32(Transcription t, std::vector<TranscriptionNote>& notes) {
  const bool fix = t == Transcription::corrected;
  notes = {
      {RC::A1, "A1: the r^4 term inside the exponential block carries the wrong sign; it is -4/(5*3^8) r^4."},
      {RC::Br1, "B_r1: the overall prefactor is 3/(5 pi), twice the printed 3/(10 pi)."},
      {RC::Bt1, "B_theta1: the r^3 coefficient is 4/3^8, not 4/(5*3^8)."},
  };
  return {
      {Rational(6, 5), Angle::sin,
       {{fix ? -c(4, 5, 8) : c(4, 5, 8), 4}, {c(2, 5, 4), 2}, {c(2, 5, 2), 1}, {c(2, 1, 2), 0}, {c(2, 1, 1), -1},
        {1, -2}},
       -1, -2},
      {Rational(-27, 5), Angle::sin_cubic_mix,
       {{c(4, 5, 8), 2}, {c(4, 5, 6), 1}, {c(2, 1, 5), 0}, {c(4, 1, 4), -1}, {c(2, 1, 2), -2}, {c(2, 1, 1), -3},
        {1, -4}, {-c(2, 5, 10), 4}},
       -1, -4},
      {fix ? Rational(12, 5) : Rational(6, 5), Angle::cos,
       {{c(2, 5, 4), 1}, {c(2, 5, 2), 0}, {c(2, 1, 2), -1}, {c(2, 1, 1), -2}, {1, -3}, {-c(4, 5, 8), 3}},
       -1, -3},
      {Rational(-108, 5), Angle::cos_cubic_mix,
       {{c(4, 5, 8), 1}, {c(4, 5, 6), 0}, {c(2, 1, 5), -1}, {c(4, 1, 4), -2}, {c(2, 1, 2), -3}, {c(2, 1, 1), -4},
        {1, -5}, {-c(2, 5, 10), 3}},
       -1, -5},
      {Rational(6, 5), Angle::sin,
       {{fix ? c(4, 1, 8) : c(4, 5, 8), 3}, {c(4, 5, 5), 2}, {c(2, 5, 3), 1}, {c(8, 5, 3), 0}, {c(2, 1, 2), -1},
        {c(2, 1, 1), -2}, {1, -3}, {-c(8, 5, 9), 4}},
       -1, -3},
      // The printed constant term runs into the r term without an operator; read as '+'.
      {Rational(-81, 5), Angle::sin_cubic_mix,
       {{c(2, 1, 11), 3}, {c(8, 5, 10), 2}, {c(4, 5, 8), 1}, {c(4, 5, 6), 0}, {c(2, 1, 5), -1}, {c(4, 1, 4), -2},
        {c(2, 1, 2), -3}, {c(2, 1, 1), -4}, {1, -5}, {-c(4, 5, 12), 4}},
       -1, -5},
  };
}

Float50 bracket(const ClosedForm& f, const Float50& r) {
  Float50 block = 0;
  for (const auto& [coef, k] : f.exp_block) block += to_float(coef) * pow(r, k);
  return to_float(f.prefactor) * (exp(-2 * r / 3) * block + to_float(f.tail) * pow(r, f.tail_power));
}

Float50 angular_factor(ClosedForm::Angle a, const Float50& theta) {
  const Float50 s = sin(theta);
  const Float50 co = cos(theta);
  switch (a) {
    case Angle::sin: return s;
    case Angle::cos: return co;
    case Angle::sin_cubic_mix: return 4 * co * co * s - s * s * s;
    case Angle::cos_cubic_mix: return 5 * co * co * co - 3 * co;
  }
  return 0;
}

}  // namespace

int component_order(ReferenceComponent c) {
  return (c == RC::A1 || c == RC::Br1 || c == RC::Bt1) ? 1 : 3;
}
bool is_potential(ReferenceComponent c) { return c == RC::A1 || c == RC::A3; }
bool is_radial(ReferenceComponent c) { return c == RC::Br1 || c == RC::Br3; }

std::string component_name(ReferenceComponent c) {
  switch (c) {
    case RC::A1: return "A1";
    case RC::A3: return "A3";
    case RC::Br1: return "B_r1";
    case RC::Br3: return "B_r3";
    case RC::Bt1: return "B_theta1";
    case RC::Bt3: return "B_theta3";
  }
  return "?";
}

const std::vector<ReferenceComponent>& all_components() {
  static const std::vector<ReferenceComponent> all{RC::A1, RC::A3, RC::Br1, RC::Br3, RC::Bt1, RC::Bt3};
  return all;
}

double ClosedForm::operator()(double r, double theta) const {
  return static_cast<double>(bracket(*this, Float50(r)) * angular_factor(angle, Float50(theta)));
}

double ClosedForm::radial(double r) const { return static_cast<double>(bracket(*this, Float50(r))); }

ClosedFormReference::ClosedFormReference(WorkedExample example, Transcription transcription)
    : example_(example), transcription_(transcription) {
  if (example == WorkedExample::orbital_321) {
    forms_ = orbital_321();
  } else {
    forms_ = j32_mj32(transcription, notes_);
  }
}

const ClosedForm& ClosedFormReference::form(ReferenceComponent c) const {
  return forms_.at(static_cast<std::size_t>(c));
}

bool ClosedFormReference::has_known_typo(ReferenceComponent c) const {
  for (const auto& n : notes_) {
    if (n.component == c) return true;
  }
  return false;
}

ClosedFormReference closed_form_reference(WorkedExample example, Transcription transcription) {
  return ClosedFormReference(example, transcription);
}

}  // namespace atomfield::field
