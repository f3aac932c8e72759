#pragma once

#include "atomfield/verify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace atomfield::verify::detail {

// Running maximum that treats NaN as an infinite error.
struct MaxError {
  double value = 0.0;
  void add(double e) { value = std::isnan(e) ? std::numeric_limits<double>::infinity() : std::max(value, e); }
};

inline CheckResult judge(std::string name, double max_error, double tolerance, std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.max_error = max_error;
  r.tolerance = tolerance;
  r.status = (max_error <= tolerance) ? Status::pass : Status::fail;
  r.note = std::move(note);
  return r;
}

inline CheckResult exact(std::string name, bool ok, std::string note = {}) {
  return judge(std::move(name), ok ? 0.0 : 1.0, 0.0, std::move(note));
}

// 5-point central difference.
template <class F>
double central_difference(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Richardson-extrapolated 5-point difference (cancels the h^4 term).
template <class F>
double richardson_difference(F&& f, double x, double h) {
  const double coarse = central_difference(f, x, h);
  const double fine = central_difference(f, x, h / 2);
  return (16 * fine - coarse) / 15;
}

std::vector<double> log_space(double lo, double hi, int n);
std::vector<double> cell_centres(int n);  // (i + 1/2) pi / n

}  // namespace atomfield::verify::detail
