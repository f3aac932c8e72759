#pragma once

#include <string>
#include <vector>

namespace atomfield::verify {

/// pass/fail against the tolerance; `reported` marks a known misprint in a
/// published expression where the pipeline value is authoritative and the
/// discrepancy is recorded rather than failed.
enum class Status { pass, fail, reported };

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

enum class Scope { tables, identities, examples, oracle, physics, quadrature, figures, all };

/// Throws std::invalid_argument for an unknown name.
Scope parse_scope(const std::string& name);
std::string scope_name(Scope scope);
std::string status_name(Status status);

std::vector<CheckResult> verify_tables();
std::vector<CheckResult> verify_identities();
std::vector<CheckResult> verify_examples();
std::vector<CheckResult> verify_oracle();
std::vector<CheckResult> verify_physics();
std::vector<CheckResult> verify_quadrature();
std::vector<CheckResult> verify_figures();

std::vector<CheckResult> run(Scope scope);

/// True iff no check failed (reported discrepancies do not count as failures).
bool all_passed(const std::vector<CheckResult>& results);

/// Relative error |a - b| / max(|b|, floor).
double relative_error(double a, double b, double floor);

}  // namespace atomfield::verify
