// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Usage: atomfield_acceptance [figure1.svg]

#include "atomfield/field/pipeline.hpp"
#include "atomfield/io/format.hpp"
#include "atomfield/verify/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace atomfield;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<std::vector<verify::CheckResult>()> suite;
  double time_limit;  // seconds; 0 when unbounded
};

// Field lines of the |3,2,1> orbital current in the meridian plane.
bool export_figure(const std::string& path, std::string& message) {
  const auto p = field::worked_example_pipeline(field::WorkedExample::orbital_321);
  field::TraceOptions options;
  options.r_max = 1000.0;
  std::vector<field::FieldLine> lines;
  std::vector<std::string> notes;
  for (double r0 : {1.0, 2.0, 3.0, 4.5, 6.0, 9.0, 13.0}) {
    lines.push_back(field::trace_field_line(p.field, {r0, std::numbers::pi / 2}, options));
    notes.push_back("seed r = " + io::format_double(r0) + " a0 on the equator: " + io::termination_name(lines.back().termination));
  }
  std::ofstream out(path);
  io::write_fieldlines_svg(out, lines, notes, 30.0, "|n=3, l=2, m_l=1> orbital current, field lines");
  if (!out) {
    message = "cannot write " + path;
    return false;
  }
  message = "exported " + path + " (" + std::to_string(lines.size()) + " lines, visual inspection only)";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string figure_path = argc > 1 ? argv[1] : "figure1.svg";
  const std::vector<Criterion> criteria = {
      {1, "coefficient tables reproduced exactly", verify::verify_tables, 1.0},
      {2, "worked-example closed forms, 500 points, 1e-10", verify::verify_examples, 5.0},
      {3, "multipoles vs direct spinor currents, l <= 3, 40 x 40 grid", verify::verify_oracle, 30.0},
      {4, "angular identity suite", verify::verify_identities, 0.0},
      {5, "divergence, flux, far field, decay", verify::verify_physics, 0.0},
      {6, "closed-form radial integrals vs adaptive quadrature, 1e-8", verify::verify_quadrature, 0.0},
      {7, "field-line closure and equatorial confinement", verify::verify_figures, 0.0},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.suite();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool checks_ok = verify::all_passed(results);
    const bool time_ok = c.time_limit == 0.0 || seconds < c.time_limit;
    int reported = 0;
    for (const auto& r : results) reported += r.status == verify::Status::reported;
    std::string extra;
    if (c.number == 7) {
      std::string message;
      const bool exported = export_figure(figure_path, message);
      all_ok = all_ok && exported;
      extra = "; " + message;
    }
    const bool ok = checks_ok && time_ok;
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %d: %s: %zu checks", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), results.size());
    if (reported > 0) std::printf(", %d reported", reported);
    std::printf(", %.2f s", seconds);
    if (c.time_limit > 0.0) std::printf(" (limit %.0f s)", c.time_limit);
    std::printf("%s\n", extra.c_str());
    for (const auto& r : results) {
      if (r.status != verify::Status::pass) {
        std::printf("    %s: %s, max error %.3g, tolerance %.3g%s%s\n", verify::status_name(r.status).c_str(), r.name.c_str(),
                    r.max_error, r.tolerance, r.note.empty() ? "" : "; ", r.note.c_str());
      }
    }
  }
  std::printf("%s\n", all_ok ? "all criteria pass" : "some criteria FAIL");
  return all_ok ? 0 : 1;
}
