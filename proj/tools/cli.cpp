#include "cli.hpp"

#include "atomfield/field/pipeline.hpp"
#include "atomfield/io/format.hpp"
#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/radial/hydrogen.hpp"
#include "atomfield/verify/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace atomfield::cli {

namespace {

using angular::HalfInteger;
using io::Json;
using multipole::CurrentPart;
using multipole::QuantumState;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a command needs, validated before any computation.
struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> ml;
  std::string ms = "1/2";
  std::string j;
  std::string mj;
  bool orbital = false;
  bool spin = false;
  std::string radial_file;
  std::string format;
  std::string out_path;
  field::GridSpec grid;
  bool split = false;
  std::vector<std::string> seeds;
  std::string scope = "all";

  Json to_json() const {
    Json j_out;
    j_out["command"] = command;
    Json state;
    if (!j.empty()) {
      state["coupling"] = "j";
      if (l) state["l"] = *l;
      state["j"] = j;
      state["mj"] = mj;
    } else {
      state["coupling"] = "ls";
      if (l) state["l"] = *l;
      if (ml) state["ml"] = *ml;
      state["ms"] = ms;
    }
    if (n) state["n"] = *n;
    j_out["state"] = state;
    j_out["part"] = orbital ? "orbital" : spin ? "spin" : "total";
    j_out["radial_source"] = radial_file.empty() ? Json("hydrogenic") : Json(radial_file);
    j_out["grid"] = {{"r_min", io::format_double(grid.r_min)},
                     {"r_max", io::format_double(grid.r_max)},
                     {"n_r", grid.n_r},
                     {"n_theta", grid.n_theta}};
    j_out["units"] = io::unit_system;
    return j_out;
  }
};

HalfInteger parse_half(const std::string& text, const char* what) {
  try {
    return HalfInteger::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

bool is_coupled(const RunConfig& c) { return !c.j.empty() || !c.mj.empty(); }

CurrentPart part_of(const RunConfig& c) {
  if (c.orbital && c.spin) throw InputError("--orbital and --spin are mutually exclusive");
  return c.orbital ? CurrentPart::orbital : c.spin ? CurrentPart::spin : CurrentPart::total;
}

QuantumState state_of(const RunConfig& c) {
  if (is_coupled(c)) {
    if (c.j.empty() || c.mj.empty()) throw InputError("J states need both --j and --mj");
    if (!c.l) throw InputError("J states need --l (j = l +- 1/2) for this command");
    return QuantumState::coupled(*c.l, parse_half(c.j, "--j"), parse_half(c.mj, "--mj"), c.n);
  }
  if (!c.l || !c.ml) throw InputError("LS states need --l and --ml (or give --j and --mj)");
  return QuantumState::ls(*c.l, *c.ml, parse_half(c.ms, "--ms"), c.n);
}

field::Pipeline pipeline_of(const RunConfig& c) {
  const QuantumState state = state_of(c);
  if (!c.radial_file.empty()) {
    radial::SampledProfile r;
    try {
      r = io::read_radial_csv_file(c.radial_file);
    } catch (const io::FormatError& e) {
      throw InputError(e.what());
    }
    return field::build_pipeline(state, r.map([](double, double v) { return v * v; }), part_of(c));
  }
  if (!c.n) throw InputError("a hydrogenic state needs --n (or supply --radial-file)");
  return field::build_pipeline(state, radial::hydrogen_radial(*c.n, state.l()).density(), part_of(c));
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("--format " + c.format + " is not available for " + c.command + " (use " + list + ")");
}

void check_grid(const field::GridSpec& g) {
  if (!(g.r_min > 0 && g.r_min < g.r_max)) throw InputError("grid needs 0 < rmin < rmax");
  if (g.n_r < 2 || g.n_theta < 2) throw InputError("grid needs nr, ntheta >= 2");
}

// ---------------------------------------------------------------- coeffs

void cmd_coeffs(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "text";
  check_format(c, {"text", "json"});
  const bool json = c.format == "json";
  if (is_coupled(c)) {
    if (c.j.empty() || c.mj.empty()) throw InputError("J states need both --j and --mj");
    const HalfInteger j = parse_half(c.j, "--j");
    const HalfInteger mj = parse_half(c.mj, "--mj");
    if (c.l) (void)QuantumState::coupled(*c.l, j, mj, c.n);  // validates j = l +- 1/2
    if (j.twice() < 1 || j.is_integer()) throw multipole::InvalidStateError("j must be a positive half-integer");
    if (mj.is_integer()) throw multipole::InvalidStateError("m_j must be half-integral");
    if (std::abs(mj.twice()) > j.twice()) throw multipole::InvalidStateError("|m_j| <= j violated");
    const auto table = multipole::total_coefficients(j, mj);
    out << (json ? io::to_json(table).dump(2) + "\n" : io::to_text(table));
    return;
  }
  const QuantumState s = state_of(c);
  const auto part = part_of(c);
  const auto orbital = multipole::orbital_coefficients(s.l(), s.ml());
  const auto spin = multipole::spin_coefficients(s.l(), s.ml(), s.ms());
  if (json) {
    if (part == CurrentPart::orbital) {
      out << io::to_json(orbital).dump(2) << "\n";
    } else if (part == CurrentPart::spin) {
      out << io::to_json(spin).dump(2) << "\n";
    } else {
      Json both;
      both["orbital"] = io::to_json(orbital);
      both["spin"] = io::to_json(spin);
      out << both.dump(2) << "\n";
    }
    return;
  }
  if (part != CurrentPart::spin) out << io::to_text(orbital);
  if (part != CurrentPart::orbital) out << io::to_text(spin);
}

// ---------------------------------------------------------- current, potential

void cmd_radial(RunConfig& c, std::ostream& out, bool potential) {
  if (c.format.empty()) c.format = "csv";
  check_format(c, {"csv", "json"});
  check_grid(c.grid);
  const auto p = pipeline_of(c);
  const auto& series = potential ? p.potential : p.current;
  const std::string units = potential ? "A_L in mu0 mu_B/(4 pi a0^2)" : "j_L in mu_B/(pi a0^4)";
  std::vector<double> radii = field::grid_radii(c.grid);
  if (!p.field.empty()) {
    for (double& r : radii) {
      if (r < p.field.r_min() || r > p.field.r_max()) {
        throw InputError("radius " + io::format_double(r) + " lies outside the sampled radial grid");
      }
    }
  }
  if (c.format == "json") {
    Json doc;
    doc["units"] = io::unit_system;
    doc["quantity"] = potential ? "vector_potential" : "current";
    doc["unit_note"] = units + ", r in a0; X_phi = sum_L X_L(r) P_L^1(cos theta)";
    doc["config"] = c.to_json();
    Json radii_json = Json::array();
    for (double r : radii) radii_json.push_back(io::format_double(r));
    doc["radii"] = radii_json;
    Json multipoles = Json::array();
    for (const auto& [L, profile] : series.entries) {
      Json m;
      m["L"] = L;
      if (const auto* f = std::get_if<radial::PolyExp>(&profile)) m["exact"] = io::to_json(*f);
      Json values = Json::array();
      for (double r : radii) values.push_back(io::format_double(multipole::evaluate_profile(profile, r)));
      m["values"] = values;
      multipoles.push_back(m);
    }
    doc["multipoles"] = multipoles;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "# units: " << io::unit_system << " (r in a0, " << units << ")\n";
  out << "# config: " << c.to_json().dump() << "\n";
  out << "r_over_a0";
  for (const auto& entry : series.entries) out << ",L" << entry.first;
  out << "\n";
  for (double r : radii) {
    out << io::format_double(r);
    for (const auto& entry : series.entries) out << "," << io::format_double(multipole::evaluate_profile(entry.second, r));
    out << "\n";
  }
}

// ------------------------------------------------------------------ field

void cmd_field(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "csv";
  check_format(c, {"csv", "json"});
  check_grid(c.grid);
  const auto p = pipeline_of(c);
  std::vector<field::FieldSample> samples;
  io::SplitComponents split;
  if (p.field.empty()) {
    for (double r : field::grid_radii(c.grid)) {
      for (double t : field::grid_angles(c.grid)) samples.push_back({r, t, 0.0, 0.0});
    }
  } else {
    try {
      samples = field::sample_grid(p.field, c.grid);
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
    if (c.split) {
      for (int L : p.field.orders()) {
        auto& column = split[L];
        for (const auto& s : samples) column.push_back(p.field.component(L, s.r, s.theta));
      }
    }
  }
  const io::SplitComponents* sp = c.split ? &split : nullptr;
  if (c.format == "json") {
    out << io::field_to_json(samples, sp, c.to_json()).dump(2) << "\n";
  } else {
    io::write_field_csv(out, samples, sp, c.to_json().dump());
  }
}

// ------------------------------------------------------------- fieldlines

field::LinePoint parse_seed(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--seed expects r,theta (got '" + text + "')");
  try {
    std::size_t used = 0;
    const double r = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const double theta = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (!(r > 0) || !std::isfinite(r) || !std::isfinite(theta)) throw std::invalid_argument(text);
    return {r, theta};
  } catch (const std::logic_error&) {
    throw InputError("--seed expects r,theta with r > 0 (got '" + text + "')");
  }
}

void cmd_fieldlines(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "svg";
  check_format(c, {"svg", "json"});
  std::vector<field::LinePoint> seeds;
  for (const auto& s : c.seeds) seeds.push_back(parse_seed(s));
  const auto p = pipeline_of(c);
  field::TraceOptions opt;
  opt.r_min = std::min(c.grid.r_min, p.field.empty() ? c.grid.r_min : std::max(c.grid.r_min, p.field.r_min()));
  opt.r_max = std::isfinite(p.field.r_max()) ? std::min(2 * c.grid.r_max, p.field.r_max()) : 2 * c.grid.r_max;

  std::vector<field::FieldLine> lines;
  std::vector<std::string> notes;
  for (const auto& seed : seeds) {
    field::FieldLine line;
    std::string note = "seed r=" + io::format_double(seed.r) + " theta=" + io::format_double(seed.theta) + ": ";
    if (p.field.empty()) {
      line.points.push_back(seed);
      note += "no field (zero current)";
    } else {
      try {
        line = field::trace_field_line(p.field, seed, opt);
        note += io::termination_name(line.termination);
        if (line.termination == field::Termination::closed) note += ", gap " + io::format_double(line.closure_gap);
        if (line.on_axis) note += ", on axis";
      } catch (const field::StagnationError& e) {
        line.points = {seed, e.where()};
        note += std::string("stagnation: ") + e.what();
      } catch (const std::domain_error& e) {
        line.points.push_back(seed);
        note += std::string("not traced: ") + e.what();
      }
    }
    lines.push_back(std::move(line));
    notes.push_back(std::move(note));
  }
  if (c.format == "json") {
    Json doc;
    doc["units"] = io::unit_system;
    doc["config"] = c.to_json();
    Json arr = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Json l = io::to_json(lines[i]);
      l["note"] = notes[i];
      arr.push_back(l);
    }
    doc["lines"] = arr;
    out << doc.dump(2) << "\n";
    return;
  }
  double extent = 0.0;
  for (const auto& l : lines) {
    for (const auto& pt : l.points) extent = std::max(extent, pt.r);
  }
  if (extent == 0.0) extent = c.grid.r_max;
  io::write_fieldlines_svg(out, lines, notes, 1.05 * extent, c.to_json().dump());
}

// ----------------------------------------------------------------- verify

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

int cmd_verify(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "json";
  check_format(c, {"json"});
  verify::Scope scope;
  try {
    scope = verify::parse_scope(c.scope);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto results = verify::run(scope);
  Json doc;
  doc["scope"] = verify::scope_name(scope);
  doc["passed"] = verify::all_passed(results);
  Json checks = Json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"status", verify::status_name(r.status)},
                      {"max_error", number_or_null(r.max_error)},
                      {"tolerance", r.tolerance},
                      {"note", r.note}});
  }
  doc["checks"] = checks;
  out << doc.dump(2) << "\n";
  return verify::all_passed(results) ? exit_ok : exit_verify_failed;
}

int dispatch(RunConfig& c, std::ostream& out) {
  if (c.command == "coeffs") cmd_coeffs(c, out);
  else if (c.command == "current") cmd_radial(c, out, false);
  else if (c.command == "potential") cmd_radial(c, out, true);
  else if (c.command == "field") cmd_field(c, out);
  else if (c.command == "fieldlines") cmd_fieldlines(c, out);
  else if (c.command == "verify") return cmd_verify(c, out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Magnetic multipole fields of one-electron atomic states", "atomfield"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg", "text"}));
  app.add_option("--out", c.out_path, "Write output to this file instead of standard output");
  app.add_option("--rmin", c.grid.r_min, "Smallest grid radius (a0)");
  app.add_option("--rmax", c.grid.r_max, "Largest grid radius (a0)");
  app.add_option("--nr", c.grid.n_r, "Number of radii (log-spaced)");
  app.add_option("--ntheta", c.grid.n_theta, "Number of polar angles (cell centres)");
  app.add_flag("--split-multipoles", c.split, "Add per-order field columns");
  app.add_option("--seed", c.seeds, "Field-line seed r,theta (repeatable)")->allow_extra_args(false);
  app.add_option("--n", c.n, "Principal quantum number (hydrogenic radial function)");
  app.add_option("--l", c.l, "Orbital angular momentum");
  app.add_option("--ml", c.ml, "Orbital magnetic quantum number (LS states)");
  app.add_option("--ms", c.ms, "Spin projection, +1/2 or -1/2 (LS states)");
  app.add_option("--j", c.j, "Total angular momentum, e.g. 3/2 or 1.5");
  app.add_option("--mj", c.mj, "Total magnetic quantum number");
  app.add_flag("--orbital", c.orbital, "Orbital part of the current only");
  app.add_flag("--spin", c.spin, "Spin part of the current only");
  app.add_option("--radial-file", c.radial_file, "Two-column CSV (r/a0, R) replacing the hydrogenic radial function");

  app.add_subcommand("coeffs", "Exact multipole coefficient table");
  app.add_subcommand("current", "Current-density multipoles j_L(r)");
  app.add_subcommand("potential", "Vector-potential multipoles A_L(r)");
  app.add_subcommand("field", "Magnetic field on an (r, theta) grid");
  app.add_subcommand("fieldlines", "Traced field lines as SVG");
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--scope", c.scope, "tables, identities, examples, oracle, physics, quadrature, figures or all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.out_path.empty()) return dispatch(c, out);
    std::ostringstream buffer;
    const int code = dispatch(c, buffer);
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) throw IoError("cannot write " + c.out_path);
    return code;
  } catch (const multipole::InvalidStateError& e) {
    err << "error: invalid state: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const radial::RadialIntegralError& e) {
    err << "error: radial profile not integrable: " << e.what() << "\n";
    return exit_not_integrable;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
}

}  // namespace atomfield::cli
