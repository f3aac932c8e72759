#include "atomfield/io/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace atomfield::io {

using multipole::CoefficientTable;
using multipole::TableKind;

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  std::string s(buf, res.ptr);
  if (s.find_first_not_of("-0.") == std::string::npos) return "0";
  return s;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, int line) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw FormatError("line " + std::to_string(line) + ": '" + t + "' is not a finite number");
  }
  return v;
}

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  const Json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw FormatError(std::string("key '") + key + "' must be a rational string");
}

std::string sanitize_comment(std::string s) {
  for (std::size_t pos; (pos = s.find("--")) != std::string::npos;) s.replace(pos, 2, "- ");
  return s;
}

}  // namespace

Json to_json(const radial::PolyExp& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) {
    out.push_back({{"c", to_string(t.coefficient)}, {"k", t.power}, {"lambda", to_string(t.decay)}});
  }
  return out;
}

radial::PolyExp polyexp_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("PolyExp JSON must be an array of terms");
  std::vector<radial::PolyExpTerm> terms;
  try {
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("k") || !t.at("k").is_number_integer()) {
        throw FormatError("PolyExp term needs integer 'k'");
      }
      terms.push_back({rational_field(t, "c"), t.at("k").get<int>(), rational_field(t, "lambda")});
    }
    return radial::PolyExp(std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid PolyExp term: ") + e.what());
  }
}

Json to_json(const CoefficientTable& table) {
  Json out;
  if (table.kind == TableKind::orbital) {
    out["kind"] = "orbital";
    out["l"] = table.l;
    out["ml"] = table.ml;
  } else {
    out["kind"] = "total";
    out["j"] = table.j.str();
    out["mj"] = table.mj.str();
  }
  Json alphas = Json::object();
  for (const auto& [L, a] : table.alphas) alphas[std::to_string(L)] = to_string(a);
  out["alphas"] = alphas;
  return out;
}

CoefficientTable table_from_json(const Json& j) {
  try {
    CoefficientTable t;
    const std::string kind = j.value("kind", j.contains("j") ? "total" : "orbital");
    if (kind == "orbital") {
      t.kind = TableKind::orbital;
      t.l = j.at("l").get<int>();
      t.ml = j.at("ml").get<int>();
    } else if (kind == "total") {
      t.kind = TableKind::total;
      t.j = angular::HalfInteger::parse(j.at("j").get<std::string>());
      t.mj = angular::HalfInteger::parse(j.at("mj").get<std::string>());
    } else {
      throw FormatError("unknown table kind '" + kind + "'");
    }
    for (const auto& [key, value] : j.at("alphas").items()) {
      int L = 0;
      const auto res = std::from_chars(key.data(), key.data() + key.size(), L);
      if (res.ec != std::errc() || res.ptr != key.data() + key.size() || L < 1 || L % 2 == 0) {
        throw FormatError("multipole order '" + key + "' is not an odd positive integer");
      }
      t.alphas[L] = parse_rational(value.get<std::string>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed coefficient table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed coefficient table: ") + e.what());
  }
}

Json to_json(const multipole::SpinExpansion& spin) {
  Json out;
  out["kind"] = "spin";
  out["l"] = spin.l;
  out["ml"] = spin.m;
  out["ms"] = spin.ms.str();
  out["prefactor"] = to_string(spin.prefactor());
  Json entries = Json::object();
  for (const auto& [L, term] : spin.entries) {
    entries[std::to_string(L)] = {{"deriv", to_string(term.deriv)}, {"over_r", to_string(term.over_r)}};
  }
  out["entries"] = entries;
  return out;
}

std::string to_text(const CoefficientTable& table) {
  std::ostringstream out;
  if (table.kind == TableKind::orbital) {
    out << "orbital coefficients l=" << table.l << " m_l=" << table.ml << "\n";
  } else {
    out << "total coefficients j=" << table.j.str() << " m_j=" << table.mj.str() << "\n";
  }
  out << std::setw(4) << "L" << "  alpha_L\n";
  for (const auto& [L, a] : table.alphas) out << std::setw(4) << L << "  " << to_string(a) << "\n";
  return out.str();
}

std::string to_text(const multipole::SpinExpansion& spin) {
  std::ostringstream out;
  out << "spin expansion l=" << spin.l << " m_l=" << spin.m << " m_s=" << spin.ms.str()
      << " prefactor=" << to_string(spin.prefactor()) << "\n";
  out << std::setw(4) << "L" << "  " << std::setw(14) << std::left << "dR^2/dr" << "R^2/r\n" << std::right;
  for (const auto& [L, t] : spin.entries) {
    out << std::setw(4) << L << "  " << std::setw(14) << std::left << to_string(t.deriv) << std::right
        << to_string(t.over_r) << "\n";
  }
  return out.str();
}

radial::SampledProfile read_radial_csv(std::istream& in) {
  std::vector<double> radii;
  std::vector<double> values;
  std::string line;
  int number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw FormatError("line " + std::to_string(number) + ": expected two comma-separated columns");
    }
    radii.push_back(parse_number(t.substr(0, comma), number));
    values.push_back(parse_number(t.substr(comma + 1), number));
  }
  if (!header_seen) throw FormatError("radial CSV is empty (a header line is required)");
  try {
    return radial::SampledProfile(std::move(radii), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("radial CSV: ") + e.what());
  }
}

radial::SampledProfile read_radial_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open radial file '" + path + "'");
  return read_radial_csv(in);
}

void write_radial_csv(std::ostream& out, const std::vector<double>& radii, const std::vector<double>& values,
                      const std::string& value_name, const std::string& units) {
  out << "# units: lengths a0; " << value_name << " in " << units << "; system " << unit_system << "\n";
  out << "r_over_a0," << value_name << "\n";
  for (std::size_t i = 0; i < radii.size(); ++i) out << format_double(radii[i]) << "," << format_double(values[i]) << "\n";
}

void write_field_csv(std::ostream& out, const std::vector<field::FieldSample>& samples, const SplitComponents* split,
                     const std::string& metadata) {
  out << "# units: lengths a0; theta rad; B in mu0*mu_B/(4*pi*a0^3); system " << unit_system << "\n";
  if (!metadata.empty()) out << "# config: " << metadata << "\n";
  out << "r_over_a0,theta,B_r,B_theta";
  if (split) {
    for (const auto& [L, comps] : *split) out << ",B_r_L" << L << ",B_theta_L" << L;
  }
  out << "\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    out << format_double(s.r) << "," << format_double(s.theta) << "," << format_double(s.B_r) << ","
        << format_double(s.B_theta);
    if (split) {
      for (const auto& [L, comps] : *split) {
        out << "," << format_double(comps.at(i).B_r) << "," << format_double(comps.at(i).B_theta);
      }
    }
    out << "\n";
  }
}

Json field_to_json(const std::vector<field::FieldSample>& samples, const SplitComponents* split, const Json& metadata) {
  Json out;
  out["units"] = {{"length", "a0"}, {"B", "mu0*mu_B/(4*pi*a0^3)"}, {"system", unit_system}};
  out["config"] = metadata;
  Json rows = Json::array();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    Json row = {{"r", s.r}, {"theta", s.theta}, {"B_r", s.B_r}, {"B_theta", s.B_theta}};
    if (split) {
      Json parts = Json::object();
      for (const auto& [L, comps] : *split) {
        parts[std::to_string(L)] = {{"B_r", comps.at(i).B_r}, {"B_theta", comps.at(i).B_theta}};
      }
      row["multipoles"] = parts;
    }
    rows.push_back(row);
  }
  out["samples"] = rows;
  return out;
}

std::string termination_name(field::Termination t) {
  switch (t) {
    case field::Termination::closed: return "closed";
    case field::Termination::left_domain: return "left_domain";
    case field::Termination::step_limit: return "step_limit";
  }
  return "unknown";
}

Json to_json(const field::FieldLine& line) {
  Json pts = Json::array();
  for (const auto& p : line.points) pts.push_back({p.r, p.theta});
  Json out = {{"termination", termination_name(line.termination)},
              {"on_axis", line.on_axis},
              {"flux_drift", line.flux_drift},
              {"points", pts}};
  if (line.termination == field::Termination::closed) out["closure_gap"] = line.closure_gap;
  return out;
}

void write_fieldlines_svg(std::ostream& out, const std::vector<field::FieldLine>& lines,
                          const std::vector<std::string>& annotations, double extent, const std::string& metadata) {
  if (!(extent > 0.0)) throw std::invalid_argument("SVG extent must be positive");
  const double size = 800.0;
  const double scale = size / (2.0 * extent);
  auto px = [&](double x) { return fixed((x + extent) * scale, 2); };
  auto py = [&](double z) { return fixed((extent - z) * scale, 2); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- " << sanitize_comment(metadata) << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << size
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << size << "\" y2=\"" << py(0)
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"3\" fill=\"black\"/>\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.points.size() < 2) continue;
    for (int mirror : {1, -1}) {
      out << "  <path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" d=\"";
      for (std::size_t k = 0; k < line.points.size(); ++k) {
        const auto& p = line.points[k];
        const double x = mirror * p.r * std::sin(p.theta);
        const double z = p.r * std::cos(p.theta);
        out << (k == 0 ? "M" : " L") << px(x) << "," << py(z);
      }
      if (line.termination == field::Termination::closed) out << " Z";
      out << "\">";
      if (i < annotations.size() && !annotations[i].empty()) out << "<title>" << annotations[i] << "</title>";
      out << "</path>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace atomfield::io
