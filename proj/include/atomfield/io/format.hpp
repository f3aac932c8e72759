#pragma once

#include "atomfield/field/field.hpp"
#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/radial/polyexp.hpp"
#include "atomfield/radial/sampled_profile.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atomfield::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* unit_system = "a0-muB-scaled";

/// Shortest form with 17 significant digits ("%.17g" semantics, locale-free).
std::string format_double(double v);

/// Raised for malformed input files or JSON documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// PolyExp <-> [{"c": "p/q", "k": int, "lambda": "p/q"}, ...]
Json to_json(const radial::PolyExp& f);
radial::PolyExp polyexp_from_json(const Json& j);

// Orbital: {"kind": "orbital", "l": 2, "ml": 1, "alphas": {"1": "3/8", ...}}
// Total:   {"kind": "total", "j": "3/2", "mj": "3/2", "alphas": {...}}
Json to_json(const multipole::CoefficientTable& table);
multipole::CoefficientTable table_from_json(const Json& j);

// {"kind": "spin", "l", "ml", "ms", "prefactor", "entries": {"L": {"deriv": .., "over_r": ..}}}
Json to_json(const multipole::SpinExpansion& spin);

/// Aligned two-column text rendering of a table.
std::string to_text(const multipole::CoefficientTable& table);
std::string to_text(const multipole::SpinExpansion& spin);

/// Two-column CSV (r/a0, value) with a one-line header. Blank lines and
/// lines starting with '#' are skipped. Throws FormatError.
radial::SampledProfile read_radial_csv(std::istream& in);
radial::SampledProfile read_radial_csv_file(const std::string& path);

/// Writes radial samples as two-column CSV preceded by a '#' units comment.
void write_radial_csv(std::ostream& out, const std::vector<double>& radii, const std::vector<double>& values,
                      const std::string& value_name, const std::string& units);

/// Per-sample multipole split: entry L holds (B_r, B_theta) of order L for every sample.
using SplitComponents = std::map<int, std::vector<field::FieldSample>>;

/// Field grid CSV: '#' comment lines (units, metadata), then the header
/// r_over_a0,theta,B_r,B_theta[,B_r_L1,B_theta_L1,...] and one row per sample.
void write_field_csv(std::ostream& out, const std::vector<field::FieldSample>& samples,
                     const SplitComponents* split, const std::string& metadata);
Json field_to_json(const std::vector<field::FieldSample>& samples, const SplitComponents* split,
                   const Json& metadata);

Json to_json(const field::FieldLine& line);

/// Meridian-plane SVG: each line drawn at (x, z) = (r sin theta, r cos theta)
/// and mirrored in x. `annotations` (one per line, may be empty) are written
/// as title elements; `metadata` goes into a leading XML comment.
void write_fieldlines_svg(std::ostream& out, const std::vector<field::FieldLine>& lines,
                          const std::vector<std::string>& annotations, double extent, const std::string& metadata);

std::string termination_name(field::Termination t);

}  // namespace atomfield::io
