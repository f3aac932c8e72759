#include <doctest.h>

#include "atomfield/field/closed_form.hpp"
#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using atomfield::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("atomfield_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

// Data rows of a CSV output (comment and header lines dropped).
std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("coeffs prints the exact tables") {
  auto r = call({"coeffs", "--j", "3/2", "--mj", "3/2", "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["alphas"] == Json({{"1", "6/5"}, {"3", "-1/5"}}));

  r = call({"coeffs", "--l", "1", "--ml", "1", "--orbital", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["alphas"] == Json({{"1", "3/8"}}));

  r = call({"coeffs", "--l", "2", "--ml", "0", "--orbital", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["alphas"].empty());

  r = call({"coeffs", "--j", "3/2", "--mj", "3/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1/5") != std::string::npos);
}

TEST_CASE("invalid quantum numbers exit with code 2 and name the rule") {
  auto r = call({"coeffs", "--j", "3/2", "--mj", "5/2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("|m_j| <= j") != std::string::npos);
  r = call({"current", "--n", "3", "--l", "3", "--ml", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("l <= n-1") != std::string::npos);
  r = call({"field", "--n", "2", "--l", "1", "--ml", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("|m_l| <= l") != std::string::npos);
  CHECK(call({"field", "--n", "2", "--l", "1", "--ml", "1", "--ms", "3/2"}).code == 2);
  CHECK(call({"coeffs", "--j", "1", "--mj", "1"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"field", "--n", "2", "--l", "1", "--ml", "1", "--format", "svg"}).code == 2);
  CHECK(call({"fieldlines", "--n", "2", "--l", "1", "--ml", "1", "--seed", "abc"}).code == 2);
}

TEST_CASE("malformed quantum numbers: exit code property") {
  // Random (l, m_l, n) triples: exit 0 exactly when 0 <= l < n and |m_l| <= l.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-4, 5);
  for (int i = 0; i < 60; ++i) {
    const int n = pick(rng);
    const int l = pick(rng);
    const int ml = pick(rng);
    const bool valid = n >= 1 && l >= 0 && l < n && std::abs(ml) <= l;
    const auto r = call({"current", "--n", std::to_string(n), "--l", std::to_string(l), "--ml", std::to_string(ml),
                         "--orbital", "--nr", "3", "--format", "json"});
    CHECK(r.code == (valid ? 0 : 2));
    if (!valid) CHECK(r.err.find("violated") != std::string::npos);
  }
  // Random (l, j, m_j) given as twice their values.
  for (int i = 0; i < 60; ++i) {
    const int l = std::abs(pick(rng)) % 4;
    const int tj = pick(rng) + 2;
    const int tm = pick(rng);
    const bool valid = tj % 2 != 0 && tj >= 1 && std::abs(tj - 2 * l) == 1 && tm % 2 != 0 && std::abs(tm) <= tj;
    const auto r = call({"current", "--n", "5", "--l", std::to_string(l), "--j", std::to_string(tj) + "/2", "--mj",
                         std::to_string(tm) + "/2", "--format", "json"});
    CHECK(r.code == (valid ? 0 : 2));
  }
}

TEST_CASE("non-integrable radial file exits with code 3") {
  std::string content = "r,R\n";
  for (int i = 0; i < 40; ++i) {
    const double r = 0.1 * std::pow(1.2, i);
    content += std::to_string(r) + "," + std::to_string(1.0 / r) + "\n";
  }
  const auto path = temp_file("slow_tail.csv", content);
  const auto r = call({"field", "--radial-file", path, "--l", "1", "--ml", "1", "--nr", "3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("not integrable") != std::string::npos);
  CHECK(call({"field", "--radial-file", "/nonexistent.csv", "--l", "1", "--ml", "1"}).code == 2);
}

TEST_CASE("field output matches the closed form and is deterministic") {
  const std::vector<std::string> args = {"field", "--n", "3", "--l", "2", "--ml", "1", "--orbital", "--rmin", "9",
                                         "--rmax", "12", "--nr", "2", "--ntheta", "4"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto ref = atomfield::field::closed_form_reference(atomfield::field::WorkedExample::orbital_321);
  using C = atomfield::field::ReferenceComponent;
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    const double r = row[0];
    const double t = row[1];
    CHECK(row[2] == doctest::Approx(ref(C::Br1, r, t) + ref(C::Br3, r, t)).epsilon(1e-12));
    CHECK(row[3] == doctest::Approx(ref(C::Bt1, r, t) + ref(C::Bt3, r, t)).epsilon(1e-12));
  }
  const auto split = call({"field", "--n", "3", "--l", "2", "--ml", "1", "--orbital", "--nr", "2", "--ntheta", "2",
                           "--split-multipoles"});
  CHECK(split.out.find("B_r_L3") != std::string::npos);
}

TEST_CASE("zero-current field is all zeros") {
  const auto r = call({"field", "--n", "3", "--l", "2", "--ml", "0", "--orbital", "--nr", "3", "--ntheta", "3"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows.size() == 9);
  for (const auto& row : rows) {
    CHECK(row[2] == 0.0);
    CHECK(row[3] == 0.0);
  }
}

TEST_CASE("fieldlines") {
  auto r = call({"fieldlines", "--n", "3", "--l", "2", "--ml", "1", "--orbital"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
  CHECK(r.out.find("<path") == std::string::npos);

  r = call({"fieldlines", "--n", "3", "--l", "2", "--j", "3/2", "--mj", "3/2", "--seed", "4,1.5707963267948966",
            "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["lines"].size() == 1);
  CHECK(j["lines"][0]["termination"] == "closed");
}

TEST_CASE("current and potential outputs carry exact profiles") {
  const auto r = call({"current", "--n", "3", "--l", "2", "--ml", "1", "--orbital", "--format", "json", "--nr", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.dump().find("-2/32805") != std::string::npos);
  const auto p = call({"potential", "--n", "3", "--l", "2", "--ml", "1", "--orbital", "--nr", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("a0") != std::string::npos);
}

TEST_CASE("verify reports JSON and the exit status") {
  const auto r = call({"verify", "--scope", "tables"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() > 10);
  CHECK(j["checks"][0].contains("tolerance"));
  CHECK(call({"verify", "--scope", "nothing"}).code == 2);
}

TEST_CASE("output file and I/O errors") {
  const auto path = (std::filesystem::temp_directory_path() / "atomfield_test_out.json").string();
  CHECK(call({"coeffs", "--j", "1/2", "--mj", "1/2", "--format", "json", "--out", path}).code == 0);
  std::ifstream in(path);
  CHECK(Json::parse(in)["alphas"]["1"] == "1");
  CHECK(call({"coeffs", "--j", "1/2", "--mj", "1/2", "--out", "/nonexistent/dir/x.json"}).code == 4);
}
