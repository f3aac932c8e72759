#include "atomfield/angular/clebsch_gordan.hpp"
#include "atomfield/field/pipeline.hpp"
#include "atomfield/multipole/coefficients.hpp"
#include "atomfield/radial/hydrogen.hpp"
#include "atomfield/radial/sampled_profile.hpp"
#include "atomfield/verify/verify.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace atomfield;

namespace {

using angular::HalfInteger;
using multipole::CurrentPart;
using multipole::QuantumState;

CurrentPart parse_part(const std::string& name) {
  if (name == "orbital") return CurrentPart::orbital;
  if (name == "spin") return CurrentPart::spin;
  if (name == "total") return CurrentPart::total;
  throw std::invalid_argument("part must be orbital, spin or total, got '" + name + "'");
}

py::dict alphas(const multipole::CoefficientTable& table) {
  py::dict out;
  for (const auto& [L, a] : table.alphas) out[py::int_(L)] = atomfield::to_string(a);
  return out;
}

// Shares one pipeline between the Python field object and its multipoles.
struct PyField {
  std::shared_ptr<const field::Pipeline> pipeline;

  const field::AxisymmetricField& field() const { return pipeline->field; }
};

py::dict line_dict(const field::FieldLine& line) {
  std::vector<double> r;
  std::vector<double> theta;
  r.reserve(line.points.size());
  theta.reserve(line.points.size());
  for (const auto& p : line.points) {
    r.push_back(p.r);
    theta.push_back(p.theta);
  }
  static const char* names[] = {"closed", "left_domain", "step_limit"};
  py::dict out;
  out["r"] = py::array_t<double>(static_cast<py::ssize_t>(r.size()), r.data());
  out["theta"] = py::array_t<double>(static_cast<py::ssize_t>(theta.size()), theta.data());
  out["termination"] = names[static_cast<int>(line.termination)];
  out["on_axis"] = line.on_axis;
  out["closure_gap"] = line.closure_gap;
  out["flux_drift"] = line.flux_drift;
  return out;
}

}  // namespace

PYBIND11_MODULE(_atomfield, m) {
  m.doc() = "Multipole currents and magnetic fields of atomic bound states";

  py::register_exception<radial::RadialIntegralError>(m, "RadialIntegralError", PyExc_ValueError);
  py::register_exception<field::StagnationError>(m, "StagnationError", PyExc_RuntimeError);

  py::class_<QuantumState>(m, "State")
      .def_static(
          "ls",
          [](int l, int ml, const std::string& ms, std::optional<int> n) {
            return QuantumState::ls(l, ml, HalfInteger::parse(ms), n);
          },
          py::arg("l"), py::arg("ml"), py::arg("ms") = "1/2", py::arg("n") = py::none(),
          "LS-coupled |n l m_l m_s>; m_s is '1/2' or '-1/2'.")
      .def_static(
          "coupled",
          [](int l, const std::string& j, const std::string& mj, std::optional<int> n) {
            return QuantumState::coupled(l, HalfInteger::parse(j), HalfInteger::parse(mj), n);
          },
          py::arg("l"), py::arg("j"), py::arg("mj"), py::arg("n") = py::none(),
          "J-coupled |n l j m_j>; j and m_j as strings such as '3/2'.")
      .def_property_readonly("n", &QuantumState::n)
      .def_property_readonly("l", &QuantumState::l)
      .def("__repr__", &QuantumState::str);

  m.def(
      "orbital_coefficients", [](int l, int ml) { return alphas(multipole::orbital_coefficients(l, ml)); },
      py::arg("l"), py::arg("ml"), "Exact orbital coefficients {L: 'p/q'}; empty for m_l = 0.");
  m.def(
      "total_coefficients",
      [](const std::string& j, const std::string& mj) {
        return alphas(multipole::total_coefficients(HalfInteger::parse(j), HalfInteger::parse(mj)));
      },
      py::arg("j"), py::arg("mj"), "Exact total-current coefficients {L: 'p/q'} of a J state.");
  m.def(
      "clebsch_gordan",
      [](int l1, int m1, int l2, int m2, int L, int M) {
        const auto c = angular::clebsch_gordan(l1, m1, l2, m2, L, M);
        return py::make_tuple(c.str(), c.to_double());
      },
      py::arg("l1"), py::arg("m1"), py::arg("l2"), py::arg("m2"), py::arg("L"), py::arg("M"),
      "<l1 m1 l2 m2 | L M> as (exact string, float).");

  py::class_<PyField>(m, "Field", "Axisymmetric field B of a state; lengths in a0, B in mu0 mu_B/(4 pi a0^3).")
      .def_property_readonly("orders", [](const PyField& f) { return f.field().orders(); })
      .def_property_readonly("r_min", [](const PyField& f) { return f.field().r_min(); })
      .def_property_readonly("r_max", [](const PyField& f) { return f.field().r_max(); })
      .def(
          "__call__",
          [](const PyField& f, py::array_t<double> r, py::array_t<double> theta) {
            auto br = py::vectorize([&](double rr, double tt) { return f.field()(rr, tt).B_r; });
            auto bt = py::vectorize([&](double rr, double tt) { return f.field()(rr, tt).B_theta; });
            return py::make_tuple(br(r, theta), bt(r, theta));
          },
          py::arg("r"), py::arg("theta"), "(B_r, B_theta), broadcasting over r and theta.")
      .def(
          "potential",
          [](const PyField& f, py::array_t<double> r, py::array_t<double> theta) {
            return py::vectorize([&](double rr, double tt) { return f.field().potential(rr, tt); })(r, theta);
          },
          py::arg("r"), py::arg("theta"), "A_phi in mu0 mu_B/(4 pi a0^2).")
      .def(
          "flux_function",
          [](const PyField& f, py::array_t<double> r, py::array_t<double> theta) {
            return py::vectorize([&](double rr, double tt) { return f.field().flux_function(rr, tt); })(r, theta);
          },
          py::arg("r"), py::arg("theta"), "r sin(theta) A_phi, constant on field lines.")
      .def(
          "current",
          [](const PyField& f, py::array_t<double> r, py::array_t<double> theta) {
            const multipole::SeriesEvaluator j(f.pipeline->current);
            return py::vectorize([&](double rr, double tt) { return j(rr, tt); })(r, theta);
          },
          py::arg("r"), py::arg("theta"), "j_phi in mu_B/(pi a0^4); analytic densities only.")
      .def(
          "trace",
          [](const PyField& f, double r, double theta, double arc_step, long max_steps, double r_min,
             double r_max) {
            field::TraceOptions o;
            o.arc_step = arc_step;
            o.max_steps = max_steps;
            o.r_min = r_min;
            o.r_max = r_max;
            field::FieldLine line;
            {
              py::gil_scoped_release release;
              line = field::trace_field_line(f.field(), {r, theta}, o);
            }
            return line_dict(line);
          },
          py::arg("r"), py::arg("theta"), py::arg("arc_step") = 0.01, py::arg("max_steps") = 1000000,
          py::arg("r_min") = 0.05, py::arg("r_max") = 60.0, "Traces one field line in the meridian plane.");

  m.def(
      "hydrogen_field",
      [](const QuantumState& state, const std::string& part) {
        if (!state.n()) throw std::invalid_argument("hydrogen_field needs a state with n");
        const auto density = radial::hydrogen_radial(*state.n(), state.l()).density();
        return PyField{std::make_shared<const field::Pipeline>(field::build_pipeline(state, density, parse_part(part)))};
      },
      py::arg("state"), py::arg("part") = "total", "Field of a hydrogen state; part is orbital, spin or total.");
  m.def(
      "sampled_field",
      [](const QuantumState& state, std::vector<double> radii, std::vector<double> radial, const std::string& part) {
        const radial::SampledProfile R(std::move(radii), std::move(radial));
        return PyField{std::make_shared<const field::Pipeline>(
            field::build_pipeline(state, R.map([](double, double v) { return v * v; }), parse_part(part)))};
      },
      py::arg("state"), py::arg("radii"), py::arg("radial"), py::arg("part") = "total",
      "Field of a state with a tabulated radial function R(r).");

  m.def(
      "verify",
      [](const std::string& scope) {
        const auto s = verify::parse_scope(scope);
        std::vector<verify::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run(s);
        }
        py::list out;
        for (const auto& c : results) {
          py::dict d;
          d["name"] = c.name;
          d["status"] = verify::status_name(c.status);
          d["max_error"] = c.max_error;
          d["tolerance"] = c.tolerance;
          d["note"] = c.note;
          out.append(d);
        }
        return out;
      },
      py::arg("scope") = "all", "Runs a verification scope; returns one dict per check.");
}
