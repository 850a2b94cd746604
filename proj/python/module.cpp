#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "biwave/cli.hpp"
#include "biwave/error.hpp"
#include "biwave/field_io.hpp"
#include "biwave/twistor_factory.hpp"
#include "biwave/verify.hpp"

namespace py = pybind11;
using namespace biwave;

namespace {

using C3 = std::array<Complex, 3>;

CVec3 cvec(const C3& a) { return {a[0], a[1], a[2]}; }
C3 arr(const CVec3& v) { return {v.x, v.y, v.z}; }
Vec3 vec(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

Sign sign(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw py::value_error("branch must be '+' or '-'");
}

StructuralCoefficient coeff(const C3& F) { return {cvec(F)}; }

py::dict claim_dict(const ClaimResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["convention"] = std::string(to_string(r.convention));
  d["status"] = std::string(to_string(r.status));
  d["max_error"] = r.max_error;
  d["corrected_error"] = r.corrected_error ? py::cast(*r.corrected_error) : py::none();
  d["tolerance"] = r.tolerance;
  d["draws"] = r.draws;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "biquaternion wave fields";

  py::register_exception<Error>(m, "BiwaveError", PyExc_ValueError);

  py::class_<Biquaternion>(m, "Biquaternion")
      .def(py::init([](Complex s, const C3& v) { return Biquaternion{s, cvec(v)}; }),
           py::arg("s") = Complex{}, py::arg("v") = C3{})
      .def_property_readonly("s", [](const Biquaternion& b) { return b.s; })
      .def_property_readonly("v", [](const Biquaternion& b) { return arr(b.v); })
      .def("__mul__", [](const Biquaternion& a, const Biquaternion& b) { return mul(a, b); })
      .def("__add__", [](const Biquaternion& a, const Biquaternion& b) { return a + b; })
      .def("__sub__", [](const Biquaternion& a, const Biquaternion& b) { return a - b; })
      .def("norm", [](const Biquaternion& b) { return norm(b); })
      .def("pseudonorm", [](const Biquaternion& b) { return pseudonorm(b); })
      .def(
          "energy_momentum",
          [](const Biquaternion& b, const std::string& convention) {
            ConventionFlags f;
            f.xi = parse_xi_convention(convention);
            return energy_momentum(b, f);
          },
          py::arg("convention") = "HermitianLeft")
      .def("__repr__", [](const Biquaternion& b) {
        std::ostringstream os;
        os << "Biquaternion(" << b << ")";
        return os.str();
      });

  py::class_<PlaneWaveField>(m, "PlaneWave")
      .def_readonly("amp", &PlaneWaveField::amp)
      .def_readonly("sigma", &PlaneWaveField::sigma)
      .def_property_readonly("kappa", [](const PlaneWaveField& f) { return arr(f.kappa); })
      .def("__call__", [](const PlaneWaveField& f, double tau, const std::array<double, 3>& x) {
        return f(tau, vec(x));
      });

  m.def(
      "xi_twistor",
      [](const std::array<double, 3>& xi, const C3& F, const std::string& branch) {
        return xi_twistor(vec(xi), coeff(F), sign(branch));
      },
      py::arg("xi"), py::arg("F"), py::arg("branch") = "+");
  m.def(
      "evanescent_twistor",
      [](const std::array<double, 3>& xi, const C3& F, const std::string& branch) {
        return evanescent_twistor(vec(xi), coeff(F), sign(branch));
      },
      py::arg("xi"), py::arg("F"), py::arg("branch") = "+");
  m.def(
      "h_twistor",
      [](const C3& F, const std::string& branch) { return h_twistor(coeff(F), sign(branch)); },
      py::arg("F"), py::arg("branch") = "+");
  m.def(
      "omega_twistor",
      [](double omega, const C3& F, const std::array<double, 3>& e, const std::string& branch) {
        return omega_twistor(omega, coeff(F), vec(e), sign(branch));
      },
      py::arg("omega"), py::arg("F"), py::arg("e"), py::arg("branch") = "+");
  m.def(
      "static_twistor",
      [](const C3& F, const std::array<double, 3>& e) { return static_twistor(coeff(F), vec(e)); },
      py::arg("F"), py::arg("e"));

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "run_claim",
      [](const std::string& id, const std::string& convention, std::uint64_t seed) {
        ConventionFlags f;
        f.xi = parse_xi_convention(convention);
        return claim_dict(run_claim(id, f, seed));
      },
      py::arg("id"), py::arg("convention") = "HermitianLeft", py::arg("seed") = kDefaultSeed);
  m.def(
      "verify_json",
      [](const std::vector<std::string>& conventions, std::uint64_t seed) {
        std::vector<XiConvention> conv;
        for (const auto& c : conventions) conv.push_back(parse_xi_convention(c));
        return to_json(run_all(conv, seed));
      },
      py::arg("conventions") = std::vector<std::string>{"HermitianLeft"},
      py::arg("seed") = kDefaultSeed);

  m.def(
      "read_field",
      [](const std::string& path) {
        const FieldDump d = read_field(path);
        const auto& dims = d.field.dims();
        py::array_t<Complex> a({dims[0], dims[1], dims[2], dims[3], std::size_t{4}});
        auto* p = a.mutable_data();
        for (const auto& b : d.field.data()) {
          *p++ = b.s;
          *p++ = b.v.x;
          *p++ = b.v.y;
          *p++ = b.v.z;
        }
        return py::make_tuple(a, d.generator.dump());
      },
      py::arg("path"), "Returns (array[nt, nx, ny, nz, 4] complex, generator JSON string).");

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = cli_execute(std::move(args), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
