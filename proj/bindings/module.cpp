#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "harmconv/canonical.hpp"
#include "harmconv/errors.hpp"
#include "harmconv/geometry.hpp"
#include "harmconv/harmonic.hpp"
#include "harmconv/map_spec.hpp"
#include "harmconv/render.hpp"
#include "harmconv/scenarios.hpp"
#include "harmconv/schur_cohn.hpp"
#include "harmconv/series.hpp"

namespace py = pybind11;

using harmconv::Complex;
using harmconv::DiskGrid;
using harmconv::HarmonicMap;
using harmconv::TruncatedSeries;

namespace {

harmconv::ClassTag tag_from_string(const std::string& name) {
  if (name == "H") return harmconv::ClassTag::H;
  if (name == "H0") return harmconv::ClassTag::H0;
  if (name == "unconstrained") return harmconv::ClassTag::Unconstrained;
  throw harmconv::SchemaError("class must be one of H, H0, unconstrained");
}

std::string tag_name(harmconv::ClassTag tag) {
  switch (tag) {
    case harmconv::ClassTag::H:
      return "H";
    case harmconv::ClassTag::H0:
      return "H0";
    default:
      return "unconstrained";
  }
}

DiskGrid make_grid(const std::optional<std::vector<double>>& radii,
                   std::optional<int> angles) {
  const DiskGrid def;
  if (!radii && !angles) return def;
  return DiskGrid(radii.value_or(def.radii()),
                  angles.value_or(def.angles_per_ring()));
}

py::object json_to_py(const harmconv::Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

py::dict univalence_dict(const harmconv::UnivalenceReport& rep) {
  py::dict out;
  out["locally_univalent"] = rep.locally_univalent;
  out["min_jacobian"] = rep.min_jacobian;
  out["min_jacobian_witness"] = rep.min_jacobian_witness;
  out["max_dilatation_modulus"] = rep.max_dilatation_modulus;
  out["max_dilatation_witness"] = rep.max_dilatation_witness;
  return out;
}

py::dict certificate_dict(const harmconv::ConvexityCertificate& cert) {
  py::dict out;
  out["mu"] = cert.mu;
  out["nu"] = cert.nu;
  out["min_real_part"] = cert.min_real_part;
  out["witness"] = cert.witness;
  out["passes"] = cert.passes();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Harmonic map convolution toolkit";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const harmconv::IOError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const harmconv::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<TruncatedSeries>(m, "Series")
      .def(py::init<std::vector<Complex>>(), py::arg("coefficients"))
      .def_property_readonly("order", &TruncatedSeries::order)
      .def_property_readonly(
          "coeffs", [](const TruncatedSeries& s) { return s.coeffs(); })
      .def("__call__",
           [](const TruncatedSeries& s, Complex z) { return evaluate(s, z); },
           py::arg("z"))
      .def("differentiate",
           [](const TruncatedSeries& s) { return differentiate(s); })
      .def("tail_bound", &TruncatedSeries::tail_bound, py::arg("radius"));

  py::class_<HarmonicMap>(m, "Map")
      .def(py::init([](const TruncatedSeries& h, const TruncatedSeries& g,
                       const std::string& cls) {
             return HarmonicMap(h, g, tag_from_string(cls));
           }),
           py::arg("h"), py::arg("g"), py::arg("cls") = "H")
      .def_property_readonly("h", &HarmonicMap::h)
      .def_property_readonly("g", &HarmonicMap::g)
      .def_property_readonly("order", &HarmonicMap::order)
      .def_property_readonly(
          "class_tag",
          [](const HarmonicMap& f) { return tag_name(f.class_tag()); })
      .def("__call__",
           [](const HarmonicMap& f, Complex z) { return evaluate_map(f, z); },
           py::arg("z"))
      .def("jacobian",
           [](const HarmonicMap& f, Complex z) { return jacobian_at(f, z); },
           py::arg("z"))
      .def("dilatation",
           [](const HarmonicMap& f) { return dilatation(f); });

  m.def("build_map", &harmconv::build_map_from_string, py::arg("spec_json"));
  m.def("serialize",
        [](const HarmonicMap& f) { return harmconv::serialize_map(f).dump(2); },
        py::arg("map"));

  m.def("right_halfplane_f0", &harmconv::right_halfplane_f0,
        py::arg("order") = harmconv::kDefaultOrder);
  m.def("slanted_halfplane_canonical",
        [](Complex a, double gamma, int order) {
          return slanted_halfplane_canonical(harmconv::SlantParams(a, gamma),
                                             order);
        },
        py::arg("a"), py::arg("gamma"),
        py::arg("order") = harmconv::kDefaultOrder);

  m.def("convolve", &harmconv::convolve, py::arg("f"), py::arg("g"));
  m.def("rotate", &harmconv::rotate, py::arg("f"), py::arg("mu"));
  m.def("convex_combination", &harmconv::convex_combination, py::arg("maps"),
        py::arg("weights"));
  m.def("convolution_dilatation_f_a0", &harmconv::convolution_dilatation_f_a0,
        py::arg("a"), py::arg("f"));

  m.def("local_univalence",
        [](const HarmonicMap& f, const std::optional<std::vector<double>>& radii,
           std::optional<int> angles) {
          return univalence_dict(local_univalence(f, make_grid(radii, angles)));
        },
        py::arg("f"), py::arg("radii") = py::none(),
        py::arg("angles") = py::none());
  m.def("direction_convexity",
        [](const HarmonicMap& f, double alpha,
           const std::optional<std::vector<double>>& radii,
           std::optional<int> angles) {
          return certificate_dict(
              direction_convexity(f, alpha, make_grid(radii, angles)));
        },
        py::arg("f"), py::arg("alpha"), py::arg("radii") = py::none(),
        py::arg("angles") = py::none());
  m.def("rz_search",
        [](const TruncatedSeries& phi,
           const std::optional<std::vector<double>>& radii,
           std::optional<int> angles, int mu_steps, int nu_steps) {
          return certificate_dict(
              rz_search(phi, make_grid(radii, angles), mu_steps, nu_steps));
        },
        py::arg("phi"), py::arg("radii") = py::none(),
        py::arg("angles") = py::none(), py::arg("mu_steps") = 360,
        py::arg("nu_steps") = 181);
  m.def("halfplane_membership",
        [](const HarmonicMap& f, Complex a, double gamma,
           const std::optional<std::vector<double>>& radii,
           std::optional<int> angles) {
          return halfplane_membership(f, a, gamma, make_grid(radii, angles));
        },
        py::arg("f"), py::arg("a"), py::arg("gamma"),
        py::arg("radii") = py::none(), py::arg("angles") = py::none());
  m.def("strip_membership",
        [](const HarmonicMap& f, Complex b, double beta,
           const std::optional<std::vector<double>>& radii,
           std::optional<int> angles) {
          const harmconv::StripMargins margins =
              strip_membership(f, b, beta, make_grid(radii, angles));
          return py::make_tuple(margins.lower, margins.upper);
        },
        py::arg("f"), py::arg("b"), py::arg("beta"),
        py::arg("radii") = py::none(), py::arg("angles") = py::none());

  m.def("count_zeros_in_disk",
        [](const std::vector<Complex>& coeffs) {
          const harmconv::SchurCohnReport rep =
              count_zeros_in_disk(harmconv::Polynomial(coeffs));
          py::dict out;
          out["zeros_inside"] = rep.zeros_inside;
          out["zeros_on_boundary"] = rep.zeros_on_boundary;
          out["zeros_outside"] = rep.zeros_outside;
          out["degenerate"] = rep.degenerate;
          return out;
        },
        py::arg("coefficients"));
  m.def("theorem43_cubic",
        [](double a1, double a2, const std::string& kase) {
          harmconv::Case43 c;
          if (kase == "minus_one")
            c = harmconv::Case43::MinusOne;
          else if (kase == "plus_one")
            c = harmconv::Case43::PlusOne;
          else
            throw harmconv::SchemaError("case must be minus_one or plus_one");
          const harmconv::Theorem43Cubic cubic = theorem43_cubic(a1, a2, c);
          py::dict out;
          out["c2"] = cubic.c2;
          out["c1"] = cubic.c1;
          out["c0"] = cubic.c0;
          out["condition_holds"] =
              theorem43_condition_check(a1, a2, c);
          return out;
        },
        py::arg("a1_prime"), py::arg("a2_prime"), py::arg("case"));

  m.def("scenario_ids", &harmconv::scenario_ids);
  m.def("run_scenario",
        [](const std::string& id, std::optional<Complex> a,
           std::optional<double> gamma, std::optional<double> beta,
           std::optional<double> theta, std::optional<int> n,
           std::optional<int> order,
           const std::optional<std::vector<double>>& grid_radii,
           std::optional<int> grid_angles, std::uint64_t seed) {
          harmconv::ScenarioOverrides ov;
          ov.a = a;
          ov.gamma = gamma;
          ov.beta = beta;
          ov.theta = theta;
          ov.n = n;
          ov.order = order;
          ov.grid_radii = grid_radii;
          ov.grid_angles = grid_angles;
          ov.seed = seed;
          const harmconv::ScenarioResult res = run_scenario(id, ov);
          py::dict out;
          out["scenario_id"] = res.scenario_id;
          out["verdict"] = res.verdict;
          out["skip_reason"] = res.skip_reason;
          out["document"] = json_to_py(res.document);
          return out;
        },
        py::arg("scenario_id"), py::arg("a") = py::none(),
        py::arg("gamma") = py::none(), py::arg("beta") = py::none(),
        py::arg("theta") = py::none(), py::arg("n") = py::none(),
        py::arg("order") = py::none(), py::arg("grid_radii") = py::none(),
        py::arg("grid_angles") = py::none(), py::arg("seed") = 0);

  m.def("render_svg",
        [](const HarmonicMap& f, const std::string& path, int rings, int rays,
           int samples, double max_radius) {
          harmconv::RenderStyle style;
          style.rings = rings;
          style.rays = rays;
          style.samples = samples;
          style.max_radius = max_radius;
          render_svg(f, style, path);
        },
        py::arg("f"), py::arg("path"), py::arg("rings") = 12,
        py::arg("rays") = 24, py::arg("samples") = 256,
        py::arg("max_radius") = 0.95);
  m.def("render_csv",
        [](const HarmonicMap& f, const std::string& path, int rings, int rays,
           int samples, double max_radius) {
          harmconv::RenderStyle style;
          style.rings = rings;
          style.rays = rays;
          style.samples = samples;
          style.max_radius = max_radius;
          render_csv(f, style, path);
        },
        py::arg("f"), py::arg("path"), py::arg("rings") = 12,
        py::arg("rays") = 24, py::arg("samples") = 256,
        py::arg("max_radius") = 0.95);
}
