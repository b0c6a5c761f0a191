#include "lamina/json_io.hpp"
#include "lamina/lamination.hpp"
#include "lamina/model.hpp"
#include "lamina/ray_tracer.hpp"
#include "lamina/renormalization.hpp"
#include "lamina/svg.hpp"
#include "lamina/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lamina;

// Structured results cross the boundary as JSON text; the package decodes them.
namespace {

std::string text(const Json& j) { return j.dump(); }

Lamination lamination_arg(const std::string& json) { return lamination_from_json(Json::parse(json)); }

TuningData tuning_arg(const std::string& json) { return tuning_from_json(Json::parse(json)); }

LandingOptions landing_options(double landing_tol) {
  LandingOptions o;
  o.landing_tol = landing_tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_lamina, m) {
  m.attr("__version__") = lamina::version;

  py::register_exception<AngleParseError>(m, "AngleParseError", PyExc_ValueError);
  py::register_exception<PolynomialParseError>(m, "PolynomialParseError", PyExc_ValueError);
  py::register_exception<JsonFormatError>(m, "JsonFormatError", PyExc_ValueError);
  py::register_exception<TuningError>(m, "TuningError", PyExc_ValueError);
  py::register_exception<LinkedLaminationError>(m, "LinkedLaminationError", PyExc_ValueError);
  py::register_exception<DisconnectedJuliaSetError>(m, "DisconnectedJuliaSetError");
  py::register_exception<LaminationConsistencyError>(m, "LaminationConsistencyError");
  py::register_exception<PullbackError>(m, "PullbackError");
  py::register_exception<ExtensionError>(m, "ExtensionError");

  m.def("sigma", [](const std::string& a, unsigned d) { return sigma(Angle::parse(a), d).str(); }, py::arg("angle"),
        py::arg("d") = 2);
  m.def(
      "orbit_info",
      [](const std::string& a, unsigned d) {
        OrbitInfo o = orbit_info(Angle::parse(a), d);
        return std::make_pair(o.preperiod, o.period);
      },
      py::arg("angle"), py::arg("d") = 2);

  m.def(
      "trace_ray",
      [](const std::string& poly, const std::string& angle, int depth) {
        return text(to_json(trace_ray(Polynomial::parse(poly), Angle::parse(angle), depth)));
      },
      py::arg("poly"), py::arg("angle"), py::arg("depth") = 30);
  m.def(
      "land",
      [](const std::string& poly, const std::string& angle, int depth, double landing_tol) {
        return text(to_json(land(Polynomial::parse(poly), Angle::parse(angle), depth, landing_options(landing_tol))));
      },
      py::arg("poly"), py::arg("angle"), py::arg("depth") = 30, py::arg("landing_tol") = 1e-6);
  m.def(
      "co_land",
      [](const std::string& poly, const std::string& a, const std::string& b, int depth) {
        return to_string(co_land(Polynomial::parse(poly), Angle::parse(a), Angle::parse(b), depth));
      },
      py::arg("poly"), py::arg("a"), py::arg("b"), py::arg("depth") = 30);

  m.def(
      "build_lamination",
      [](const std::string& poly, unsigned max_den, int depth, int threads) {
        BuildOptions o;
        o.threads = threads;
        Polynomial p = Polynomial::parse(poly);
        py::gil_scoped_release release;
        return text(to_json(build_rational_lamination(p, max_den, depth, o)));
      },
      py::arg("poly"), py::arg("max_den") = 12, py::arg("depth") = 30, py::arg("threads") = 1);
  m.def(
      "pullback_closure",
      [](const std::string& lam, const std::vector<std::vector<std::string>>& generators, int levels) {
        std::vector<AngleClass> gens;
        for (const auto& g : generators) gens.push_back(AngleClass::parse(g));
        return text(to_json(pullback_closure(lamination_arg(lam), gens, levels)));
      },
      py::arg("lamination"), py::arg("generators"), py::arg("levels"));
  m.def("check_unlinked", [](const std::string& lam) { return text(to_json(check_unlinked(lamination_arg(lam)))); });
  m.def("check_invariant", [](const std::string& lam) { return text(to_json(check_invariant(lamination_arg(lam)))); });
  m.def("quotient_model", [](const std::string& lam) { return text(to_json(quotient_model(lamination_arg(lam)))); });

  m.def("tuning_p", [](const std::string& t, const std::string& a) {
    return tuning_p(tuning_arg(t), Angle::parse(a)).str();
  });
  m.def("tuning_nu", [](const std::string& t, const std::string& b) -> std::optional<std::string> {
    auto v = tuning_nu(tuning_arg(t), Angle::parse(b));
    if (!v) return std::nullopt;
    return v->str();
  });
  m.def(
      "verify_order_preserving",
      [](const std::string& t, std::size_t samples) {
        return text(to_json(verify_order_preserving(tuning_arg(t), anchor_sample(samples))));
      },
      py::arg("tuning"), py::arg("samples") = 100);
  m.def("extend_model", [](const std::string& sub, const std::string& t, const std::string& ambient) {
    return text(to_json(extend_model(lamination_arg(sub), tuning_arg(t), lamination_arg(ambient))));
  });
  m.def("factors_through", [](const std::string& ext, const std::string& sub, const std::string& t) {
    return factors_through(lamination_arg(ext), lamination_arg(sub), tuning_arg(t));
  });
  m.def(
      "strategic_report",
      [](const std::string& poly, const std::string& t, std::size_t samples, int depth) {
        return text(to_json(strategic_report(Polynomial::parse(poly), tuning_arg(t), samples, depth)));
      },
      py::arg("poly"), py::arg("tuning"), py::arg("samples") = 20, py::arg("depth") = 30);
  m.def("render_svg", [](const std::string& lam) { return render_svg(lamination_arg(lam), nullptr, RenderOptions{}); });
}
