#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spdclab/degenerate.hpp"
#include "spdclab/jsa.hpp"
#include "spdclab/lineshape.hpp"
#include "spdclab/nondegenerate.hpp"
#include "spdclab/oracle.hpp"
#include "spdclab/params.hpp"

namespace py = pybind11;
using namespace spdclab;

PYBIND11_MODULE(_spdclab, m) {
  m.doc() = "cavity-enhanced SPDC with an intra-cavity dissipative slow-light filter";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<CavityMode>(m, "CavityMode")
      .def(py::init<>())
      .def_readwrite("label", &CavityMode::label)
      .def_readwrite("detuning", &CavityMode::detuning)
      .def_readwrite("kappa", &CavityMode::kappa)
      .def_readwrite("kappa_ext", &CavityMode::kappa_ext)
      .def_readwrite("kappa_int", &CavityMode::kappa_int);

  py::class_<FilterSpec>(m, "FilterSpec")
      .def(py::init<>())
      .def_readwrite("fwhm", &FilterSpec::fwhm)
      .def_readwrite("kappa_abs", &FilterSpec::kappa_abs);

  py::class_<PumpDrive>(m, "PumpDrive")
      .def(py::init<>())
      .def_readwrite("amplitude", &PumpDrive::amplitude)
      .def_readwrite("bandwidth", &PumpDrive::bandwidth)
      .def_readwrite("power", &PumpDrive::power)
      .def_readwrite("carrier", &PumpDrive::carrier);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("pump", &SystemParams::pump)
      .def_readwrite("signal", &SystemParams::signal)
      .def_readwrite("idler", &SystemParams::idler)
      .def_readwrite("g", &SystemParams::g)
      .def_readwrite("filter", &SystemParams::filter)
      .def_readwrite("finesse", &SystemParams::finesse)
      .def_readwrite("ring_length", &SystemParams::ring_length)
      .def_readwrite("ring_index", &SystemParams::ring_index)
      .def_readwrite("drive", &SystemParams::drive);

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("ng", &DerivedParams::ng)
      .def_readonly("beta", &DerivedParams::beta)
      .def_readonly("tau_rt", &DerivedParams::tau_rt)
      .def_readonly("tau_rt_geom", &DerivedParams::tau_rt_geom)
      .def_readonly("tau_c", &DerivedParams::tau_c)
      .def_readonly("narrowed_linewidth", &DerivedParams::narrowed_linewidth)
      .def_readonly("esc_signal", &DerivedParams::esc_signal)
      .def_readonly("esc_idler", &DerivedParams::esc_idler)
      .def_readonly("esc_pump", &DerivedParams::esc_pump)
      .def_readonly("threshold_margin", &DerivedParams::threshold_margin)
      .def_readonly("warnings", &DerivedParams::warnings);

  m.def("defaults", &defaults);
  m.def("validate", &validate, py::arg("params"));
  m.def("load_config", &load_config, py::arg("text"));
  m.def("load_config_file", &load_config_file, py::arg("path"));
  m.def("emit_config", &emit_config, py::arg("params"));
  m.def("derive", &derive, py::arg("params"));

  py::class_<DegenerateRegime>(m, "DegenerateRegime")
      .def(py::init<>())
      .def_readwrite("kappa", &DegenerateRegime::kappa)
      .def_readwrite("kappa_ext", &DegenerateRegime::kappa_ext)
      .def_readwrite("ng", &DegenerateRegime::ng)
      .def_readwrite("g", &DegenerateRegime::g)
      .def_readwrite("beta", &DegenerateRegime::beta)
      .def_readwrite("delta_a", &DegenerateRegime::delta_a);

  m.def("make_degenerate", &make_degenerate, py::arg("params"), py::arg("derived"));
  m.def("degenerate_spectral_density",
        py::overload_cast<double, const DegenerateRegime&>(&spectral_density),
        py::arg("w"), py::arg("regime"));
  m.def("degenerate_pair_rate", py::overload_cast<const DegenerateRegime&>(&pair_rate),
        py::arg("regime"));
  m.def("degenerate_bandwidth",
        py::overload_cast<const DegenerateRegime&>(&bandwidth), py::arg("regime"));
  m.def("degenerate_coherence_time",
        py::overload_cast<const DegenerateRegime&>(&coherence_time), py::arg("regime"));
  m.def("degenerate_brightness",
        py::overload_cast<const DegenerateRegime&>(&brightness), py::arg("regime"));
  m.def("degenerate_g2", py::overload_cast<double, const DegenerateRegime&>(&g2),
        py::arg("tau"), py::arg("regime"));
  m.def("degenerate_G2_unnormalized", &G2_unnormalized, py::arg("tau"), py::arg("regime"));
  m.def("degenerate_heralding",
        py::overload_cast<double, const DegenerateRegime&>(&heralding),
        py::arg("T"), py::arg("regime"));

  py::class_<SinglyFilteredRegime>(m, "SinglyFilteredRegime")
      .def(py::init<>())
      .def_readwrite("kappa_a", &SinglyFilteredRegime::kappa_a)
      .def_readwrite("kappa_b", &SinglyFilteredRegime::kappa_b)
      .def_readwrite("kappa_a_ext", &SinglyFilteredRegime::kappa_a_ext)
      .def_readwrite("kappa_b_ext", &SinglyFilteredRegime::kappa_b_ext)
      .def_readwrite("ng", &SinglyFilteredRegime::ng)
      .def_readwrite("g", &SinglyFilteredRegime::g)
      .def_readwrite("beta", &SinglyFilteredRegime::beta)
      .def_readwrite("delta_a", &SinglyFilteredRegime::delta_a)
      .def_readwrite("delta_b", &SinglyFilteredRegime::delta_b)
      .def_readwrite("tau_rt", &SinglyFilteredRegime::tau_rt)
      .def_readwrite("filter_fwhm", &SinglyFilteredRegime::filter_fwhm);

  py::enum_<Conditioning>(m, "Conditioning")
      .value("a_given_b", Conditioning::a_given_b)
      .value("b_given_a", Conditioning::b_given_a);

  m.def("make_singly_filtered", &make_singly_filtered, py::arg("params"), py::arg("derived"));
  m.def("make_bare", &make_bare, py::arg("params"), py::arg("derived"));
  m.def("nondegenerate_spectral_density",
        py::overload_cast<double, const SinglyFilteredRegime&>(&spectral_density),
        py::arg("w"), py::arg("regime"));
  m.def("pair_rate_exact", &pair_rate_exact, py::arg("regime"));
  m.def("pair_rate_filtered_approx", &pair_rate_filtered_approx, py::arg("regime"));
  m.def("pair_rate_bare", &pair_rate_bare, py::arg("regime"));
  m.def("nondegenerate_bandwidth",
        py::overload_cast<const SinglyFilteredRegime&>(&bandwidth), py::arg("regime"));
  m.def("nondegenerate_brightness",
        py::overload_cast<const SinglyFilteredRegime&>(&brightness), py::arg("regime"));
  m.def("nondegenerate_coherence_time",
        py::overload_cast<const SinglyFilteredRegime&>(&coherence_time), py::arg("regime"));
  m.def("g2_conditioned", &g2_conditioned, py::arg("tau"), py::arg("regime"),
        py::arg("conditioning") = Conditioning::a_given_b);
  m.def("g2_branch_name",
        [](double tau, const SinglyFilteredRegime& r) {
          return std::string(branch_name(g2_branch(tau, r)));
        },
        py::arg("tau"), py::arg("regime"));
  m.def("heralding_window", &heralding_window, py::arg("T"), py::arg("regime"));

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("n_signal", &GridSpec::n_signal)
      .def_readwrite("n_idler", &GridSpec::n_idler)
      .def_readwrite("signal_extent", &GridSpec::signal_extent)
      .def_readwrite("idler_extent", &GridSpec::idler_extent)
      .def_readwrite("signal_center", &GridSpec::signal_center)
      .def_readwrite("idler_center", &GridSpec::idler_center);

  py::class_<PumpSpectrum>(m, "PumpSpectrum")
      .def(py::init<>())
      .def_readwrite("beta_peak", &PumpSpectrum::beta_peak)
      .def_readwrite("sigma", &PumpSpectrum::sigma);

  py::class_<JsaMatrix>(m, "JsaMatrix")
      .def_readonly("V", &JsaMatrix::V)
      .def_readonly("grid", &JsaMatrix::grid)
      .def_readonly("warnings", &JsaMatrix::warnings)
      .def("signal_axis", &JsaMatrix::signal_axis)
      .def("idler_axis", &JsaMatrix::idler_axis);

  py::class_<HeraldingResult>(m, "HeraldingResult")
      .def_readonly("eta", &HeraldingResult::eta)
      .def_readonly("w_late", &HeraldingResult::w_late)
      .def_readonly("w_early", &HeraldingResult::w_early);

  py::class_<JsiExport>(m, "JsiExport")
      .def_readonly("intensity", &JsiExport::intensity)
      .def_readonly("signal_hz", &JsiExport::signal_hz)
      .def_readonly("idler_hz", &JsiExport::idler_hz);

  m.def("default_grid", &default_grid, py::arg("regime"), py::arg("pump"));
  m.def("pump_amplitude", &pump_amplitude, py::arg("w"), py::arg("pump"));
  m.def("jsa_value", &jsa_value, py::arg("w"), py::arg("wp"), py::arg("regime"),
        py::arg("pump"));
  m.def("build_grid", &build_grid, py::arg("regime"), py::arg("pump"), py::arg("grid"));
  m.def("purity", py::overload_cast<const JsaMatrix&>(&purity), py::arg("jsa"));
  m.def("g2_herald", py::overload_cast<const JsaMatrix&>(&g2_herald), py::arg("jsa"));
  m.def("heralding_broadband", &heralding_broadband, py::arg("jsa"));
  m.def("export_jsi", &export_jsi, py::arg("jsa"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("expected", &CheckResult::expected)
      .def_readonly("obtained", &CheckResult::obtained)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("passed", &CheckResult::pass);

  m.def("run_validation", &run_validation, py::arg("params"),
        py::arg("tolerances") = std::map<std::string, double>{});
}
