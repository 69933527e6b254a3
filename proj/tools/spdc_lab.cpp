// spdc-lab: metric reports, correlation traces, JSI grids, sweeps and the
// oracle validation suite for the cavity-SPDC slow-light source model.

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "spdclab/degenerate.hpp"
#include "spdclab/jsa.hpp"
#include "spdclab/nondegenerate.hpp"
#include "spdclab/oracle.hpp"
#include "spdclab/params.hpp"

namespace {

constexpr const char* kVersion = "spdc-lab 1.0.0";
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using nlohmann::json;
namespace fs = std::filesystem;
using namespace spdclab;

struct Session {
  SystemParams params;
  DerivedParams derived;
  std::string config_text;
  std::string out_dir;

  std::string config_hash() const { return hash_hex(config_text); }

  void stamp(CsvWriter& csv, const std::string& command) const {
    csv.add_meta("tool", kVersion);
    csv.add_meta("command", command);
    csv.add_meta("config_hash", config_hash());
    for (const auto& w : derived.warnings) csv.add_meta("warning", w);
  }

  void emit(const std::string& filename, const std::string& content) const {
    if (out_dir.empty()) {
      std::cout << content;
      return;
    }
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / filename).string(), content);
  }
};

Session open_session(const std::string& config_path, const std::string& out_dir) {
  Session s;
  s.config_text = config_path.empty() ? emit_config(defaults())
                                      : read_file(config_path);
  s.params = load_config(s.config_text);
  s.derived = derive(s.params);
  s.out_dir = out_dir;
  return s;
}

std::vector<double> parse_hz_list(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(kTwoPi * std::stod(item));
  }
  return out;
}

int cmd_metrics(Session& s, const std::string& regime) {
  CsvWriter csv;
  s.stamp(csv, "metrics");
  csv.add_meta("regime", regime);
  csv.columns = {"metric", "value", "unit", "provenance"};
  auto row = [&](const char* name, double v, const char* unit, const char* prov) {
    csv.add_row_raw({name, format_double(v), unit, prov});
  };

  if (regime == "degenerate-filtered" || regime == "bare") {
    DegenerateRegime r = make_degenerate(s.params, s.derived);
    if (regime == "bare") r.ng = 1.0;
    row("bandwidth", bandwidth(r), "rad/s", "product Lorentzian FWHM, width kappa/ng");
    row("pair_rate", pair_rate(r), "1/s", "4 g^2 |beta|^2/(ng kappa) at zero detuning");
    row("spectral_brightness", brightness(r), "per rad", "pair_rate / bandwidth");
    row("coherence_time", coherence_time(r), "s", "ng/kappa");
    row("g2_zero", g2(0.0, r), "dimensionless", "1 + 1/(4 R tau_c)");
    row("heralding_infinite_window", r.kappa_ext / r.kappa, "dimensionless",
        "escape efficiency limit of the box window");
  } else if (regime == "singly-filtered") {
    SinglyFilteredRegime r = make_singly_filtered(s.params, s.derived);
    row("bandwidth", bandwidth(r), "rad/s", "product FWHM of kappa_a/ng and kappa_b");
    row("pair_rate_exact", pair_rate_exact(r), "1/s", "two-term contour expression");
    row("pair_rate_approx", pair_rate_filtered_approx(r), "1/s",
        "16 g^2 |beta|^2/(kappa ng)");
    row("spectral_brightness", brightness(r), "per rad", "pair_rate_exact / bandwidth");
    row("coherence_time", coherence_time(r), "s", "ng/kappa_a");
    row("g2_zero", g2_conditioned(0.0, r, Conditioning::a_given_b), "dimensionless",
        "plateau branch at tau = 0");
    row("heralding_infinite_window", heralding_window(1e4 * r.ng / r.kappa_a, r),
        "dimensionless", "box window, T >> tau_rt branch");
  } else {
    std::cerr << "unknown regime: " << regime << "\n";
    return 2;
  }
  s.emit("metrics_" + regime + ".csv", csv.str());
  return 0;
}

int cmd_g2(Session& s, const std::string& regime, double tau_min, double tau_max,
           int samples) {
  DerivedParams& d = s.derived;
  SinglyFilteredRegime sf = make_singly_filtered(s.params, d);
  DegenerateRegime dg = make_degenerate(s.params, d);
  DegenerateRegime bare = dg;
  bare.ng = 1.0;
  double tc = coherence_time(sf);
  if (tau_min == 0.0 && tau_max == 0.0) {
    tau_min = -3.0 * sf.tau_rt;
    tau_max = 5.0 * tc;
  }
  double norm = std::pow(4.0 * sf.g * std::abs(sf.beta) / sf.kappa_a, 2);

  CsvWriter csv;
  s.stamp(csv, "g2");
  csv.add_meta("normalization", "peak of (g2-1)*(4 g |beta|/kappa)^2 is about 1");
  csv.add_meta("tau_unit_note", "tau_over_tc uses tau_c = ng/kappa");
  csv.columns = {"tau_s", "tau_over_tc", "curve", "g2", "g2_normalized", "branch"};
  bool all = regime == "all";
  for (int i = 0; i < samples; ++i) {
    double tau = tau_min + (tau_max - tau_min) * i / (samples - 1);
    if (all || regime == "singly-filtered") {
      double v = g2_conditioned(tau, sf, Conditioning::a_given_b);
      csv.add_row_raw({format_double(tau), format_double(tau / tc), "singly-filtered",
                       format_double(v), format_double((v - 1.0) * norm),
                       branch_name(g2_branch(tau, sf))});
    }
    if (all || regime == "degenerate-filtered") {
      double v = g2(tau, dg);
      csv.add_row_raw({format_double(tau), format_double(tau / tc),
                       "degenerate-filtered", format_double(v),
                       format_double((v - 1.0) * norm), "exponential"});
    }
    if (all || regime == "bare") {
      double v = g2(tau, bare);
      csv.add_row_raw({format_double(tau), format_double(tau / tc), "bare",
                       format_double(v), format_double((v - 1.0) * norm),
                       "exponential"});
    }
  }
  s.emit("g2_trace.csv", csv.str());
  return 0;
}

int cmd_jsi(Session& s, const std::string& pump_bw, int gn, int gm) {
  SinglyFilteredRegime r = make_singly_filtered(s.params, s.derived);
  std::vector<double> bws = parse_hz_list(pump_bw);
  if (bws.empty()) {
    std::cerr << "jsi: --pump-bw list is empty\n";
    return 2;
  }
  for (double sigma : bws) {
    PumpSpectrum pump{s.derived.beta, sigma};
    GridSpec spec = default_grid(r, pump);
    if (gn > 0) spec.n_signal = gn;
    if (gm > 0) spec.n_idler = gm;
    JsaMatrix m = build_grid(r, pump, spec);
    JsiExport e = export_jsi(m);

    std::string tag = format_double(sigma / kTwoPi);
    CsvWriter csv;
    s.stamp(csv, "jsi");
    csv.add_meta("pump_bandwidth_hz", tag);
    csv.columns = {"signal_hz"};
    for (double f : e.idler_hz) csv.columns.push_back(format_double(f));
    for (int i = 0; i < e.intensity.rows(); ++i) {
      std::vector<std::string> row{format_double(e.signal_hz[i])};
      for (int j = 0; j < e.intensity.cols(); ++j)
        row.push_back(format_double(e.intensity(i, j)));
      csv.add_row_raw(std::move(row));
    }
    s.emit("jsi_" + tag + ".csv", csv.str());

    json meta;
    meta["tool"] = kVersion;
    meta["config_hash"] = s.config_hash();
    meta["pump_bandwidth_hz"] = sigma / kTwoPi;
    meta["grid"] = {{"n_signal", spec.n_signal},
                    {"n_idler", spec.n_idler},
                    {"signal_extent_hz", spec.signal_extent / kTwoPi},
                    {"idler_extent_hz", spec.idler_extent / kTwoPi}};
    meta["purity"] = purity(m);
    meta["heralding"] = heralding_broadband(m).eta;
    meta["warnings"] = m.warnings;
    s.emit("jsi_" + tag + ".meta.json", meta.dump(2) + "\n");
  }
  return 0;
}

int cmd_sweep(Session& s, const std::string& param, const std::string& values,
              int gn, int gm) {
  std::vector<double> vals = parse_hz_list(values);
  if (vals.empty()) {
    std::cerr << "sweep: empty values list\n";
    return 2;
  }
  CsvWriter csv;
  s.stamp(csv, "sweep");
  csv.add_meta("parameter", param);

  if (param == "drive.bandwidth") {
    SinglyFilteredRegime r = make_singly_filtered(s.params, s.derived);
    csv.columns = {"value_hz", "purity", "heralding", "pair_rate", "bandwidth_rad_s"};
    for (double v : vals) {
      PumpSpectrum pump{s.derived.beta, v};
      GridSpec spec = default_grid(r, pump);
      if (gn > 0) spec.n_signal = gn;
      if (gm > 0) spec.n_idler = gm;
      JsaMatrix m = build_grid(r, pump, spec);
      csv.add_row({v / kTwoPi, purity(m), heralding_broadband(m).eta,
                   pair_rate_exact(r), bandwidth(r)});
    }
  } else if (param == "filter.fwhm") {
    csv.columns = {"value_hz",          "purity",        "heralding",
                   "post_purity",       "post_heralding", "signal_bandwidth_rad_s"};
    double sigma = s.params.drive.bandwidth > 0.0 ? s.params.drive.bandwidth
                                                  : kTwoPi * 600e6;
    for (double v : vals) {
      SystemParams p = s.params;
      p.filter.fwhm = v;
      DerivedParams d = derive(p);
      SinglyFilteredRegime r = make_singly_filtered(p, d);
      PumpSpectrum pump{d.beta, sigma};
      GridSpec spec = default_grid(r, pump);
      if (gn > 0) spec.n_signal = gn;
      if (gm > 0) spec.n_idler = gm;
      JsaMatrix m = build_grid(r, pump, spec);
      SinglyFilteredRegime bare = make_bare(p, d);
      PostFilterResult post =
          post_cavity_filter_compare(p.signal.kappa / d.ng, bare, pump);
      csv.add_row({v / kTwoPi, purity(m), heralding_broadband(m).eta, post.purity,
                   post.heralding, p.signal.kappa / d.ng});
    }
  } else {
    std::cerr << "sweep: unresolvable parameter path: " << param << "\n";
    return 2;
  }
  s.emit("sweep.csv", csv.str());
  return 0;
}

int cmd_validate(Session& s, const std::vector<std::string>& tol_overrides) {
  std::map<std::string, double> tols;
  for (const auto& kv : tol_overrides) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "--tolerance expects NAME=VALUE, got: " << kv << "\n";
      return 2;
    }
    tols[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  auto checks = run_validation(s.params, tols);
  json report;
  report["tool"] = kVersion;
  report["config_hash"] = s.config_hash();
  report["checks"] = json::array();
  bool all_pass = true;
  for (const auto& c : checks) {
    report["checks"].push_back({{"name", c.name},
                                {"expected", c.expected},
                                {"obtained", c.obtained},
                                {"tolerance", c.tolerance},
                                {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  }
  report["pass"] = all_pass;
  s.emit("validation.json", report.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SPDC_LAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"cavity-SPDC slow-light source simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir, regime = "singly-filtered";
  std::string grid = "", pump_bw = "", sweep_param = "drive.bandwidth";
  double tau_min = 0.0, tau_max = 0.0;
  int samples = 400;
  std::vector<std::string> tol_overrides;

  app.add_option("--config", config_path, "INI config file (defaults otherwise)");
  app.add_option("--out", out_dir, "output directory (stdout otherwise)");

  auto* c_defaults = app.add_subcommand("defaults", "emit the built-in parameter set");
  auto* c_metrics = app.add_subcommand("metrics", "table metrics for one regime");
  c_metrics->add_option("--regime", regime,
                        "bare | degenerate-filtered | singly-filtered");
  auto* c_g2 = app.add_subcommand("g2", "correlation trace CSV");
  c_g2->add_option("--regime", regime, "curve set: all or a single regime");
  c_g2->add_option("--tau-min", tau_min, "seconds");
  c_g2->add_option("--tau-max", tau_max, "seconds");
  c_g2->add_option("--samples", samples, "trace points");
  auto* c_jsi = app.add_subcommand("jsi", "JSI grid CSV per pump bandwidth");
  c_jsi->add_option("--pump-bw", pump_bw, "comma list of bandwidths in Hz")->required();
  c_jsi->add_option("--grid", grid, "NxM grid size");
  auto* c_sweep = app.add_subcommand("sweep", "parameter sweep CSV");
  c_sweep->add_option("--param", sweep_param, "drive.bandwidth | filter.fwhm");
  c_sweep->add_option("--grid", grid, "NxM grid size");
  c_sweep->add_option("--pump-bw", pump_bw, "comma list of sweep values in Hz")
      ->required();
  auto* c_validate = app.add_subcommand("validate", "run the oracle suite");
  c_validate->add_option("--tolerance", tol_overrides, "NAME=VALUE overrides");
  // let the global --config/--out flags appear after the subcommand too
  for (auto* s : {c_defaults, c_metrics, c_g2, c_jsi, c_sweep, c_validate})
    s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_defaults->parsed()) {
      std::string text = config_path.empty()
                             ? emit_config(defaults())
                             : emit_config(load_config(read_file(config_path)));
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file((fs::path(out_dir) / "defaults.ini").string(), text);
      } else {
        std::cout << text;
      }
      return 0;
    }
    Session s = open_session(config_path, out_dir);
    for (const auto& w : s.derived.warnings) std::cerr << "warning: " << w << "\n";

    if (c_metrics->parsed()) return cmd_metrics(s, regime);
    if (c_g2->parsed()) {
      if (c_g2->count("--regime") == 0) regime = "all";
      return cmd_g2(s, regime, tau_min, tau_max, samples);
    }
    if (c_jsi->parsed() || c_sweep->parsed()) {
      int gn = 0, gm = 0;
      if (!grid.empty()) {
        size_t x = grid.find('x');
        if (x == std::string::npos) {
          std::cerr << "--grid expects NxM\n";
          return 2;
        }
        gn = std::stoi(grid.substr(0, x));
        gm = std::stoi(grid.substr(x + 1));
      }
      if (c_jsi->parsed()) return cmd_jsi(s, pump_bw, gn, gm);
      return cmd_sweep(s, sweep_param, pump_bw, gn, gm);
    }
    if (c_validate->parsed()) return cmd_validate(s, tol_overrides);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
