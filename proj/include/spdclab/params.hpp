#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spdclab/io.hpp"

namespace spdclab {

// All internal frequencies/rates are angular (rad/s). Config files carry
// plain Hz; load_config applies value_rad_s = 2*pi*value_hz.

struct CavityMode {
  std::string label;        // "pump" | "signal" | "idler"
  double detuning = 0.0;    // delta: rad/s, relative to pump (or pump/2) resonance
  double kappa = 0.0;       // total linewidth, rad/s
  double kappa_ext = 0.0;   // external coupling, rad/s
  double kappa_int = 0.0;   // internal loss, rad/s
};

struct FilterSpec {
  double fwhm = 0.0;        // Delta, rad/s
  double kappa_abs = 0.0;   // far-detuned absorption rate, rad/s
  bool on_signal = true;
  bool on_idler = false;
};

struct PumpDrive {
  double amplitude = 0.0;   // eps_p, rad/s
  double bandwidth = 0.0;   // sigma_p, rad/s; 0 means continuous wave
  double power = 0.0;       // optional, watts (documentation only)
  double carrier = 0.0;     // optional, rad/s (documentation only)
};

struct SystemParams {
  CavityMode pump, signal, idler;
  FilterSpec filter;
  PumpDrive drive;
  double g = 0.0;           // nonlinear coupling, rad/s
  bool has_finesse = true;
  double finesse = 0.0;
  double ring_length = 0.0; // meters (alternative route to tau_rt)
  double ring_index = 0.0;
};

struct DerivedParams {
  double ng = 1.0;                     // (kappa_signal + kappa_abs)/Delta
  std::complex<double> beta;           // eps_p/(kappa_pump/2 + i delta_pump)
  double tau_rt = 0.0;                 // authoritative round-trip time difference, s
  double tau_rt_geom = 0.0;            // n*L/c * ng route; 0 when geometry absent
  double tau_c = 0.0;                  // correlation time, s
  double narrowed_linewidth = 0.0;     // kappa_signal/ng, rad/s
  double esc_signal = 0.0, esc_idler = 0.0, esc_pump = 0.0;
  bool below_threshold = true;
  double threshold_margin = 0.0;       // (kappa_signal/2) / (2 g |beta|)
  std::vector<std::string> warnings;
};

// Supplement-style default parameter set: all linewidths 2pi*1 GHz,
// kappa_ext 2pi*900 MHz, kappa_abs 2pi*16 GHz, Delta 2pi*68 MHz,
// g 2pi*2 MHz, finesse 150, drive sized so |beta| = 20.
SystemParams defaults();

void validate(const SystemParams& p);  // throws ValidationError
SystemParams load_config(const std::string& text);
SystemParams load_config_file(const std::string& path);
std::string emit_config(const SystemParams& p);
DerivedParams derive(const SystemParams& p);

}  // namespace spdclab
