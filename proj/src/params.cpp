#include "spdclab/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace spdclab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLightSpeed = 299792458.0;  // m/s

double to_angular(double hz) { return kTwoPi * hz; }

// Emit the Hz value whose angular reconstruction is bit-identical to v when
// such a preimage exists (it does for anything that came in through a config).
double to_hz_exact(double v) {
  double hz = v / kTwoPi;
  for (double cand : {hz, std::nextafter(hz, v), std::nextafter(hz, -v)}) {
    if (kTwoPi * cand == v) return cand;
  }
  return hz;
}

double get_num(const ConfigDoc& doc, const std::string& sec, const std::string& key,
               bool required, double fallback = 0.0) {
  auto s = doc.find(sec);
  if (s == doc.end() || !s->second.count(key)) {
    if (required) throw ConfigError("missing [" + sec + "] " + key);
    return fallback;
  }
  const std::string& raw = s->second.at(key);
  try {
    size_t pos = 0;
    double v = std::stod(raw, &pos);
    while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
    if (pos != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for [" + sec + "] " + key + ": " + raw);
  }
}

std::string get_str(const ConfigDoc& doc, const std::string& sec, const std::string& key,
                    const std::string& fallback) {
  auto s = doc.find(sec);
  if (s == doc.end() || !s->second.count(key)) return fallback;
  return s->second.at(key);
}

CavityMode load_mode(const ConfigDoc& doc, const std::string& sec) {
  CavityMode m;
  m.label = sec;
  m.detuning = to_angular(get_num(doc, sec, "detuning_hz", false, 0.0));
  m.kappa = to_angular(get_num(doc, sec, "linewidth_hz", true));
  m.kappa_ext = to_angular(get_num(doc, sec, "external_hz", true));
  bool has_int = doc.count(sec) && doc.at(sec).count("internal_hz");
  m.kappa_int = has_int ? to_angular(get_num(doc, sec, "internal_hz", true))
                        : m.kappa - m.kappa_ext;
  return m;
}

void check_mode(const CavityMode& m) {
  if (m.kappa <= 0.0) throw ValidationError(m.label + ": linewidth must be > 0");
  if (m.kappa_ext < 0.0 || m.kappa_int < 0.0)
    throw ValidationError(m.label + ": coupling rates must be >= 0");
  if (std::abs(m.kappa - m.kappa_ext - m.kappa_int) > 1e-12 * m.kappa)
    throw ValidationError(m.label + ": linewidth must equal external + internal loss");
}

}  // namespace

SystemParams defaults() {
  SystemParams p;
  for (auto* m : {&p.pump, &p.signal, &p.idler}) {
    m->detuning = 0.0;
    m->kappa = to_angular(1e9);
    m->kappa_ext = to_angular(900e6);
    m->kappa_int = m->kappa - m->kappa_ext;
  }
  p.pump.label = "pump";
  p.signal.label = "signal";
  p.idler.label = "idler";
  p.filter.fwhm = to_angular(68e6);
  p.filter.kappa_abs = to_angular(16e9);
  p.filter.on_signal = true;
  p.filter.on_idler = false;
  // Drive sized for |beta| = eps/(kappa_pump/2) = 20.
  p.drive.amplitude = to_angular(10e9);
  p.drive.bandwidth = 0.0;
  p.g = to_angular(2e6);
  p.has_finesse = true;
  p.finesse = 150.0;
  return p;
}

void validate(const SystemParams& p) {
  check_mode(p.pump);
  check_mode(p.signal);
  check_mode(p.idler);
  if (p.filter.fwhm <= 0.0) throw ValidationError("filter: fwhm must be > 0");
  if (p.filter.kappa_abs < 0.0) throw ValidationError("filter: absorption must be >= 0");
  if (p.drive.amplitude < 0.0) throw ValidationError("drive: amplitude must be >= 0");
  if (p.drive.bandwidth < 0.0) throw ValidationError("drive: bandwidth must be >= 0");
  if (p.g <= 0.0) throw ValidationError("coupling g must be > 0");
  if (p.has_finesse) {
    if (p.finesse <= 0.0) throw ValidationError("geometry: finesse must be > 0");
  } else {
    if (p.ring_length <= 0.0 || p.ring_index <= 0.0)
      throw ValidationError("geometry: need finesse, or ring_length_m and ring_index");
  }
}

SystemParams load_config(const std::string& text) {
  ConfigDoc doc = parse_ini(text);
  SystemParams p;
  p.pump = load_mode(doc, "pump");
  p.signal = load_mode(doc, "signal");
  p.idler = load_mode(doc, "idler");

  p.filter.fwhm = to_angular(get_num(doc, "filter", "fwhm_hz", true));
  p.filter.kappa_abs = to_angular(get_num(doc, "filter", "absorption_hz", true));
  std::string applied = get_str(doc, "filter", "applies_to", "signal");
  p.filter.on_signal = applied.find("signal") != std::string::npos;
  p.filter.on_idler = applied.find("idler") != std::string::npos;
  if (!p.filter.on_signal && !p.filter.on_idler)
    throw ConfigError("filter applies_to must name signal and/or idler");

  p.drive.amplitude = to_angular(get_num(doc, "drive", "amplitude_hz", true));
  p.drive.bandwidth = to_angular(get_num(doc, "drive", "bandwidth_hz", false, 0.0));
  p.drive.power = get_num(doc, "drive", "power_w", false, 0.0);
  p.drive.carrier = to_angular(get_num(doc, "drive", "carrier_hz", false, 0.0));

  p.g = to_angular(get_num(doc, "geometry", "g_hz", true));
  bool has_f = doc.count("geometry") && doc.at("geometry").count("finesse");
  bool has_lr = doc.count("geometry") && doc.at("geometry").count("ring_length_m");
  if (has_f == has_lr)
    throw ConfigError("geometry: supply exactly one of finesse or ring_length_m+ring_index");
  p.has_finesse = has_f;
  if (has_f) {
    p.finesse = get_num(doc, "geometry", "finesse", true);
  } else {
    p.ring_length = get_num(doc, "geometry", "ring_length_m", true);
    p.ring_index = get_num(doc, "geometry", "ring_index", true);
  }
  validate(p);
  return p;
}

SystemParams load_config_file(const std::string& path) {
  return load_config(read_file(path));
}

std::string emit_config(const SystemParams& p) {
  std::ostringstream out;
  auto mode = [&](const char* name, const CavityMode& m) {
    out << "[" << name << "]\n";
    out << "detuning_hz = " << format_double(to_hz_exact(m.detuning)) << "\n";
    out << "linewidth_hz = " << format_double(to_hz_exact(m.kappa)) << "\n";
    out << "external_hz = " << format_double(to_hz_exact(m.kappa_ext)) << "\n";
    out << "internal_hz = " << format_double(to_hz_exact(m.kappa_int)) << "\n\n";
  };
  mode("pump", p.pump);
  mode("signal", p.signal);
  mode("idler", p.idler);
  out << "[filter]\n";
  out << "fwhm_hz = " << format_double(to_hz_exact(p.filter.fwhm)) << "\n";
  out << "absorption_hz = " << format_double(to_hz_exact(p.filter.kappa_abs)) << "\n";
  out << "applies_to = " << (p.filter.on_signal && p.filter.on_idler ? "signal,idler"
                             : p.filter.on_signal ? "signal" : "idler") << "\n\n";
  out << "[drive]\n";
  out << "amplitude_hz = " << format_double(to_hz_exact(p.drive.amplitude)) << "\n";
  out << "bandwidth_hz = " << format_double(to_hz_exact(p.drive.bandwidth)) << "\n";
  if (p.drive.power > 0.0) out << "power_w = " << format_double(p.drive.power) << "\n";
  if (p.drive.carrier > 0.0)
    out << "carrier_hz = " << format_double(to_hz_exact(p.drive.carrier)) << "\n";
  out << "\n[geometry]\n";
  out << "g_hz = " << format_double(to_hz_exact(p.g)) << "\n";
  if (p.has_finesse) {
    out << "finesse = " << format_double(p.finesse) << "\n";
  } else {
    out << "ring_length_m = " << format_double(p.ring_length) << "\n";
    out << "ring_index = " << format_double(p.ring_index) << "\n";
  }
  return out.str();
}

DerivedParams derive(const SystemParams& p) {
  validate(p);
  DerivedParams d;
  d.ng = (p.signal.kappa + p.filter.kappa_abs) / p.filter.fwhm;
  if (d.ng < 1.0) {
    d.warnings.push_back("filter wider than total loss: ng < 1, filtering is ineffective");
  }
  d.beta = p.drive.amplitude /
           std::complex<double>(p.pump.kappa / 2.0, p.pump.detuning);

  double tau_rt_finesse = 0.0;
  if (p.has_finesse) tau_rt_finesse = kTwoPi * d.ng / (p.signal.kappa * p.finesse);
  if (p.ring_length > 0.0 && p.ring_index > 0.0)
    d.tau_rt_geom = p.ring_index * p.ring_length / kLightSpeed * d.ng;
  d.tau_rt = p.has_finesse ? tau_rt_finesse : d.tau_rt_geom;
  if (tau_rt_finesse > 0.0 && d.tau_rt_geom > 0.0) {
    double rel = std::abs(tau_rt_finesse - d.tau_rt_geom) /
                 std::max(tau_rt_finesse, d.tau_rt_geom);
    if (rel > 0.05) {
      d.warnings.push_back(
          "round-trip time routes disagree by " + format_double(rel * 100.0) +
          "% (finesse " + format_double(tau_rt_finesse) + " s vs geometry " +
          format_double(d.tau_rt_geom) + " s); finesse route used");
    }
  }

  d.tau_c = d.ng / p.signal.kappa;
  d.narrowed_linewidth = p.signal.kappa / d.ng;
  d.esc_signal = p.signal.kappa_ext / p.signal.kappa;
  d.esc_idler = p.idler.kappa_ext / p.idler.kappa;
  d.esc_pump = p.pump.kappa_ext / p.pump.kappa;

  // Threshold: parametric gain vs loss in the narrowed equation of motion;
  // both carry the same 1/ng, so the margin is against the bare half-width.
  double gain = 2.0 * p.g * std::abs(d.beta);
  d.threshold_margin = gain > 0.0 ? (p.signal.kappa / 2.0) / gain
                                  : std::numeric_limits<double>::infinity();
  d.below_threshold = d.threshold_margin > 1.0;
  if (!d.below_threshold) {
    d.warnings.push_back("pump drive at or above OPO threshold (margin " +
                         format_double(d.threshold_margin) +
                         "); closed forms assume weak pumping");
  }
  return d;
}

}  // namespace spdclab
