#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "spdclab/nondegenerate.hpp"

namespace spdclab {

struct GridSpec {
  int n_signal = 512, n_idler = 512;
  double signal_extent = 0.0;  // half-width, rad/s
  double idler_extent = 0.0;
  double signal_center = 0.0;
  double idler_center = 0.0;
};

struct PumpSpectrum {
  std::complex<double> beta_peak;  // CW beta anchors the peak amplitude
  double sigma = 0.0;              // rad/s; must be > 0 to grid
};

struct JsaMatrix {
  Eigen::MatrixXcd V;  // n_signal x n_idler
  GridSpec grid;
  SinglyFilteredRegime regime;
  PumpSpectrum pump;
  std::vector<std::string> warnings;

  std::vector<double> signal_axis() const;  // rad/s
  std::vector<double> idler_axis() const;
};

// Default discretization: 512^2, signal extent +-8 (kappa_a/2ng),
// idler extent +-4 max(kappa_b/2, sigma_p).
GridSpec default_grid(const SinglyFilteredRegime& r, const PumpSpectrum& pump);

std::complex<double> pump_amplitude(double w, const PumpSpectrum& pump);

// v(w, w') = 2 i g sqrt(kappa_b) (i w - Delta)/((kappa_a + kappa_abs)/2)
//            * F(w) beta(w - w') / [(kappa_a/2ng - i w)(kappa_b/2 - i(w' + da + db))]
// with (kappa_a + kappa_abs)/2 written as ng*Delta/2.
std::complex<double> jsa_value(double w, double wp, const SinglyFilteredRegime& r,
                               const PumpSpectrum& pump);

JsaMatrix build_grid(const SinglyFilteredRegime& r, const PumpSpectrum& pump,
                     const GridSpec& spec);

// Schmidt purity via the trace formula Tr((V^dag V)^2) / [Tr(V^dag V)]^2.
double purity(const JsaMatrix& m);
double g2_herald(const JsaMatrix& m);  // 1 + purity

// Unit-modulus cavity reflection phase (hw + i w)/(hw - i w).
std::complex<double> reflection_phase(double w, double half_width);

struct HeraldingResult {
  double eta = 0.0;
  double w_late = 0.0;   // weight of signal-after-idler arrivals
  double w_early = 0.0;  // signal-before-idler
};

// Broadband heralding efficiency. The output-port pair amplitude (the
// reflection phase above cancels a conjugated signal pole when the
// input-output contraction is carried through) is
//   Psi(w, nu) ~ sinc(w tau_rt/2)(i w - Delta) beta(w + nu)
//                / [(kappa_a/2ng - i w)(kappa_b/2 - i nu)]
// in the physical idler variable nu = -w'. eta splits the arrival-time mass:
//   eta = (kappa_a_ext/kappa_a) W_late + (kappa_b_ext/kappa_b) W_early,
// with W_late + W_early = 1, so equal escape efficiencies give eta exactly
// at the escape value, flat in pump bandwidth.
HeraldingResult heralding_broadband(const JsaMatrix& m);

// Lorentzian amplitude transmission of full width fwhm, peak 1 at center.
std::complex<double> filter_transmission(double w, double fwhm);

struct JsiExport {
  Eigen::MatrixXd intensity;       // normalized to peak 1
  std::vector<double> signal_hz;   // row axis
  std::vector<double> idler_hz;    // column axis, sign-flipped on export
};

JsiExport export_jsi(const JsaMatrix& m);

}  // namespace spdclab
