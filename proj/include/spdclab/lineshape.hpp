#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace spdclab {

struct LorentzianResponse {
  double half_width = 0.0;       // rad/s, e.g. kappa/2 or kappa/(2 ng)
  double center_detuning = 0.0;  // rad/s
};

struct PhaseMatch {
  double tau_rt = 0.0;  // seconds; 0 disables phase mismatch entirely
};

// 1/(half_width - i(w - center)). Peak value 2/Gamma on resonance.
std::complex<double> lorentzian(double w, const LorentzianResponse& r);

// sinc(w*tau_rt/2) with sinc(x) = sin(x)/x, series-expanded near 0.
double phase_matching(double w, const PhaseMatch& pm);

double sinc(double x);
double sinhc(double x);  // sinh(x)/x == sinc(ix) restricted to the real axis

// FWHM of |L1|^2 |L2|^2 for Lorentzians of full widths G1, G2:
//   dw^2 = (sqrt(G1^4 + 6 G1^2 G2^2 + G2^4) - (G1^2 + G2^2)) / 2.
// Evaluated through the conjugate form 2 G1^2 G2^2 / (sqrt(...) + G1^2 + G2^2),
// which stays accurate for G1 << G2 (the direct difference loses everything
// at ng ~ 250).
double product_lorentzian_fwhm(double g1, double g2);

// Bisection FWHM of an even-peaked function: finds the half-max crossing on
// each side of peak_guess within [peak_guess - bracket, peak_guess + bracket].
double numeric_fwhm(const std::function<double(double)>& f, double peak_guess,
                    double bracket);

}  // namespace spdclab
