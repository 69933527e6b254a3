#include "spdclab/lineshape.hpp"

#include <cmath>

namespace spdclab {

std::complex<double> lorentzian(double w, const LorentzianResponse& r) {
  return 1.0 / std::complex<double>(r.half_width, -(w - r.center_detuning));
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sinhc(double x) {
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
  }
  return std::sinh(x) / x;
}

double phase_matching(double w, const PhaseMatch& pm) {
  if (pm.tau_rt == 0.0) return 1.0;
  return sinc(w * pm.tau_rt / 2.0);
}

double product_lorentzian_fwhm(double g1, double g2) {
  if (g1 <= 0.0 || g2 <= 0.0) throw std::invalid_argument("widths must be > 0");
  // dw^2 = (sqrt(g1^4 + 6 g1^2 g2^2 + g2^4) - (g1^2 + g2^2))/2; the conjugate
  // form below is the same quantity without the catastrophic subtraction.
  double a = g1 * g1, b = g2 * g2;
  double root = std::sqrt(a * a + 6.0 * a * b + b * b);
  return std::sqrt(2.0 * a * b / (root + a + b));
}

double numeric_fwhm(const std::function<double(double)>& f, double peak_guess,
                    double bracket) {
  if (bracket <= 0.0) throw std::invalid_argument("bracket must be > 0");
  double half = f(peak_guess) / 2.0;
  auto crossing = [&](double dir) {
    double lo = 0.0, hi = bracket;
    if (f(peak_guess + dir * hi) > half)
      throw std::runtime_error("numeric_fwhm: bracket does not straddle half max");
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (f(peak_guess + dir * mid) > half ? lo : hi) = mid;
      if (hi - lo < 1e-6 * bracket / 2.0) break;
    }
    return 0.5 * (lo + hi);
  };
  return crossing(+1.0) + crossing(-1.0);
}

}  // namespace spdclab
