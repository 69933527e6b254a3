#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "spdclab/degenerate.hpp"
#include "spdclab/jsa.hpp"
#include "spdclab/nondegenerate.hpp"

namespace spdclab {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_floor = 0.0;
  int max_depth = 15;
  double scale = 0.0;  // rad/s; node-density scale, 0 = pick per integrand
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Whole-line integral via w = scale*tan(theta) and adaptive Gauss-Kronrod.
QuadResult quad_line(const std::function<double(double)>& f,
                     const QuadratureSpec& spec);

// |(1/2pi) \int F(w) e^{-i w tau} / ((kappa_a/2ng - i w)(kappa_b/2 + i w)) dw|^2
// evaluated by quadrature (not FFT) at each tau.
double fourier_g2_sample(double tau, const SinglyFilteredRegime& r,
                         const QuadratureSpec& spec);

// Quadrature versions of the closed-form rates.
double pair_rate_by_quadrature(const DegenerateRegime& r, const QuadratureSpec& spec);
double pair_rate_by_quadrature(const SinglyFilteredRegime& r, const QuadratureSpec& spec);

// Schmidt purity through the singular values: sum s^4 / (sum s^2)^2.
double svd_purity(const JsaMatrix& m);

// Exact un-projected single-mode filter model. The frequency-domain equation
// keeps the full memory kernel:
//   [ -i(w - delta_a) + (kappa_a + kappa_abs)/2
//     - (kappa_abs/2) Delta/(Delta - 2 i w) ] a(w)
//       = -2 i g beta a^dag(-w - 2 delta_a) + sqrt(kappa_a) a_in(w),
// coupled to its conjugate partner; solved as a 2x2 system per frequency.
struct ExactFilterModel {
  double kappa_a = 0.0, kappa_abs = 0.0, delta_cap = 0.0;  // delta_cap = Delta
  double delta_a = 0.0, g = 0.0;
  std::complex<double> beta;
};

struct TransferCoefficients {
  std::complex<double> direct;    // a_in -> a
  std::complex<double> downconv;  // a_in^dag -> a
};

TransferCoefficients exact_unprojected_spectrum(double w, const ExactFilterModel& m);
TransferCoefficients projected_spectrum(double w, const ExactFilterModel& m);

// Max relative deviation of the down-conversion transfer over |w| <= half_band.
double projection_deviation(const ExactFilterModel& m, double half_band, int samples);

struct PostFilterResult {
  double purity = 0.0;
  double heralding = 0.0;
};

// Post-cavity comparator: Lorentzian amplitude filter on the bare-cavity
// JSA signal axis; heralding carries the filter transmission loss.
PostFilterResult post_cavity_filter_compare(double filter_bw,
                                            const SinglyFilteredRegime& bare,
                                            const PumpSpectrum& pump,
                                            const GridSpec* grid_override = nullptr);

struct CheckResult {
  std::string name;
  double expected = 0.0, obtained = 0.0, tolerance = 0.0;
  bool pass = false;
};

// The full oracle suite behind `spdc-lab validate`.
std::vector<CheckResult> run_validation(const SystemParams& p,
                                        const std::map<std::string, double>& tol_overrides = {});

}  // namespace spdclab
