#include "spdclab/jsa.hpp"

#include <cmath>
#include <numbers>

#include "spdclab/lineshape.hpp"

namespace spdclab {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::vector<double> linspace(double center, double extent, int n) {
  std::vector<double> v(n);
  double lo = center - extent;
  double step = n > 1 ? 2.0 * extent / (n - 1) : 0.0;
  for (int i = 0; i < n; ++i) v[i] = lo + step * i;
  return v;
}

}  // namespace

std::vector<double> JsaMatrix::signal_axis() const {
  return linspace(grid.signal_center, grid.signal_extent, grid.n_signal);
}

std::vector<double> JsaMatrix::idler_axis() const {
  return linspace(grid.idler_center, grid.idler_extent, grid.n_idler);
}

GridSpec default_grid(const SinglyFilteredRegime& r, const PumpSpectrum& pump) {
  GridSpec spec;
  spec.n_signal = spec.n_idler = 512;
  spec.signal_extent = 8.0 * r.kappa_a / (2.0 * r.ng);
  spec.idler_extent = 4.0 * std::max(r.kappa_b / 2.0, pump.sigma);
  return spec;
}

std::complex<double> pump_amplitude(double w, const PumpSpectrum& pump) {
  if (pump.sigma <= 0.0)
    throw std::invalid_argument("CW pump (sigma = 0) cannot be gridded");
  return pump.beta_peak * std::exp(-w * w / (2.0 * pump.sigma * pump.sigma));
}

std::complex<double> jsa_value(double w, double wp, const SinglyFilteredRegime& r,
                               const PumpSpectrum& pump) {
  double a = r.kappa_a / (2.0 * r.ng);
  double b = r.kappa_b / 2.0;
  // (kappa_a + kappa_abs)/2 == ng*Delta/2 for the ng implied by the filter.
  double half_loss = r.ng * r.filter_fwhm / 2.0;
  std::complex<double> num = 2.0 * kI * r.g * std::sqrt(r.kappa_b);
  if (r.filter_fwhm > 0.0)
    num *= (kI * w - r.filter_fwhm) / half_loss;
  num *= phase_matching(w, PhaseMatch{r.tau_rt});
  num *= pump_amplitude(w - wp, pump);
  std::complex<double> den = std::complex<double>(a, -w) *
                             std::complex<double>(b, -(wp + r.delta_a + r.delta_b));
  return num / den;
}

JsaMatrix build_grid(const SinglyFilteredRegime& r, const PumpSpectrum& pump,
                     const GridSpec& spec) {
  if (spec.n_signal < 16 || spec.n_idler < 16)
    throw std::invalid_argument("grid counts must be >= 16");
  if (spec.signal_extent <= 0.0 || spec.idler_extent <= 0.0)
    throw std::invalid_argument("grid extents must be > 0");
  JsaMatrix m;
  m.grid = spec;
  m.regime = r;
  m.pump = pump;

  double narrowed_half = r.kappa_a / (2.0 * r.ng);
  if (spec.signal_extent < 6.0 * narrowed_half)
    m.warnings.push_back("signal extent covers < 6 narrowed half-widths");
  if (spec.idler_extent < 3.0 * std::max(r.kappa_b / 2.0, pump.sigma))
    m.warnings.push_back("idler extent covers < 3 max(kappa_b/2, sigma_p) half-widths");
  double spacing = 2.0 * spec.signal_extent / (spec.n_signal - 1);
  if (2.0 * narrowed_half / spacing < 8.0)
    m.warnings.push_back("narrowed line sampled by < 8 points along the signal axis");

  auto ws = m.signal_axis();
  auto wi = m.idler_axis();
  m.V.resize(spec.n_signal, spec.n_idler);
  for (int i = 0; i < spec.n_signal; ++i)
    for (int j = 0; j < spec.n_idler; ++j)
      m.V(i, j) = jsa_value(ws[i], wi[j], r, pump);
  if (m.V.cwiseAbs().maxCoeff() == 0.0)
    throw std::invalid_argument("JSA matrix is identically zero");
  return m;
}

double purity(const JsaMatrix& m) {
  Eigen::MatrixXcd M = m.V.adjoint() * m.V;  // Hermitian, positive semidefinite
  double tr = M.trace().real();
  if (tr <= 0.0) throw std::invalid_argument("zero JSA matrix");
  double tr2 = M.squaredNorm();  // sum |M_ij|^2 == Tr(M^2) for Hermitian M
  return tr2 / (tr * tr);
}

double g2_herald(const JsaMatrix& m) { return 1.0 + purity(m); }

std::complex<double> reflection_phase(double w, double half_width) {
  return std::complex<double>(half_width, w) / std::complex<double>(half_width, -w);
}

std::complex<double> filter_transmission(double w, double fwhm) {
  double hw = fwhm / 2.0;
  return hw / std::complex<double>(hw, -w);
}

HeraldingResult heralding_broadband(const JsaMatrix& m) {
  const SinglyFilteredRegime& r = m.regime;
  double a = r.kappa_a / (2.0 * r.ng);
  double b = r.kappa_b / 2.0;
  int ns = m.grid.n_signal, ni = m.grid.n_idler;
  auto ws = m.signal_axis();
  auto wi = m.idler_axis();

  // Physical-variable pair amplitude on the flipped idler axis: nu = -w'.
  // Psi(w, nu) = v(w, -nu) * (b + i nu)/(b - i nu); the unit-modulus factor
  // moves the idler pole to the causal side (see header note).
  Eigen::MatrixXcd psi(ns, ni);
  std::vector<double> nu(ni);
  for (int j = 0; j < ni; ++j) {
    nu[j] = -wi[ni - 1 - j];
    for (int i = 0; i < ns; ++i)
      psi(i, j) = m.V(i, ni - 1 - j) * reflection_phase(nu[j], b);
  }

  // Relative-time grid: dense at the fast idler scale 1/b, geometric out to
  // the slow signal storage scale 1/a.
  std::vector<double> taus;
  double fine_step = 0.15 / b, fine_span = 6.0 / b;
  for (double t = -fine_span; t <= fine_span + fine_step / 2; t += fine_step)
    taus.push_back(t);
  for (double t = fine_span * 1.2; t < 14.0 / a; t *= 1.2) {
    taus.push_back(t);
    taus.push_back(-t);
  }
  std::sort(taus.begin(), taus.end());
  int nt = static_cast<int>(taus.size());

  // Mean-time grid spanning the pump envelope.
  double sigma = m.pump.sigma;
  double t_env = std::max(sigma > 0.0 ? 3.0 / sigma : 0.0, 8.0 / b);
  int nk = 192;
  std::vector<double> tbar(nk);
  for (int k = 0; k < nk; ++k) tbar[k] = -t_env + 2.0 * t_env * k / (nk - 1);

  // psi(t_s = tbar+tau, t_i = tbar) via two dense transforms.
  Eigen::MatrixXcd Ei(ni, nk);
  for (int j = 0; j < ni; ++j)
    for (int k = 0; k < nk; ++k)
      Ei(j, k) = std::exp(std::complex<double>(0.0, -nu[j] * tbar[k]));
  Eigen::MatrixXcd G = psi * Ei;  // ns x nk
  for (int i = 0; i < ns; ++i)
    for (int k = 0; k < nk; ++k)
      G(i, k) *= std::exp(std::complex<double>(0.0, -ws[i] * tbar[k]));
  Eigen::MatrixXcd Pt(nt, ns);
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < ns; ++i)
      Pt(t, i) = std::exp(std::complex<double>(0.0, -ws[i] * taus[t]));
  Eigen::MatrixXcd field = Pt * G;  // nt x nk

  double late = 0.0, early = 0.0;
  for (int t = 0; t < nt; ++t) {
    double wt = (taus[std::min(t + 1, nt - 1)] - taus[std::max(t - 1, 0)]) / 2.0;
    double row = 0.0;
    for (int k = 0; k < nk; ++k) row += std::norm(field(t, k));
    row *= wt;
    if (taus[t] > 0.0)
      late += row;
    else if (taus[t] < 0.0)
      early += row;
    else {
      late += row / 2.0;
      early += row / 2.0;
    }
  }
  double total = late + early;
  HeraldingResult res;
  if (total <= 0.0) throw std::invalid_argument("zero pair amplitude");
  res.w_late = late / total;
  res.w_early = early / total;
  res.eta = (r.kappa_a_ext / r.kappa_a) * res.w_late +
            (r.kappa_b_ext / r.kappa_b) * res.w_early;
  return res;
}

JsiExport export_jsi(const JsaMatrix& m) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  int ns = m.grid.n_signal, ni = m.grid.n_idler;
  JsiExport out;
  out.intensity.resize(ns, ni);
  // change of variable w' -> -w': flip the idler axis
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ni; ++j)
      out.intensity(i, j) = std::norm(m.V(i, ni - 1 - j));
  double peak = out.intensity.maxCoeff();
  if (peak <= 0.0) throw std::invalid_argument("zero JSA matrix");
  out.intensity /= peak;
  auto ws = m.signal_axis();
  auto wi = m.idler_axis();
  out.signal_hz.resize(ns);
  out.idler_hz.resize(ni);
  for (int i = 0; i < ns; ++i) out.signal_hz[i] = ws[i] / kTwoPi;
  for (int j = 0; j < ni; ++j) out.idler_hz[j] = -wi[ni - 1 - j] / kTwoPi;
  return out;
}

}  // namespace spdclab
