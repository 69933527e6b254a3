#include "spdclab/degenerate.hpp"

#include <cmath>

#include "spdclab/lineshape.hpp"

namespace spdclab {

DegenerateRegime make_degenerate(const SystemParams& p, const DerivedParams& d) {
  DegenerateRegime r;
  r.kappa = p.signal.kappa;
  r.kappa_ext = p.signal.kappa_ext;
  r.ng = d.ng;
  r.g = p.g;
  r.beta = d.beta;
  r.delta_a = p.signal.detuning;
  return r;
}

double spectral_density(double w, const DegenerateRegime& r) {
  double a = r.kappa / (2.0 * r.ng);
  double b2 = std::norm(r.beta);
  double d1 = a * a + (w + 2.0 * r.delta_a) * (w + 2.0 * r.delta_a);
  double d2 = a * a + w * w;
  double ng4 = r.ng * r.ng * r.ng * r.ng;
  return r.kappa * r.kappa * 4.0 * r.g * r.g * b2 / (d1 * d2 * ng4);
}

double pair_rate(const DegenerateRegime& r) {
  double a = r.kappa / (2.0 * r.ng);
  double b2 = std::norm(r.beta);
  double ng3 = r.ng * r.ng * r.ng;
  return r.g * r.g * b2 * r.kappa / (ng3 * (r.delta_a * r.delta_a + a * a));
}

double bandwidth(const DegenerateRegime& r) {
  double gn = r.kappa / r.ng;
  return product_lorentzian_fwhm(gn, gn);
}

double coherence_time(const DegenerateRegime& r) { return r.ng / r.kappa; }

double brightness(const DegenerateRegime& r) { return pair_rate(r) / bandwidth(r); }

double g2(double tau, const DegenerateRegime& r) {
  double tc = coherence_time(r);
  double R = pair_rate(r);
  return 1.0 + std::exp(-std::abs(tau) / tc) / (4.0 * R * tc);
}

double G2_unnormalized(double tau, const DegenerateRegime& r) {
  double a = r.kappa / (2.0 * r.ng);
  double b2 = std::norm(r.beta);
  double esc = r.kappa_ext / r.kappa;
  double R = pair_rate(r);
  double ng4 = r.ng * r.ng * r.ng * r.ng;
  double conn = r.g * r.g * b2 * r.kappa_ext * r.kappa_ext *
                std::exp(-2.0 * a * std::abs(tau)) /
                (ng4 * (a * a + r.delta_a * r.delta_a));
  // accidentals floor is the squared photon flux (two photons per pair)
  double flux = 2.0 * esc * R;
  return flux * flux + conn;
}

double heralding(double T, const DegenerateRegime& r) {
  double tc = coherence_time(r);
  return (r.kappa_ext / r.kappa) * (-std::expm1(-T / (2.0 * tc)));
}

}  // namespace spdclab
