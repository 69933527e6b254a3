#pragma once

#include <complex>

#include "spdclab/params.hpp"

namespace spdclab {

// Doubly-filtered degenerate regime: both photons of the pair live in the
// narrowed signal mode. ng = 1 recovers the bare cavity.
struct DegenerateRegime {
  double kappa = 0.0;      // total signal linewidth, rad/s
  double kappa_ext = 0.0;  // external coupling, rad/s
  double ng = 1.0;
  double g = 0.0;
  std::complex<double> beta;
  double delta_a = 0.0;    // signal detuning, rad/s
};

DegenerateRegime make_degenerate(const SystemParams& p, const DerivedParams& d);

// Intrinsic spectral density of the narrowed mode,
//   S(w) = kappa^2 4 g^2 |beta|^2 /
//          { [(kappa/2ng)^2 + (w + 2 delta_a)^2] [(kappa/2ng)^2 + w^2] ng^4 }.
// The output density is (kappa_ext/kappa) * S. The 1/ng^4 prefactor is the one
// consistent with the integrated rate below (checked by quadrature in tests).
double spectral_density(double w, const DegenerateRegime& r);

// R = g^2 |beta|^2 kappa / { ng^3 [delta_a^2 + (kappa/2ng)^2] };
// at delta_a = 0 this is 4 g^2 |beta|^2 / (ng kappa).
double pair_rate(const DegenerateRegime& r);

double bandwidth(const DegenerateRegime& r);       // 0.6436 * kappa/ng at delta_a = 0
double coherence_time(const DegenerateRegime& r);  // tau_c = ng/kappa
double brightness(const DegenerateRegime& r);      // R / bandwidth

// Normalized g2 at zero detuning: 1 + (1/(4 R tau_c)) exp(-|tau|/tau_c).
double g2(double tau, const DegenerateRegime& r);

// Unnormalized G2 at the output port, valid for any delta_a:
//   (2 esc R)^2 + g^2 |beta|^2 kappa_ext^2 e^{-(kappa/ng)|tau|} /
//                 { ng^4 [(kappa/2ng)^2 + delta_a^2] },
// the floor being the squared output photon flux (two photons per pair).
double G2_unnormalized(double tau, const DegenerateRegime& r);

// Box-window heralding: (kappa_ext/kappa) (1 - e^{-T/(2 tau_c)}).
double heralding(double T, const DegenerateRegime& r);

}  // namespace spdclab
