#pragma once

#include <complex>
#include <string>

#include "spdclab/params.hpp"

namespace spdclab {

// Singly-filtered non-degenerate regime: signal in the narrowed a-mode,
// idler in the bare b-mode.
struct SinglyFilteredRegime {
  double kappa_a = 0.0, kappa_b = 0.0;          // rad/s
  double kappa_a_ext = 0.0, kappa_b_ext = 0.0;  // rad/s
  double ng = 1.0;
  double g = 0.0;
  std::complex<double> beta;
  double delta_a = 0.0, delta_b = 0.0;  // rad/s; closed forms need delta_a + delta_b = 0
  double tau_rt = 0.0;                  // round-trip time difference, s
  double filter_fwhm = 0.0;             // Delta, rad/s (used by the broadband JSA)
};

enum class G2Branch { LeftTail, Plateau, RightTail };
enum class Conditioning { a_given_b, b_given_a };

SinglyFilteredRegime make_singly_filtered(const SystemParams& p,
                                          const DerivedParams& d);
// Bare comparison point: ng = 1, tau_rt = 0, filter off.
SinglyFilteredRegime make_bare(const SystemParams& p, const DerivedParams& d);

// S_a(w) = kappa_a 4 g^2 |beta|^2 kappa_b |F(w)|^2 /
//          { [(kappa_a/2ng)^2 + w^2] [(kappa_b/2)^2 + (w + delta_a + delta_b)^2] ng^2 }.
double spectral_density(double w, const SinglyFilteredRegime& r);

// Two-term contour form of the integrated rate; removable singularity at
// kappa_b/2 == kappa_a/(2 ng) handled by a series limit.
double pair_rate_exact(const SinglyFilteredRegime& r);
double pair_rate_filtered_approx(const SinglyFilteredRegime& r);  // 16 g^2 b^2/(kappa ng)
double pair_rate_bare(const SinglyFilteredRegime& r);             // 8 g^2 b^2/kappa

double bandwidth(const SinglyFilteredRegime& r);  // product FWHM of kappa_a/ng and kappa_b
double brightness(const SinglyFilteredRegime& r);
double coherence_time(const SinglyFilteredRegime& r);  // ng/kappa_a

G2Branch g2_branch(double tau, const SinglyFilteredRegime& r);
const char* branch_name(G2Branch b);

// Normalized conditioned correlation, piecewise in tau (breaks at +-tau_rt/2).
// a_given_b detects the idler first; b_given_a is the time reverse.
// Requires kappa_a == kappa_b and delta_a + delta_b == 0.
double g2_conditioned(double tau, const SinglyFilteredRegime& r, Conditioning c);

// Box-window heralding in the F, ng >> 1 regime; two branches meeting at
// T = tau_rt with an O((kappa tau_rt/ng)^2) mismatch.
double heralding_window(double T, const SinglyFilteredRegime& r);

}  // namespace spdclab
