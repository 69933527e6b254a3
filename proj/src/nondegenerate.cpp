#include "spdclab/nondegenerate.hpp"

#include <cmath>
#include <stdexcept>

#include "spdclab/lineshape.hpp"

namespace spdclab {

namespace {

// ((1 - e^{-2z})/(2z))^2 with the z -> 0 limit of 1; all exponents <= 0.
double tail_factor(double z) {
  if (z == 0.0) return 1.0;
  double t = -std::expm1(-2.0 * z) / (2.0 * z);
  return t * t;
}

void require_symmetric(const SinglyFilteredRegime& r) {
  if (std::abs(r.kappa_a - r.kappa_b) > 1e-9 * r.kappa_a)
    throw ValidationError("normalized closed forms require kappa_a == kappa_b");
  if (std::abs(r.delta_a + r.delta_b) > 1e-9 * r.kappa_a)
    throw ValidationError("normalized closed forms require delta_a + delta_b == 0");
}

}  // namespace

SinglyFilteredRegime make_singly_filtered(const SystemParams& p,
                                          const DerivedParams& d) {
  SinglyFilteredRegime r;
  r.kappa_a = p.signal.kappa;
  r.kappa_b = p.idler.kappa;
  r.kappa_a_ext = p.signal.kappa_ext;
  r.kappa_b_ext = p.idler.kappa_ext;
  r.ng = d.ng;
  r.g = p.g;
  r.beta = d.beta;
  r.delta_a = p.signal.detuning;
  r.delta_b = p.idler.detuning;
  r.tau_rt = d.tau_rt;
  r.filter_fwhm = p.filter.fwhm;
  return r;
}

SinglyFilteredRegime make_bare(const SystemParams& p, const DerivedParams& d) {
  SinglyFilteredRegime r = make_singly_filtered(p, d);
  r.ng = 1.0;
  r.tau_rt = 0.0;
  r.filter_fwhm = 0.0;
  return r;
}

double spectral_density(double w, const SinglyFilteredRegime& r) {
  double a = r.kappa_a / (2.0 * r.ng);
  double b = r.kappa_b / 2.0;
  double f = phase_matching(w, PhaseMatch{r.tau_rt});
  double b2 = std::norm(r.beta);
  double d1 = a * a + w * w;
  double wd = w + r.delta_a + r.delta_b;
  double d2 = b * b + wd * wd;
  return r.kappa_a * 4.0 * r.g * r.g * b2 * r.kappa_b * f * f /
         (d1 * d2 * r.ng * r.ng);
}

double pair_rate_exact(const SinglyFilteredRegime& r) {
  if (r.tau_rt <= 0.0) return pair_rate_bare(r);
  double a = r.kappa_a / (2.0 * r.ng);
  double b = r.kappa_b / 2.0;
  double b2 = std::norm(r.beta);
  double pre = 4.0 * r.g * r.g * b2 * r.kappa_a * r.kappa_b;
  double trt = r.tau_rt;

  double term1 = pre / (trt * (r.kappa_a / 2.0) * (r.kappa_a / 2.0) *
                        (r.kappa_b / 2.0) * (r.kappa_b / 2.0));

  auto phi = [&](double x) { return -std::expm1(-x * trt) / (x * x * x); };
  double diff;
  if (std::abs(b - a) < 1e-6 * b) {
    // removable singularity: [phi(b) - phi(a)]/(b^2 - a^2) -> phi'(b)/(2b)
    double dphi = trt * std::exp(-b * trt) / (b * b * b) + 3.0 * std::expm1(-b * trt) / (b * b * b * b);
    diff = dphi / (2.0 * b);
  } else {
    diff = (phi(b) - phi(a)) / (b * b - a * a);
  }
  double term2 = pre / (trt * trt * r.ng * r.ng) * diff;
  return term1 + term2;
}

double pair_rate_filtered_approx(const SinglyFilteredRegime& r) {
  return 16.0 * r.g * r.g * std::norm(r.beta) / (r.kappa_a * r.ng);
}

double pair_rate_bare(const SinglyFilteredRegime& r) {
  return 8.0 * r.g * r.g * std::norm(r.beta) / (r.kappa_a);
}

double bandwidth(const SinglyFilteredRegime& r) {
  return product_lorentzian_fwhm(r.kappa_a / r.ng, r.kappa_b);
}

double brightness(const SinglyFilteredRegime& r) {
  return pair_rate_exact(r) / bandwidth(r);
}

double coherence_time(const SinglyFilteredRegime& r) { return r.ng / r.kappa_a; }

G2Branch g2_branch(double tau, const SinglyFilteredRegime& r) {
  if (tau < -r.tau_rt / 2.0) return G2Branch::LeftTail;
  if (tau > r.tau_rt / 2.0) return G2Branch::RightTail;
  return G2Branch::Plateau;
}

const char* branch_name(G2Branch b) {
  switch (b) {
    case G2Branch::LeftTail: return "left_tail";
    case G2Branch::Plateau: return "plateau";
    default: return "right_tail";
  }
}

double g2_conditioned(double tau, const SinglyFilteredRegime& r, Conditioning c) {
  if (c == Conditioning::b_given_a)
    return g2_conditioned(-tau, r, Conditioning::a_given_b);
  require_symmetric(r);
  double k = r.kappa_a;
  double c0 = k * k / (16.0 * r.g * r.g * std::norm(r.beta));
  double trt = r.tau_rt;
  double x = k * trt / (4.0 * r.ng);
  double y = k * trt / 4.0;
  switch (g2_branch(tau, r)) {
    case G2Branch::LeftTail:
      return 1.0 + c0 * std::exp(k * (tau + trt / 2.0)) * tail_factor(y);
    case G2Branch::RightTail:
      return 1.0 + c0 * std::exp(-(k / r.ng) * (tau - trt / 2.0)) * tail_factor(x);
    case G2Branch::Plateau: {
      if (trt == 0.0) return 1.0 + c0;  // bare limit, tau = 0 only
      // (4/(k trt)^2) [e^{(k/2)(tau-trt/2)} + ng e^{-(k/2ng)(tau+trt/2)} - 1 - ng]^2
      double bracket = std::expm1((k / 2.0) * (tau - trt / 2.0)) +
                       r.ng * std::expm1(-(k / (2.0 * r.ng)) * (tau + trt / 2.0));
      return 1.0 + c0 * 4.0 * bracket * bracket / (k * k * trt * trt);
    }
  }
  return 1.0;  // unreachable
}

double heralding_window(double T, const SinglyFilteredRegime& r) {
  if (T < 0.0) throw std::invalid_argument("window must be >= 0");
  double esc = r.kappa_a_ext / r.kappa_a;
  double k = r.kappa_a;
  double trt = r.tau_rt;
  if (T < trt) {
    return esc * (k / r.ng) * T * (T * T + 3.0 * trt * trt) / (12.0 * trt * trt);
  }
  return esc * (-std::expm1(-k * T / (2.0 * r.ng))) - esc * k * trt / (6.0 * r.ng);
}

}  // namespace spdclab
