// Acceptance gate: one pass/fail line per criterion. Exit code 0 only when
// every criterion holds.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "spdclab/degenerate.hpp"
#include "spdclab/jsa.hpp"
#include "spdclab/nondegenerate.hpp"
#include "spdclab/oracle.hpp"
#include "spdclab/params.hpp"

using namespace spdclab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int failures = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              title, detail.c_str());
  if (!pass) ++failures;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

SinglyFilteredRegime synthetic(double ng, double finesse) {
  SinglyFilteredRegime r = make_singly_filtered(defaults(), derive(defaults()));
  r.ng = ng;
  r.tau_rt = kTwoPi * ng / (r.kappa_a * finesse);
  return r;
}

JsaMatrix grid_at(double sigma, int n, double extent_scale = 1.0) {
  SinglyFilteredRegime r = make_singly_filtered(defaults(), derive(defaults()));
  PumpSpectrum pump{derive(defaults()).beta, sigma};
  GridSpec spec = default_grid(r, pump);
  spec.n_signal = spec.n_idler = n;
  spec.signal_extent *= extent_scale;
  spec.idler_extent *= extent_scale;
  return build_grid(r, pump, spec);
}

void criterion_1() {
  DerivedParams d = derive(defaults());
  bool pass = rel(d.ng, 250.0) < 1e-12 && rel(std::abs(d.beta), 20.0) < 1e-12;
  report(1, "parameter derivation: ng = 250, |beta| = 20", pass,
         "ng = " + fmt(d.ng) + ", |beta| = " + fmt(std::abs(d.beta)));
}

void criterion_2() {
  DegenerateRegime base = make_degenerate(defaults(), derive(defaults()));
  bool pass = true;
  double worst = 0.0;
  for (double ng : {1.0, 10.0, 250.0}) {
    DegenerateRegime filt = base;
    filt.ng = ng;
    DegenerateRegime sub;  // bare formulas under kappa -> kappa/ng, g -> g/ng
    sub.kappa = base.kappa / ng;
    sub.kappa_ext = 0.9 * sub.kappa;  // escape efficiency unchanged
    sub.ng = 1.0;
    sub.g = base.g / ng;
    sub.beta = base.beta;
    double tau = 0.4 * coherence_time(filt);
    for (double d : {rel(bandwidth(filt), bandwidth(sub)),
                     rel(pair_rate(filt), pair_rate(sub)),
                     rel(coherence_time(filt), coherence_time(sub)),
                     rel(g2(tau, filt), g2(tau, sub)),
                     rel(heralding(3.0 * coherence_time(filt), filt),
                         heralding(3.0 * coherence_time(sub), sub)),
                     rel(brightness(filt), brightness(base))}) {
      worst = std::max(worst, d);
      pass = pass && d < 1e-12;
    }
  }
  report(2, "width-substitution scaling law, brightness invariant", pass,
         "worst deviation " + fmt(worst));
}

void criterion_3() {
  QuadratureSpec spec;
  bool pass = true;
  double worst = 0.0;
  auto probe = [&](const SystemParams& p, double delta_a) {
    DerivedParams d = derive(p);
    if (!d.below_threshold) return;
    DegenerateRegime dr = make_degenerate(p, d);
    dr.delta_a = delta_a;
    double e1 = rel(pair_rate_by_quadrature(dr, spec), pair_rate(dr));
    SinglyFilteredRegime sf = make_singly_filtered(p, d);
    double e2 = rel(pair_rate_by_quadrature(sf, spec), pair_rate_exact(sf));
    worst = std::max(worst, std::max(e1, e2));
    pass = pass && e1 < 1e-6 && e2 < 1e-6;
  };
  probe(defaults(), 0.0);
  unsigned state = 12345u;
  auto uni = [&]() {
    state = 1664525u * state + 1013904223u;
    return state / 4294967296.0;
  };
  for (int i = 0; i < 10; ++i) {
    SystemParams p = defaults();
    p.signal.kappa = kTwoPi * std::pow(10.0, 8.5 + uni());
    p.signal.kappa_ext = 0.9 * p.signal.kappa;
    p.signal.kappa_int = p.signal.kappa - p.signal.kappa_ext;
    p.idler = p.signal;
    p.idler.label = "idler";
    p.filter.kappa_abs = (8.0 + 24.0 * uni()) * p.signal.kappa;
    p.filter.fwhm = p.signal.kappa / (10.0 + 40.0 * uni());
    p.g = kTwoPi * (0.5e6 + 1.5e6 * uni());
    p.finesse = 50.0 + 450.0 * uni();
    probe(p, (uni() - 0.5) * p.signal.kappa / derive(p).ng);
  }
  report(3, "closed-form rates match quadrature (1e-6)", pass,
         "worst relative error " + fmt(worst));
}

void criterion_4() {
  SinglyFilteredRegime hi_ng = synthetic(1000.0, 100.0);
  SinglyFilteredRegime hi_f = synthetic(100.0, 1000.0);
  double e1 = rel(pair_rate_exact(hi_ng), pair_rate_filtered_approx(hi_ng));
  double e2 = rel(pair_rate_exact(hi_f), pair_rate_filtered_approx(hi_f));
  report(4, "rate limits converge to 16 g^2 b^2/(kappa ng) within 2%",
         e1 < 0.02 && e2 < 0.02,
         "ng/F = 10: " + fmt(e1) + ", F/ng = 10: " + fmt(e2));
}

void criterion_5() {
  bool pass = true;
  double worst_edge = 0.0;
  for (double ng : {10.0, 100.0, 250.0}) {
    for (double fin : {50.0, 150.0, 500.0}) {
      SinglyFilteredRegime s = synthetic(ng, fin);
      double eps = 1e-12 * s.tau_rt;
      for (double sign : {+1.0, -1.0}) {
        double edge = sign * s.tau_rt / 2.0;
        double in = g2_conditioned(edge - sign * eps, s, Conditioning::a_given_b);
        double out = g2_conditioned(edge + sign * eps, s, Conditioning::a_given_b);
        double d = rel(in, out);
        worst_edge = std::max(worst_edge, d);
        pass = pass && d < 1e-9;
      }
    }
  }
  // plateau values against the Fourier oracle
  SinglyFilteredRegime sf = make_singly_filtered(defaults(), derive(defaults()));
  QuadratureSpec spec;
  double a = sf.kappa_a / (2.0 * sf.ng), b = sf.kappa_b / 2.0;
  double c0 = sf.kappa_a * sf.kappa_a / (16.0 * sf.g * sf.g * std::norm(sf.beta));
  double worst_plateau = 0.0;
  for (double tau : {0.0, sf.tau_rt / 4.0, -sf.tau_rt / 4.0, 0.45 * sf.tau_rt}) {
    double lhs = g2_conditioned(tau, sf, Conditioning::a_given_b) - 1.0;
    double rhs = c0 * (a + b) * (a + b) * fourier_g2_sample(tau, sf, spec);
    worst_plateau = std::max(worst_plateau, rel(lhs, rhs));
  }
  pass = pass && worst_plateau < 1e-4;
  report(5, "piecewise g2 continuous at both breakpoints; plateau vs oracle",
         pass, "worst edge " + fmt(worst_edge) + ", worst plateau " +
                   fmt(worst_plateau));
}

void criterion_6() {
  SinglyFilteredRegime r = make_singly_filtered(defaults(), derive(defaults()));
  auto decay = [&](double t0, double t1) {
    double v0 = g2_conditioned(t0, r, Conditioning::a_given_b) - 1.0;
    double v1 = g2_conditioned(t1, r, Conditioning::a_given_b) - 1.0;
    return std::log(v0 / v1) / (t1 - t0);
  };
  double right = decay(r.tau_rt, r.tau_rt + 3.5 * r.ng / r.kappa_a);
  double left =
      -decay(-r.tau_rt / 2.0 - 3.5 / r.kappa_a, -r.tau_rt / 2.0 - 1e-3 / r.kappa_a);
  double ratio_err = rel(left / right, r.ng);
  bool reversal = true;
  for (double tau : {-r.tau_rt, -0.3 * r.tau_rt, 0.0, 0.2 * r.tau_rt,
                     2.0 * r.ng / r.kappa_a}) {
    reversal = reversal && g2_conditioned(tau, r, Conditioning::b_given_a) ==
                               g2_conditioned(-tau, r, Conditioning::a_given_b);
  }
  report(6, "tail asymmetry ratio = ng; exact time reversal",
         ratio_err < 0.01 && reversal,
         "ratio error " + fmt(ratio_err) + ", reversal " +
             (reversal ? "exact" : "broken"));
}

void criterion_7() {
  SinglyFilteredRegime r = make_singly_filtered(defaults(), derive(defaults()));
  double esc = r.kappa_a_ext / r.kappa_a;
  double expect = esc * (1.0 - kTwoPi / (6.0 * 150.0));
  double got = heralding_window(1e4 * r.ng / r.kappa_a, r);
  double x = r.kappa_a * r.tau_rt / r.ng;
  double mismatch = std::abs(heralding_window(r.tau_rt * (1.0 - 1e-12), r) -
                             heralding_window(r.tau_rt * (1.0 + 1e-12), r)) /
                    esc;
  bool pass = rel(got, expect) < 1e-9 && rel(expect, 0.8937) < 1e-3 &&
              mismatch < x * x;
  report(7, "heralding window limit 0.9 (1 - 2 pi/(6 F)) = 0.8937", pass,
         "eta(inf) = " + fmt(got) + ", branch mismatch " + fmt(mismatch) +
             " < " + fmt(x * x));
}

void criterion_8() {
  bool pass = true;
  double worst = 0.0;
  // synthetic rank-1 and two-mode matrices
  JsaMatrix m;
  Eigen::VectorXcd u(24), v(36);
  for (int i = 0; i < 24; ++i) u[i] = std::complex<double>(std::sin(i + 1.0), 0.2 * i);
  for (int j = 0; j < 36; ++j) v[j] = std::complex<double>(0.1 * j, std::cos(j * 0.3));
  m.V = u * v.transpose();
  double d1 = std::abs(purity(m) - 1.0);
  double d1s = std::abs(purity(m) - svd_purity(m));
  m.V = Eigen::MatrixXcd::Zero(20, 20);
  m.V(0, 0) = 0.5;
  m.V(3, 7) = std::complex<double>(0.0, 0.5);
  double d2 = std::abs(purity(m) - 0.5);
  double d2s = std::abs(purity(m) - svd_purity(m));
  for (double sigma_mhz : {4.0, 64.0, 600.0}) {
    JsaMatrix g = grid_at(kTwoPi * sigma_mhz * 1e6, 256);
    double d = std::abs(purity(g) - svd_purity(g));
    worst = std::max(worst, d);
  }
  worst = std::max({worst, d1s, d2s});
  pass = worst < 1e-10 && d1 < 1e-12 && d2 < 1e-12;
  report(8, "trace purity == SVD purity (1e-10); rank-1 and two-mode exact",
         pass, "worst |trace - svd| = " + fmt(worst));
}

void criterion_9() {
  bool pass = true;
  double prev_p = 0.0, eta_lo = 2.0, eta_hi = 0.0, p600 = 0.0;
  for (double mhz : {1.0, 4.0, 16.0, 64.0, 256.0, 600.0}) {
    JsaMatrix m = grid_at(kTwoPi * mhz * 1e6, 512);
    double p = purity(m);
    pass = pass && p > prev_p;
    prev_p = p;
    if (mhz == 600.0) p600 = p;
    double eta = heralding_broadband(m).eta;
    pass = pass && eta <= 0.9 + 1e-9;
    eta_lo = std::min(eta_lo, eta);
    eta_hi = std::max(eta_hi, eta);
  }
  pass = pass && p600 >= 0.9 && eta_hi / eta_lo < 1.05;
  report(9, "purity climbs to >= 0.9 at 600 MHz; heralding flat and <= 0.9",
         pass, "purity(600 MHz) = " + fmt(p600) + ", eta range [" + fmt(eta_lo) +
                   ", " + fmt(eta_hi) + "]");
}

void criterion_10() {
  SystemParams p = defaults();
  DerivedParams d = derive(p);
  SinglyFilteredRegime intra = make_singly_filtered(p, d);
  SinglyFilteredRegime bare = make_bare(p, d);
  PumpSpectrum pump{d.beta, kTwoPi * 600e6};
  JsaMatrix mi = grid_at(pump.sigma, 512);
  double eta_intra = heralding_broadband(mi).eta;
  bool pass = true;
  double prev = 1.0;
  double worst_gap = 1.0;
  for (int i = 0; i < 10; ++i) {
    double bw = bare.kappa_a * std::pow(10.0, -2.4 * i / 9.0);  // down to kappa/250
    PostFilterResult r = post_cavity_filter_compare(bw, bare, pump);
    pass = pass && r.heralding < prev;           // strictly decreasing
    pass = pass && eta_intra >= r.heralding;     // intra-cavity wins at every bw
    worst_gap = std::min(worst_gap, eta_intra - r.heralding);
    prev = r.heralding;
  }
  report(10, "intra-cavity heralding beats the post-cavity filter everywhere",
         pass, "eta_intra = " + fmt(eta_intra) + ", min gap " + fmt(worst_gap));
}

void criterion_11() {
  SystemParams p = defaults();
  DerivedParams d = derive(p);
  ExactFilterModel m;
  m.kappa_a = p.signal.kappa;
  m.delta_cap = p.filter.fwhm;
  m.delta_a = 0.0;
  m.g = p.g;
  m.beta = d.beta;
  double prev = -1.0;
  bool pass = true;
  std::string devs;
  for (double ratio : {4.0, 16.0, 64.0}) {
    m.kappa_abs = ratio * m.kappa_a;
    double ng = (m.kappa_a + m.kappa_abs) / m.delta_cap;
    double dev = projection_deviation(m, m.kappa_a / (2.0 * ng), 201);
    if (prev >= 0.0) pass = pass && dev < prev;
    prev = dev;
    devs += fmt(dev) + " ";
  }
  report(11, "projection error decreases with kappa_abs/kappa in {4,16,64}",
         pass, "deviations " + devs);
}

void criterion_12() {
  double sigma = kTwoPi * 600e6;
  JsaMatrix base = grid_at(sigma, 512);
  JsaMatrix fine = grid_at(sigma, 1024);
  JsaMatrix wide = grid_at(sigma, 512, 2.0);
  double p0 = purity(base), e0 = heralding_broadband(base).eta;
  double dp_fine = std::abs(purity(fine) - p0);
  double de_fine = std::abs(heralding_broadband(fine).eta - e0);
  double dp_wide = std::abs(purity(wide) - p0);
  double de_wide = std::abs(heralding_broadband(wide).eta - e0);
  bool pass = dp_fine < 1e-3 && de_fine < 1e-3 && dp_wide < 1e-3 && de_wide < 1e-3;
  report(12, "purity/heralding grid- and extent-stable to 1e-3", pass,
         "refine dp = " + fmt(dp_fine) + ", de = " + fmt(de_fine) +
             "; extents dp = " + fmt(dp_wide) + ", de = " + fmt(de_wide));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("all 12 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
