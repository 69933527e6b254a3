#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spdclab/lineshape.hpp"

using namespace spdclab;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEqualWidthFactor = 0.643594252905582;  // product FWHM / width

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("lorentzian resonance and half-power points") {
  LorentzianResponse r{kTwoPi * 0.5e9, 0.0};
  auto peak = lorentzian(0.0, r);
  CHECK(peak.imag() == 0.0);
  CHECK(rel(peak.real(), 2.0 / (kTwoPi * 1e9)) < 1e-12);
  double p2 = std::norm(lorentzian(r.half_width, r));
  CHECK(rel(p2, std::norm(peak) / 2.0) < 1e-12);

  // off-resonance by exactly one half-width: 1/(hw (1 - i)) = (1 + i)/(2 hw)
  auto v = lorentzian(r.half_width, r);
  CHECK(rel(v.real(), 1.0 / (2.0 * r.half_width)) < 1e-12);
  CHECK(rel(v.imag(), 1.0 / (2.0 * r.half_width)) < 1e-12);

  LorentzianResponse shifted{kTwoPi * 1e6, kTwoPi * 5e6};
  CHECK(std::abs(lorentzian(shifted.center_detuning, shifted)) >
        std::abs(lorentzian(0.0, shifted)));
}

TEST_CASE("phase matching sinc") {
  double trt = 1.667e-9;
  PhaseMatch pm{trt};
  CHECK(phase_matching(0.0, pm) == 1.0);
  CHECK(std::abs(phase_matching(2.0 * std::numbers::pi / trt, pm)) < 1e-12);
  CHECK(phase_matching(1e9, PhaseMatch{0.0}) == 1.0);
  CHECK(phase_matching(3e8, pm) == phase_matching(-3e8, pm));
}

TEST_CASE("sinc and sinhc series region") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(rel(sinc(1e-5), 1.0 - 1e-10 / 6.0) < 1e-15);
  CHECK(rel(sinc(0.5), std::sin(0.5) / 0.5) < 1e-12);
  CHECK(sinhc(0.0) == 1.0);
  CHECK(rel(sinhc(1e-5), 1.0 + 1e-10 / 6.0) < 1e-15);
  CHECK(rel(sinhc(2.0), std::sinh(2.0) / 2.0) < 1e-12);
}

TEST_CASE("product FWHM closed form") {
  double k = kTwoPi * 1e9;
  CHECK(rel(product_lorentzian_fwhm(k, k), kEqualWidthFactor * k) < 1e-12);
  // narrow/broad pair: FWHM collapses to the narrow width
  double g1 = kTwoPi * 4e6, g2 = kTwoPi * 1e9;
  CHECK(rel(product_lorentzian_fwhm(g1, g2), g1) < 1e-4);
  CHECK(product_lorentzian_fwhm(g1, g2) == product_lorentzian_fwhm(g2, g1));
  // limit: vanishing first width
  CHECK(product_lorentzian_fwhm(1e-6 * k, k) < 2e-6 * k);
  CHECK_THROWS(product_lorentzian_fwhm(0.0, k));
}

TEST_CASE("product FWHM monotone in each width") {
  double lo = 1e4, hi = 1e10;
  for (int i = 0; i + 1 < 20; ++i) {
    double a0 = lo * std::pow(hi / lo, i / 19.0);
    double a1 = lo * std::pow(hi / lo, (i + 1) / 19.0);
    for (int j = 0; j < 20; ++j) {
      double b = lo * std::pow(hi / lo, j / 19.0);
      CHECK(product_lorentzian_fwhm(a1, b) > product_lorentzian_fwhm(a0, b));
      CHECK(product_lorentzian_fwhm(b, a1) > product_lorentzian_fwhm(b, a0));
    }
  }
}

TEST_CASE("numeric FWHM agrees with closed forms") {
  double k = kTwoPi * 1e9;
  auto single = [&](double w) { return std::norm(lorentzian(w, {k / 2.0, 0.0})); };
  CHECK(rel(numeric_fwhm(single, 0.0, 10.0 * k), k) < 1e-5);

  auto product = [&](double g1cap, double g2cap) {
    return [=](double w) {
      return std::norm(lorentzian(w, {g1cap / 2.0, 0.0})) *
             std::norm(lorentzian(w, {g2cap / 2.0, 0.0}));
    };
  };
  CHECK(rel(numeric_fwhm(product(k, k), 0.0, 10.0 * k), kEqualWidthFactor * k) <
        1e-4);
  double g1 = kTwoPi * 4e6;
  CHECK(rel(numeric_fwhm(product(g1, k), 0.0, 10.0 * g1),
            product_lorentzian_fwhm(g1, k)) < 1e-4);

  // ratio scan per the closed-form/oracle agreement property
  for (double ratio : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
    double a = ratio * k;
    CHECK(rel(numeric_fwhm(product(a, k), 0.0, 10.0 * a),
              product_lorentzian_fwhm(a, k)) < 1e-4);
  }
}

TEST_CASE("numeric FWHM bracket error") {
  auto flat = [](double) { return 1.0; };
  CHECK_THROWS(numeric_fwhm(flat, 0.0, 1.0));
}
