#include <cmath>
#include <numbers>

#include <doctest.h>

#include "turancert/errors.hpp"
#include "turancert/oscillation.hpp"
#include "turancert/quadrature.hpp"
#include "turancert/witness.hpp"
#include "test_support.hpp"

using namespace turancert;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("positive profile carries no negative mass") {
  const TranslateNetwork single(1.0, {{0, 1.0}});
  const FourierProfile profile = analytic_fourier_transform(single);
  const OscillationReport rep = signed_part_integrals(profile, 3.0, 1e-10);
  CHECK(rep.minus_mass == 0.0);
  CHECK(rep.plus_mass > 0.0);

  // the full-band positive mass is the total transform mass sqrt(2 pi)
  const OscillationReport full = signed_part_integrals(profile, profile.band_radius(), 1e-10);
  CHECK(full.plus_mass == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-9));
}

TEST_CASE("plus and minus masses decompose the plain integral") {
  const TranslateNetwork net = canonical_witness({0.8, 6});
  const FourierProfile profile = analytic_fourier_transform(net);
  for (double r : {0.5, 2.0, 8.0}) {
    const OscillationReport rep = signed_part_integrals(profile, r, 1e-10);
    auto direct = integrate_adaptive(profile, -std::min(r, profile.band_radius()),
                                     std::min(r, profile.band_radius()), 1e-10);
    REQUIRE(direct.converged);
    CAPTURE(r);
    CHECK(std::abs((rep.plus_mass - rep.minus_mass) - direct.value) < 2e-10 + rep.quad_error);
  }
}

TEST_CASE("masses are nondecreasing in the window radius") {
  const TranslateNetwork net = canonical_witness({0.6, 8});
  const FourierProfile profile = analytic_fourier_transform(net);
  double prev_plus = 0.0, prev_minus = 0.0;
  for (double r : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    const OscillationReport rep = signed_part_integrals(profile, r, 1e-11);
    CHECK(rep.plus_mass >= prev_plus - 1e-9);
    CHECK(rep.minus_mass >= prev_minus - 1e-9);
    prev_plus = rep.plus_mass;
    prev_minus = rep.minus_mass;
  }
}

TEST_CASE("below the first sign change one mass vanishes") {
  const ShiftParameters params{1.0, 2};
  const TranslateNetwork net = canonical_witness(params);
  const FourierProfile profile = analytic_fourier_transform(net);

  // locate the first zero of the trig factor by scan
  double first_zero = 0.0;
  double prev = trig_factor(params, 0.0);
  for (double w = 0.01; w < 10.0; w += 0.01) {
    const double v = trig_factor(params, w);
    if ((prev > 0) != (v > 0)) {
      first_zero = w;
      break;
    }
    prev = v;
  }
  REQUIRE(first_zero > 0.0);

  const OscillationReport rep = signed_part_integrals(profile, first_zero / 2.0, 1e-12);
  CHECK(std::min(rep.plus_mass, rep.minus_mass) == 0.0);
  CHECK(std::max(rep.plus_mass, rep.minus_mass) > 0.0);
}

TEST_CASE("non-real profiles are rejected") {
  const TranslateNetwork skew(0.5, {{0, 0.3}, {1, -0.8}});
  CHECK_THROWS_AS(signed_part_integrals(analytic_fourier_transform(skew), 1.0, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("oscillation certificate for a pipeline witness") {
  const int n = choose_order(0.5, 1e-4);
  const TranslateNetwork net = canonical_witness({0.5, n});
  const OscillationReport rep =
      oscillation_certificate(net, 1.01, 1e-9 * coarse_sup_estimate(net));
  CHECK(rep.r > 0.0);
  CHECK(rep.threshold > 0.0);
  CHECK(rep.plus_mass - rep.quad_error >= rep.threshold * (1.0 - 1e-6));
  CHECK(rep.minus_mass - rep.quad_error >= rep.threshold * (1.0 - 1e-6));
  CHECK(rep.passed());
}

TEST_CASE("oscillation certificate rejects networks not vanishing at zero") {
  const TranslateNetwork single(1.0, {{0, 1.0}});
  CHECK_THROWS_AS(oscillation_certificate(single, 1.01, 1e-9), hypothesis_error);
  const TranslateNetwork zero(1.0, {});
  CHECK_THROWS_AS(oscillation_certificate(zero, 1.01, 1e-9), hypothesis_error);
}

TEST_CASE("oscillation certificate scales homogeneously") {
  const TranslateNetwork net = canonical_witness({0.7, 8});
  const double tol = 1e-10 * coarse_sup_estimate(net);
  const OscillationReport base = oscillation_certificate(net, 1.01, tol);
  const OscillationReport scaled = oscillation_certificate(net.scaled(5.0), 1.01, 5.0 * tol);
  CHECK(scaled.plus_mass == doctest::Approx(5.0 * base.plus_mass).epsilon(1e-6));
  CHECK(scaled.minus_mass == doctest::Approx(5.0 * base.minus_mass).epsilon(1e-6));
  CHECK(scaled.threshold == doctest::Approx(5.0 * base.threshold).epsilon(1e-5));
  CHECK(scaled.passed() == base.passed());
}

TEST_CASE("smoothing error vanishes for the zero network") {
  const TranslateNetwork zero(1.0, {});
  CHECK(fejer_smoothing_error(zero, 10.0, {0.0, 1.0, 2.0}) == 0.0);
}

TEST_CASE("smoothing error agrees with the transform-side evaluation") {
  const TranslateNetwork net = canonical_witness({0.8, 6});
  const FourierProfile profile = analytic_fourier_transform(net);
  const double r = 30.0;
  for (double x : {0.0, 0.7, 2.4}) {
    const double from_x_space = fejer_smoothing_error(net, r, {x});
    // |f(x) - P(x)| via the transform: -(2/sqrt(2pi)) int_0^R profile * min(w/r,1) cos(wx)
    auto res = integrate_adaptive(
        [&](double w) {
          return profile(w) * std::min(std::abs(w) / r, 1.0) * std::cos(w * x);
        },
        0.0, profile.band_radius(), 1e-12);
    REQUIRE(res.converged);
    const double from_transform = std::abs(-2.0 / std::sqrt(2.0 * kPi) * res.value);
    CAPTURE(x);
    CHECK(from_x_space == doctest::Approx(from_transform).epsilon(5e-4));
  }
}

TEST_CASE("smoothing error for a pipeline witness meets the quarter bound") {
  const int n = choose_order(0.7, 1e-4);
  const TranslateNetwork net = canonical_witness({0.7, n});
  const double gap = 1e-6 * coarse_sup_estimate(net);
  const NormEstimate sup = sup_norm(net, gap);
  const NormEstimate deriv = sup_norm_derivative(net, gap);
  const double ratio_upper = deriv.upper / sup.lower;
  const double r = 2.0 * (512.0 / kPi) * ratio_upper;

  std::vector<double> grid;
  const double reach = 0.7 * net.max_abs_index() + 2.0;
  for (int i = 0; i < 50; ++i)
    grid.push_back(-reach + 2.0 * reach * static_cast<double>(i) / 49.0);

  const double err = fejer_smoothing_error(net, r, grid);
  CHECK(err < sup.lower / 4.0);

  // the origin sample alone is also under the bound since P(0) = 0
  CHECK(fejer_smoothing_error(net, r, {0.0}) < sup.lower / 4.0);
}
