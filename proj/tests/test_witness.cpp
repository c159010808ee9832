#include <cmath>
#include <numbers>

#include <doctest.h>

#include "turancert/errors.hpp"
#include "turancert/serialization.hpp"
#include "turancert/witness.hpp"

using namespace turancert;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("published order threshold values and domain") {
  CHECK_THROWS_AS(order_threshold(1.0), std::domain_error);
  CHECK_THROWS_AS(order_threshold(-0.5), std::domain_error);

  // limit toward 1: (1280/(3 pi)) e^{pi^2/2}
  const double near_one = order_threshold(0.9999999);
  CHECK(near_one == doctest::Approx(1280.0 / (3.0 * kPi) * std::exp(kPi * kPi / 2.0))
                        .epsilon(1e-4));
  CHECK(near_one == doctest::Approx(1.888e4).epsilon(1e-3));

  CHECK(order_threshold(0.5) ==
        doctest::Approx(1280.0 / (3.0 * kPi) * 0.5 * std::exp(2.0 * kPi * kPi)).epsilon(1e-12));
  CHECK(order_threshold(0.5) == doctest::Approx(2.548e10).epsilon(1e-3));

  CHECK(order_threshold(0.4) > order_threshold(0.8));

  // far below desk scale the threshold overflows
  CHECK(std::isinf(order_threshold(0.1)));
}

TEST_CASE("limit sup lower bound behaviour") {
  const double strong = limit_sup_lower_bound(0.5, 200, 1e-4);
  CHECK(strong > 0.0);

  // a single-term probe leaves a vacuous bound
  CHECK(limit_sup_lower_bound(0.5, 1, 1e-4) == 0.0);

  // the bound settles as the probe order doubles
  double prev = limit_sup_lower_bound(0.5, 25, 1e-5);
  for (int probe : {50, 100, 200}) {
    const double next = limit_sup_lower_bound(0.5, probe, 1e-5);
    CHECK(next >= prev - 1e-5);
    prev = next;
  }
}

TEST_CASE("analytic limit-sup bounds keep both constants visible") {
  const auto bounds = limit_sup_analytic_bounds(0.5);
  CHECK(bounds.printed == doctest::Approx(3.0 * kPi / 32.0 * std::exp(-2.0 * kPi * kPi)));
  CHECK(bounds.recomputed == doctest::Approx(kPi / 48.0 * std::exp(-2.0 * kPi * kPi)));
  CHECK(bounds.printed > bounds.recomputed);
}

TEST_CASE("order search succeeds at desk scale") {
  const int n_half = choose_order(0.5, 1e-4);
  CHECK(n_half >= 1);
  CHECK(n_half <= 100000);
  CHECK(20.0 * tail_abs_sum_bound(n_half) < limit_sup_lower_bound(0.5, n_half, 1e-4));

  const int n_one = choose_order(1.0, 1e-4);
  CHECK(n_one <= 100000);

  // shrinking the spacing cannot make the search easier
  CHECK(choose_order(0.5, 1e-4) >= choose_order(0.9, 1e-4));
}

TEST_CASE("order search reports desk-scale infeasibility") {
  CHECK_THROWS_AS(choose_order(0.1, 1e-3), infeasible_error);
  CHECK_THROWS_AS(choose_order(0.02, 1e-3), infeasible_error);
}

TEST_CASE("certificates pass at the reference spacings") {
  for (double lambda : {0.5, 0.8, 1.1}) {
    const WitnessCertificate cert = certify(lambda, {1e-4, false, std::nullopt});
    CAPTURE(lambda);
    CHECK(cert.passed);
    CHECK(cert.ratio_lower >= cert.threshold);
    CHECK(cert.threshold == doctest::Approx(kPi * kPi / (1024.0 * lambda)).epsilon(1e-15));
    CHECK(cert.ratio_lower == doctest::Approx(cert.deriv_norm.lower / cert.sup_norm.upper));
    CHECK(cert.p_infty_lower > 0.0);
    CHECK(20.0 * cert.tail_bound < cert.p_infty_lower);
    if (lambda < 1.0) {
      REQUIRE(cert.n0_paper.has_value());
      CHECK(*cert.n0_paper > cert.n);  // the published order is far more conservative
    } else {
      CHECK(!cert.n0_paper.has_value());
    }
  }
}

TEST_CASE("threshold constant at lambda one") {
  const WitnessCertificate cert = certify(1.0, {1e-4, false, std::nullopt});
  CHECK(cert.threshold == doctest::Approx(0.009638285547958357).epsilon(1e-12));
}

TEST_CASE("certificate with oscillation attached") {
  const WitnessCertificate cert = certify(0.8, {1e-5, true, std::nullopt});
  REQUIRE(cert.oscillation.has_value());
  CHECK(cert.oscillation->passed());
  CHECK(cert.oscillation->r > 0.0);
}

TEST_CASE("certificates are deterministic") {
  const WitnessCertificate a = certify(0.9, {1e-4, true, std::nullopt});
  const WitnessCertificate b = certify(0.9, {1e-4, true, std::nullopt});
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("order override is honored") {
  const WitnessCertificate cert = certify(0.7, {1e-4, false, 24});
  CHECK(cert.n == 24);
}

TEST_CASE("truncation diagnostics bounds") {
  const auto diag = truncation_diagnostics(0.6, 100);
  CHECK(diag.delta_bound <= 0.02);
  CHECK(diag.p_diff_bound <= 0.04);
  CHECK(diag.p_diff_bound == doctest::Approx(2.0 * diag.delta_bound));
  CHECK(diag.empirical_delta_max <= diag.delta_bound + tail_abs_sum_bound(600) + 1e-12);

  // doubling the order tightens both bounds
  const auto finer = truncation_diagnostics(0.6, 200);
  CHECK(finer.delta_bound < diag.delta_bound);
  CHECK(finer.p_diff_bound < diag.p_diff_bound);
}

TEST_CASE("trig factor limit identity at the origin") {
  // T_n(0) - plateau(0) + F_n collapses to the coefficient tail
  const double lambda = 0.75;
  const int n = 80;
  const ShiftParameters params{lambda, n};
  const auto sums = weighted_coefficient_sums(lambda, n);
  const double residual = trig_factor(params, 0.0) - 1.0 + sums.series_value;
  double tail = 0.0;
  for (int k = n + 1; k <= n + 4000; ++k) tail -= plateau_cosine_coefficient(k);
  CHECK(residual == doctest::Approx(tail).epsilon(1e-6));
  CHECK(std::abs(residual) <= tail_abs_sum_bound(n));
}

TEST_CASE("sharpness sweep marks rows and keeps going") {
  const auto rows = sharpness_sweep({0.8, 0.02, 1.0}, 1e-4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].passed);
  CHECK(rows[0].note.empty());
  CHECK(!rows[1].passed);
  CHECK(!rows[1].note.empty());
  CHECK(std::isnan(rows[1].ratio_lower));
  CHECK(rows[2].passed);
  CHECK(rows[2].product >= kPi * kPi / 1024.0);

  CHECK(sharpness_sweep({}, 1e-4).empty());

  // a single-row sweep agrees with certify
  const auto single = sharpness_sweep({0.8}, 1e-4);
  const WitnessCertificate cert = certify(0.8, {1e-4, false, std::nullopt});
  CHECK(single[0].n == cert.n);
  CHECK(single[0].ratio_lower == doctest::Approx(cert.ratio_lower));
}

TEST_CASE("network JSON round trip") {
  const TranslateNetwork net = canonical_witness({0.9, 5});
  const std::string text = to_json(net);
  const TranslateNetwork back = network_from_json(text);
  CHECK(back.lambda() == net.lambda());
  REQUIRE(back.coefficients().size() == net.coefficients().size());
  for (std::size_t i = 0; i < net.coefficients().size(); ++i) {
    CHECK(back.coefficients()[i].first == net.coefficients()[i].first);
    CHECK(back.coefficients()[i].second == net.coefficients()[i].second);
  }
}
