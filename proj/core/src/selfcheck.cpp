#include "turancert/selfcheck.hpp"

#include <cmath>
#include <numbers>

#include "turancert/coefficients.hpp"
#include "turancert/errors.hpp"
#include "turancert/frames.hpp"
#include "turancert/quadrature.hpp"
#include "turancert/witness.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;

SelfCheckRow make_row(std::string name, double reference, double recomputed, double tol,
                      std::string note = {}) {
  SelfCheckRow row;
  row.name = std::move(name);
  row.reference = reference;
  row.recomputed = recomputed;
  row.difference = std::abs(reference - recomputed);
  row.agree = row.difference <= tol;
  row.note = std::move(note);
  return row;
}

double plateau_square_integral_quadrature() {
  // (2/pi) int_0^pi plateau^2, split at the branch kink.
  auto integrand = [](double x) {
    const double h = plateau(x);
    return h * h;
  };
  auto left = integrate_adaptive(integrand, 0.0, kPi / 2.0, 1e-12);
  auto right = integrate_adaptive(integrand, kPi / 2.0, kPi, 1e-12);
  if (!left.converged || !right.converged)
    throw quadrature_error("selfcheck: plateau square quadrature did not converge");
  return (2.0 / kPi) * (left.value + right.value);
}

}  // namespace

SelfCheckReport run_selfcheck() {
  SelfCheckReport report;
  try {
    report.rows.push_back(make_row("a0 closed form vs quadrature", plateau_cosine_coefficient(0),
                                   plateau_cosine_coefficient_quadrature(0, 1e-12), 1e-10));
    report.rows.push_back(make_row("a1 closed form vs quadrature", plateau_cosine_coefficient(1),
                                   plateau_cosine_coefficient_quadrature(1, 1e-12), 1e-10));
    report.rows.push_back(make_row("a2 closed form vs quadrature", plateau_cosine_coefficient(2),
                                   plateau_cosine_coefficient_quadrature(2, 1e-12), 1e-10));

    const double abs_sum = coefficient_abs_sum(kTailCutoff);
    report.rows.push_back(make_row(
        "sum_{k>=1} |a_k| printed vs recomputed", 1.0 + 5.0 / (3.0 * kPi), abs_sum, 1e-6,
        "printed constant equals a_0 + recomputed sum"));

    const double square_sum = coefficient_square_sum(kTailCutoff);
    report.rows.push_back(make_row("sum_{k>=1} a_k^2 printed vs recomputed", 9.0 / 8.0,
                                   square_sum, 1e-6, "printed constant equals 2 a_0^2"));

    report.rows.push_back(make_row("Parseval: (1/pi) int plateau^2 vs 2 a_0^2 + sum a_k^2",
                                   plateau_square_integral_quadrature(),
                                   2.0 * 0.75 * 0.75 + square_sum, 1e-9));

    report.rows.push_back(make_row("witness coefficient energy printed vs recomputed",
                                   9.0 / 4.0, 2.0 * square_sum, 1e-6,
                                   "lower bound for sum |alpha_k|^2"));

    report.rows.push_back(make_row("sufficient-order constant printed vs recomputed",
                                   1280.0 / (3.0 * kPi), 1920.0 / kPi, 1e-6,
                                   "recomputed from the verified coefficient energy"));

    const double mu1 = frame_bounds(1.0, 4096).mu;
    const double mu1_explicit = kPi * std::exp(-kPi * kPi / 2.0);
    SelfCheckRow mu_row = make_row("frame lower bound at lambda=1 vs explicit estimate",
                                   mu1_explicit, mu1, 0.0,
                                   "agreement means the computed mu dominates the estimate");
    mu_row.agree = mu1 >= mu1_explicit * (1.0 - 1e-12);
    report.rows.push_back(std::move(mu_row));

    const auto bounds = limit_sup_analytic_bounds(0.5);
    report.rows.push_back(make_row("limit sup analytic bound at lambda=1/2, printed vs recomputed",
                                   bounds.printed, bounds.recomputed, 1e-12,
                                   "both reported; the recomputed bound is the supported one"));
  } catch (const quadrature_error&) {
    report.oracles_converged = false;
  }
  return report;
}

}  // namespace turancert
