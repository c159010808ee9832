#include "turancert/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "turancert/errors.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;

struct LimitSupProbe {
  NormEstimate sup;
  double lower = 0.0;
};

LimitSupProbe probe_limit_sup(double lambda, int probe_order, double rel_gap) {
  const TranslateNetwork net = canonical_witness({lambda, probe_order});
  const double gap = rel_gap * coarse_sup_estimate(net);
  LimitSupProbe probe;
  probe.sup = sup_norm(net, gap);
  probe.lower = std::max(0.0, probe.sup.lower - 4.0 * tail_abs_sum_bound(probe_order));
  return probe;
}

// Cheap certified upper bound for the limit sup norm, via the transform:
// the limit transform is 2 phi_hat(w) (plateau(lambda w) - F(lambda)), the
// plateau equals 1 on |w| <= pi/(2 lambda), and |plateau - F| <= 1.6
// everywhere.
double quick_limit_sup_upper(double lambda) {
  constexpr int kProbeOrder = 4000;
  const double series = weighted_coefficient_sums(lambda, kProbeOrder).series_value;
  const double series_slack = tail_abs_sum_bound(kProbeOrder);
  return 2.0 * (std::abs(1.0 - series) + series_slack) + 5.2 * std::erfc(kPi / (4.0 * lambda));
}

}  // namespace

double order_threshold(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw std::domain_error("order_threshold: lambda must lie in (0,1)");
  return (1280.0 / (3.0 * kPi)) * lambda * std::exp(kPi * kPi / (2.0 * lambda * lambda));
}

double limit_sup_lower_bound(double lambda, int probe_order, double rel_gap) {
  if (probe_order < 1) throw std::invalid_argument("limit_sup_lower_bound: probe_order must be >= 1");
  return probe_limit_sup(lambda, probe_order, rel_gap).lower;
}

LimitSupAnalyticBounds limit_sup_analytic_bounds(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("limit_sup_analytic_bounds: lambda must be > 0");
  const double decay = std::exp(-kPi * kPi / (2.0 * lambda * lambda));
  return {3.0 * kPi / (64.0 * lambda) * decay, kPi / (96.0 * lambda) * decay};
}

int choose_order(double lambda, double rel_gap) {
  if (!(lambda > 0.0)) throw std::invalid_argument("choose_order: lambda must be > 0");
  if (!(rel_gap > 0.0)) throw std::invalid_argument("choose_order: rel_gap must be > 0");

  // The tail bound never drops below 1/cutoff, so spacings whose limit
  // witness is certifiably smaller than 20/cutoff can never qualify.
  const double tail_floor = 20.0 / static_cast<double>(kTailCutoff);
  if (quick_limit_sup_upper(lambda) < tail_floor)
    throw infeasible_error("choose_order: limit witness is below the desk-scale tail floor");

  for (long n = 1; n <= 10000000; n *= 2) {
    const int order = static_cast<int>(n);
    LimitSupProbe probe;
    try {
      probe = probe_limit_sup(lambda, order, rel_gap);
    } catch (const certification_error& e) {
      throw infeasible_error(std::string("choose_order: norm certification failed at order ") +
                             std::to_string(order) + " (" + e.what() + ")");
    }
    const double tail = tail_abs_sum_bound(order);
    if (20.0 * tail < probe.lower) return order;
    if (probe.sup.upper + 4.0 * tail < tail_floor)
      throw infeasible_error("choose_order: certified limit sup bound is below the tail floor");
  }
  throw infeasible_error("choose_order: no order <= 1e7 satisfies the tail condition");
}

WitnessCertificate certify(double lambda, const CertifyOptions& opts) {
  if (!(lambda > 0.0)) throw std::invalid_argument("certify: lambda must be > 0");
  if (!(opts.rel_gap > 0.0)) throw std::invalid_argument("certify: rel_gap must be > 0");
  if (opts.order_override && *opts.order_override < 1)
    throw std::invalid_argument("certify: order override must be >= 1");

  WitnessCertificate cert;
  cert.lambda = lambda;
  cert.n = opts.order_override ? *opts.order_override : choose_order(lambda, opts.rel_gap);

  const TranslateNetwork net = canonical_witness({lambda, cert.n});
  const double scale = coarse_sup_estimate(net);
  const double gap = opts.rel_gap * scale;
  cert.sup_norm = sup_norm(net, gap);
  cert.deriv_norm = sup_norm_derivative(net, gap);

  cert.ratio_lower = cert.deriv_norm.lower / cert.sup_norm.upper;
  cert.threshold = kPi * kPi / (1024.0 * lambda);
  cert.passed = cert.ratio_lower >= cert.threshold;
  cert.tail_bound = tail_abs_sum_bound(cert.n);
  cert.p_infty_lower = std::max(0.0, cert.sup_norm.lower - 4.0 * cert.tail_bound);
  if (lambda < 1.0) cert.n0_paper = order_threshold(lambda);

  // Above the published sufficient order the ratio bound is unconditional:
  // a failure there is a defect in the toolkit, not in the input.
  if (cert.n0_paper && static_cast<double>(cert.n) > *cert.n0_paper && !cert.passed)
    throw std::logic_error("certify: order exceeds the published threshold yet the ratio check failed");

  if (opts.with_oscillation)
    cert.oscillation = oscillation_certificate(net, 1.01, 1e-8 * std::max(scale, 1e-12));

  return cert;
}

TruncationDiagnostics truncation_diagnostics(double lambda, int order) {
  ShiftParameters params{lambda, order};
  params.validate();

  TruncationDiagnostics diag;
  const double tail = tail_abs_sum_bound(order);
  diag.delta_bound = 2.0 * tail;
  diag.p_diff_bound = 4.0 * tail;

  const double far_series = weighted_coefficient_sums(lambda, order + 500).series_value;
  const int samples = 257;
  const double width = 4.0 * kPi / lambda;
  for (int i = 0; i < samples; ++i) {
    const double w = width * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double delta = trig_factor(params, w) - plateau(lambda * w) + far_series;
    diag.empirical_delta_max = std::max(diag.empirical_delta_max, std::abs(delta));
  }
  return diag;
}

std::vector<SweepRow> sharpness_sweep(const std::vector<double>& lambdas, double rel_gap) {
  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    SweepRow row;
    row.lambda = lambda;
    try {
      const WitnessCertificate cert = certify(lambda, {rel_gap, false, std::nullopt});
      row.n = cert.n;
      row.ratio_lower = cert.ratio_lower;
      row.threshold = cert.threshold;
      row.product = cert.ratio_lower * lambda;
      row.passed = cert.passed;
    } catch (const std::exception& e) {
      row.ratio_lower = std::numeric_limits<double>::quiet_NaN();
      row.threshold = std::numeric_limits<double>::quiet_NaN();
      row.product = std::numeric_limits<double>::quiet_NaN();
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace turancert
