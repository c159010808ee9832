#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turancert/norms.hpp"
#include "turancert/oscillation.hpp"

namespace turancert {

// Machine-checkable record of one certification run: the spacing, the chosen
// truncation order, the certified ratio lower bound against the target
// threshold pi^2 / (2^10 lambda), and every intermediate quantity.
struct WitnessCertificate {
  double lambda = 0.0;
  int n = 0;
  std::optional<double> n0_paper;  // published sufficient order, lambda in (0,1) only
  double ratio_lower = 0.0;        // deriv_norm.lower / sup_norm.upper
  double threshold = 0.0;          // pi^2 / (2^10 lambda)
  bool passed = false;
  NormEstimate sup_norm;
  NormEstimate deriv_norm;
  double tail_bound = 0.0;     // coefficient tail bound at order n
  double p_infty_lower = 0.0;  // certified lower bound for the limit sup norm
  std::optional<OscillationReport> oscillation;
};

struct CertifyOptions {
  double rel_gap = 1e-4;  // certification gap relative to the witness magnitude
  bool with_oscillation = false;
  std::optional<int> order_override;
};

// Published sufficient order (1280/(3 pi)) lambda exp(pi^2/(2 lambda^2)).
// Domain (0,1); may overflow to +inf for very small lambda.
double order_threshold(double lambda);

// Certified lower bound for the sup norm of the limit witness:
// max(0, sup_norm(P_probe).lower - 4 * tail_abs_sum_bound(probe)). Returns 0
// when vacuous.
double limit_sup_lower_bound(double lambda, int probe_order, double rel_gap);

// Analytic lower bounds for the limit sup norm from the L2 chain, for audit:
// `printed` uses the published coefficient constants, `recomputed` the
// numerically verified ones.
struct LimitSupAnalyticBounds {
  double printed = 0.0;    // (3 pi / (64 lambda)) exp(-pi^2/(2 lambda^2))
  double recomputed = 0.0; // (pi / (96 lambda)) exp(-pi^2/(2 lambda^2))
};
LimitSupAnalyticBounds limit_sup_analytic_bounds(double lambda);

// Smallest order n in a doubling search with
// 20 * tail_abs_sum_bound(n) < limit_sup_lower_bound(lambda, n, rel_gap).
// Throws infeasible_error when no n <= 10^7 can qualify (including the
// provable case where the certified limit sup upper bound falls below the
// permanent 20/cutoff tail floor).
int choose_order(double lambda, double rel_gap);

WitnessCertificate certify(double lambda, const CertifyOptions& opts = {});

// Truncation error bounds (2 tail, 4 tail) for the trig factor and the
// witness respectively, plus a sampled empirical check of the first one.
struct TruncationDiagnostics {
  double delta_bound = 0.0;
  double p_diff_bound = 0.0;
  double empirical_delta_max = 0.0;  // max |T_n(w) - plateau(lambda w) + F_{n+500}|
};
TruncationDiagnostics truncation_diagnostics(double lambda, int order);

struct SweepRow {
  double lambda = 0.0;
  int n = 0;
  double ratio_lower = 0.0;
  double threshold = 0.0;
  double product = 0.0;  // ratio_lower * lambda
  bool passed = false;
  std::string note;  // nonempty when the row failed to certify
};

// Runs certify per spacing; failed rows are marked and the sweep continues.
std::vector<SweepRow> sharpness_sweep(const std::vector<double>& lambdas, double rel_gap);

}  // namespace turancert
