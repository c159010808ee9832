#pragma once

#include <cstdint>

#include "turancert/kernels.hpp"

namespace turancert {

// A numerically certified interval [lower, upper] for a norm, with the point
// estimate. The certification is Lipschitz-grid based; function values are
// taken at 64-bit precision, which is the one step not rounded outward.
struct NormEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::int64_t grid_points = 0;
  double truncation_radius = 0.0;
  double argmax = 0.0;  // best evaluation point found (not serialized)
};

// Uniform decay envelope 24/(1+x^2) valid for the limit witness at every
// spacing lambda in (0,1). Throws std::domain_error outside that range.
double decay_envelope(double lambda, double x);

// Certified sup norm of the network: Lipschitz slack
// sqrt(2) e^{-1/2} sum|c_k| on a refining grid over [-X, X], with the
// Gaussian tail outside X below gap/2. upper - lower <= gap on success;
// throws certification_error when the gap is below what 64-bit evaluation
// supports or the refinement budget is exhausted.
NormEstimate sup_norm(const TranslateNetwork& net, double gap);

// Same for the derivative, with second-derivative slack 2 sum|c_k|.
NormEstimate sup_norm_derivative(const TranslateNetwork& net, double gap);

// Squared L2 norm. The closed form
//   sum_{j,k} c_j c_k sqrt(pi/2) exp(-lambda^2 (j-k)^2 / 2)
// is the point value; an adaptive quadrature of the square cross-checks it
// within 2*tol. Throws quadrature_error on nonconvergence and
// certification_error when the two routes disagree.
NormEstimate l2_norm_squared(const TranslateNetwork& net, double tol);

// Quadrature route only (exposed for audits; same error contract).
double l2_norm_squared_quadrature(const TranslateNetwork& net, double tol);

// Uncertified grid estimate used to convert relative gaps to absolute ones.
double coarse_sup_estimate(const TranslateNetwork& net);

}  // namespace turancert
