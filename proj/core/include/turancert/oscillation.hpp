#pragma once

#include <vector>

#include "turancert/kernels.hpp"
#include "turancert/norms.hpp"

namespace turancert {

// Masses of the positive and negative parts of a real transform over the
// frequency window [-r, r], with the quadrature error and, when produced by
// oscillation_certificate, the certified sup norm and the mass threshold
// sqrt(2pi)/4 * ||P||_inf it is compared against.
struct OscillationReport {
  double r = 0.0;
  double plus_mass = 0.0;
  double minus_mass = 0.0;
  double quad_error = 0.0;
  NormEstimate sup_norm_used;
  double threshold = 0.0;

  bool passed(double rel_slack = 1e-6) const;
};

// Adaptive quadrature of max(profile, 0) and max(-profile, 0) over [-r, r].
// Sign changes are isolated by a scan at the profile's resolution followed by
// bisection, so each quadrature panel is single-signed and smooth. Throws
// std::invalid_argument when the profile is not real-valued,
// pathological_profile_error past 10^4 sign changes, and quadrature_error on
// nonconvergence.
OscillationReport signed_part_integrals(const FourierProfile& profile, double r, double tol);

// End-to-end oscillation check for a network vanishing at the origin:
// certifies the norms, sets r = safety * (8^3/pi) * ||P'||/||P|| from the
// conservative interval ends, and integrates the signed parts of the
// transform over [-r, r]. Throws hypothesis_error when P(0) is not zero at
// working precision or the network is degenerate.
OscillationReport oscillation_certificate(const TranslateNetwork& net, double safety, double tol);

// Max over the sample points of |P * h_r - P|, the Fejer-smoothing defect.
// The convolution is quadrature over |t| <= T with the kernel mass outside T
// evaluated analytically; requires r above the oscillation threshold
// (8^3/pi) ||P'||/||P|| for the contract value < ||P||_inf / 4.
double fejer_smoothing_error(const TranslateNetwork& net, double r,
                             const std::vector<double>& x_samples);

}  // namespace turancert
