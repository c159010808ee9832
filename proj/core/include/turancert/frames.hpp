#pragma once

#include "turancert/kernels.hpp"
#include "turancert/norms.hpp"

namespace turancert {

// Two-sided Riesz-type bounds for the L2 norm of Gaussian translate sums at
// spacing lambda: mu is a certified lower bound for
// (2pi/lambda) inf_w sum_l |phi_hat((w + 2pi l)/lambda)|^2 and big_m the
// matching certified upper bound for the sup.
struct FrameBounds {
  double lambda = 0.0;
  double mu = 0.0;
  double big_m = 0.0;
  int omega_grid = 0;
  int l_truncation = 0;
};

// Truncated periodization sum_{|l| <= l_max} |phi_hat((omega + 2pi l)/lambda)|^2.
double periodized_transform_energy(double lambda, double omega, int l_max);

// Smallest truncation making the dropped periodization tail negligible
// (below 1e-15 of the smallest energy value over a period).
int default_l_truncation(double lambda);

// Grid scan over one period with per-cell Lipschitz slack and local
// subdivision around extremizers. grid >= 64 required.
FrameBounds frame_bounds(double lambda, int grid);

struct FrameCheck {
  double l2_squared = 0.0;        // ||f||_2^2 from the closed form
  double mu = 0.0;                // frame lower constant used
  double coeff_square_sum = 0.0;  // sum |c_k|^2
  bool holds = false;             // l2_squared >= mu * coeff_square_sum - tol
};

FrameCheck frame_inequality_check(const TranslateNetwork& net, double tol);

// ||f||_2^2 by the periodization route:
// (1/lambda) int_0^{2pi} energy(w) |sum_k c_k e^{ikw}|^2 dw.
// Cross-checks the x-space closed form in l2_norm_squared.
double l2_norm_squared_periodized(const TranslateNetwork& net, double tol);

}  // namespace turancert
