#include "turancert/norms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "turancert/errors.hpp"
#include "turancert/quadrature.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kEvalBudget = 30000000;

struct Cell {
  double center;
  double halfwidth;
  double fvalue;  // |f(center)|
};

// Smallest u >= 1 with tail(u) <= bound, stepping in halves. `derivative`
// switches the per-term envelope from exp(-u^2) to 2u exp(-u^2).
double tail_radius(double abs_sum, double bound, bool derivative) {
  double u = 1.0;
  auto tail = [&](double v) {
    const double g = std::exp(-v * v);
    return abs_sum * (derivative ? 2.0 * v * g : g);
  };
  while (tail(u) > bound && u < 40.0) u += 0.5;
  return u;
}

NormEstimate certified_sup(const TranslateNetwork& net, double gap, bool derivative) {
  if (!(gap > 0.0)) throw std::invalid_argument("sup_norm: gap must be > 0");

  NormEstimate est;
  const double abs_sum = net.coeff_abs_sum();
  if (abs_sum == 0.0) {
    est.truncation_radius = 1.0;
    est.grid_points = 1;
    return est;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  if (gap < 16.0 * eps * abs_sum)
    throw certification_error("sup_norm: requested gap is below the 64-bit evaluation floor");

  const double lipschitz =
      (derivative ? kGaussianSecondDerivativeSup : gaussian_derivative_sup()) * abs_sum;
  const double reach = net.lambda() * static_cast<double>(net.max_abs_index());
  const double u = tail_radius(abs_sum, gap / 2.0, derivative);
  const double radius = reach + u;
  const double tail_bound = gap / 2.0;

  auto f = [&net, derivative](double x) {
    return std::abs(derivative ? net.derivative(x) : net(x));
  };

  const double s0 = 0.01 * std::min(1.0, net.lambda());
  const std::int64_t m0 =
      std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(2.0 * radius / s0)));

  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m0));
  double best = 0.0;
  double best_at = 0.0;
  std::int64_t evals = 0;
  const double h0 = 2.0 * radius / static_cast<double>(m0);
  for (std::int64_t i = 0; i < m0; ++i) {
    const double c = -radius + h0 * (static_cast<double>(i) + 0.5);
    const double v = f(c);
    ++evals;
    if (v > best) { best = v; best_at = c; }
    cells.push_back({c, h0 / 2.0, v});
  }

  while (true) {
    double upper = tail_bound;
    for (const auto& cell : cells)
      upper = std::max(upper, cell.fvalue + lipschitz * cell.halfwidth);
    if (upper - best <= gap) {
      est.value = best;
      est.lower = best;
      est.upper = std::max(upper, best);
      est.grid_points = evals;
      est.truncation_radius = radius;
      est.argmax = best_at;
      return est;
    }

    std::vector<Cell> next;
    next.reserve(2 * cells.size());
    for (const auto& cell : cells) {
      if (cell.fvalue + lipschitz * cell.halfwidth <= best) continue;  // cannot beat the incumbent
      const double hw = cell.halfwidth / 2.0;
      if (hw < 4.0 * eps * std::max(1.0, std::abs(cell.center)))
        throw certification_error("sup_norm: grid spacing underflowed before certification");
      for (const double c : {cell.center - hw, cell.center + hw}) {
        const double v = f(c);
        ++evals;
        if (v > best) { best = v; best_at = c; }
        next.push_back({c, hw, v});
      }
    }
    if (evals > kEvalBudget)
      throw certification_error("sup_norm: evaluation budget exhausted before certification");
    if (next.empty()) {
      // everything pruned: the incumbent is within Lipschitz slack of the sup
      est.value = best;
      est.lower = best;
      est.upper = std::max(best, tail_bound);
      est.grid_points = evals;
      est.truncation_radius = radius;
      est.argmax = best_at;
      return est;
    }
    cells.swap(next);
  }
}

}  // namespace

double decay_envelope(double lambda, double x) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw std::domain_error("decay_envelope: lambda must lie in (0,1)");
  return 24.0 / (1.0 + x * x);
}

NormEstimate sup_norm(const TranslateNetwork& net, double gap) {
  return certified_sup(net, gap, false);
}

NormEstimate sup_norm_derivative(const TranslateNetwork& net, double gap) {
  return certified_sup(net, gap, true);
}

double l2_norm_squared_quadrature(const TranslateNetwork& net, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("l2_norm_squared: tol must be > 0");
  const double abs_sum = net.coeff_abs_sum();
  if (abs_sum == 0.0) return 0.0;

  // |P(x)| <= abs_sum * exp(-u^2) past the outermost translate, so the
  // discarded integral of P^2 is below abs_sum^2 e^{-2u^2} for u >= 1.
  double u = 1.0;
  while (abs_sum * abs_sum * std::exp(-2.0 * u * u) > tol / 2.0 && u < 40.0) u += 0.5;
  const double radius = net.lambda() * static_cast<double>(net.max_abs_index()) + u;

  auto res = integrate_adaptive([&net](double x) { const double p = net(x); return p * p; },
                                -radius, radius, tol / 2.0, 200000);
  if (!res.converged) throw quadrature_error("l2_norm_squared: quadrature did not converge");
  return res.value;
}

NormEstimate l2_norm_squared(const TranslateNetwork& net, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("l2_norm_squared: tol must be > 0");

  const auto& coeffs = net.coefficients();
  const std::size_t m = coeffs.size();
  NormEstimate est;
  est.truncation_radius = 1.0;
  est.grid_points = static_cast<std::int64_t>(m * m);
  if (m == 0) {
    est.grid_points = 1;
    return est;
  }

  // Pairwise overlap integrals: int phi(x-a) phi(x-b) dx = sqrt(pi/2) e^{-(a-b)^2/2}.
  static const double root_half_pi = std::sqrt(kPi / 2.0);
  const double lambda = net.lambda();
  double closed = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    closed += coeffs[i].second * coeffs[i].second * root_half_pi;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = lambda * static_cast<double>(coeffs[j].first - coeffs[i].first);
      const double overlap = root_half_pi * std::exp(-d * d / 2.0);
      if (overlap == 0.0) break;  // coeffs sorted by index, gaps only grow
      closed += 2.0 * coeffs[i].second * coeffs[j].second * overlap;
    }
  }

  const double quad = l2_norm_squared_quadrature(net, tol);
  if (std::abs(closed - quad) > 2.0 * tol)
    throw certification_error("l2_norm_squared: closed form and quadrature disagree");

  est.value = closed;
  est.lower = std::max(0.0, std::min(closed, quad) - tol);
  est.upper = std::max(closed, quad) + tol;
  est.truncation_radius = net.lambda() * net.max_abs_index() + 6.0;
  return est;
}

double coarse_sup_estimate(const TranslateNetwork& net) {
  const double abs_sum = net.coeff_abs_sum();
  if (abs_sum == 0.0) return 0.0;
  const double radius = net.lambda() * static_cast<double>(net.max_abs_index()) + 4.0;
  const double step = std::min(0.05, net.lambda() / 8.0);
  double best = 0.0;
  for (double x = -radius; x <= radius; x += step) best = std::max(best, std::abs(net(x)));
  return std::max(best, abs_sum * 1e-13);
}

}  // namespace turancert
