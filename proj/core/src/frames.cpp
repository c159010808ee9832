#include "turancert/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "turancert/errors.hpp"
#include "turancert/quadrature.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;

// |d/dt of e^{-t^2/2}| envelope t e^{-t^2/2}: increasing on [0,1], decreasing
// beyond. Max over an interval of |t| values.
double slope_envelope_max(double lo, double hi) {
  auto g = [](double t) { return t * std::exp(-t * t / 2.0); };
  if (lo <= 1.0 && 1.0 <= hi) return g(1.0);
  return std::max(g(lo), g(hi));
}

struct EnergyFunction {
  double lambda;
  int l_max;

  double operator()(double omega) const {
    return periodized_transform_energy(lambda, omega, l_max);
  }

  // Lipschitz bound for the energy over the cell [a, b].
  double lipschitz(double a, double b) const {
    double acc = 0.0;
    for (int l = -l_max; l <= l_max; ++l) {
      const double ta = (a + 2.0 * kPi * l) / lambda;
      const double tb = (b + 2.0 * kPi * l) / lambda;
      double lo, hi;
      if (ta <= 0.0 && 0.0 <= tb) {
        lo = 0.0;
        hi = std::max(-ta, tb);
      } else {
        lo = std::min(std::abs(ta), std::abs(tb));
        hi = std::max(std::abs(ta), std::abs(tb));
      }
      acc += slope_envelope_max(lo, hi) / (2.0 * lambda);
    }
    return acc;
  }
};

struct EnergyCell {
  double a, b, ea, eb;
};

double golden_section_min(const EnergyFunction& f, double a, double b, int iters) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

double periodized_transform_energy(double lambda, double omega, int l_max) {
  if (!(lambda > 0.0)) throw std::invalid_argument("periodized_transform_energy: lambda must be > 0");
  if (l_max < 1) throw std::invalid_argument("periodized_transform_energy: l_max must be >= 1");
  double acc = 0.0;
  for (int l = -l_max; l <= l_max; ++l) {
    const double t = (omega + 2.0 * kPi * l) / lambda;
    acc += 0.5 * std::exp(-t * t / 2.0);
  }
  return acc;
}

int default_l_truncation(double lambda) {
  const double floor_scale = 1e-16 * 0.5 * std::exp(-kPi * kPi / (2.0 * lambda * lambda));
  int l = 1;
  while (l < 64) {
    const double tail = 2.0 * std::exp(-2.0 * kPi * kPi * l * l / (lambda * lambda));
    if (tail <= floor_scale) break;
    ++l;
  }
  return l;
}

FrameBounds frame_bounds(double lambda, int grid) {
  if (!(lambda > 0.0)) throw std::invalid_argument("frame_bounds: lambda must be > 0");
  if (grid < 64) throw std::invalid_argument("frame_bounds: grid must be >= 64");

  const EnergyFunction energy{lambda, default_l_truncation(lambda)};

  std::vector<EnergyCell> cells;
  cells.reserve(static_cast<std::size_t>(grid));
  const double h = 2.0 * kPi / static_cast<double>(grid);
  double prev_w = 0.0, prev_e = energy(0.0);
  double point_min = prev_e, point_max = prev_e;
  double argmin = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double w = h * static_cast<double>(i);
    const double e = energy(w);
    cells.push_back({prev_w, w, prev_e, e});
    if (e < point_min) { point_min = e; argmin = w; }
    point_max = std::max(point_max, e);
    prev_w = w;
    prev_e = e;
  }

  // Descent around the grid minimizer sharpens the point estimate the cell
  // bounds are squeezed against.
  point_min = std::min(point_min, golden_section_min(energy, argmin - h, argmin + h, 48));

  auto cell_lb = [&energy](const EnergyCell& c) {
    return 0.5 * (c.ea + c.eb) - 0.5 * energy.lipschitz(c.a, c.b) * (c.b - c.a);
  };
  auto cell_ub = [&energy](const EnergyCell& c) {
    return 0.5 * (c.ea + c.eb) + 0.5 * energy.lipschitz(c.a, c.b) * (c.b - c.a);
  };

  // Local subdivision: only cells that could dip below the observed minimum
  // (resp. rise above the observed maximum) are split.
  for (int round = 0; round < 48; ++round) {
    double global_lb = point_min;
    std::vector<EnergyCell> next;
    next.reserve(cells.size());
    bool split_any = false;
    for (const auto& c : cells) {
      const double lb = cell_lb(c);
      global_lb = std::min(global_lb, lb);
      if (lb < point_min * (1.0 - 1e-9) && (c.b - c.a) > 1e-12) {
        const double mid = 0.5 * (c.a + c.b);
        const double em = energy(mid);
        if (em < point_min) point_min = em;
        next.push_back({c.a, mid, c.ea, em});
        next.push_back({mid, c.b, em, c.eb});
        split_any = true;
      } else {
        next.push_back(c);
      }
    }
    cells.swap(next);
    if (!split_any || global_lb >= point_min * (1.0 - 1e-9)) break;
  }
  double global_lb = point_min;
  for (const auto& c : cells) global_lb = std::min(global_lb, cell_lb(c));

  for (int round = 0; round < 48; ++round) {
    double global_ub = point_max;
    std::vector<EnergyCell> next;
    next.reserve(cells.size());
    bool split_any = false;
    for (const auto& c : cells) {
      const double ub = cell_ub(c);
      global_ub = std::max(global_ub, ub);
      if (ub > point_max * (1.0 + 1e-9) && (c.b - c.a) > 1e-12) {
        const double mid = 0.5 * (c.a + c.b);
        const double em = energy(mid);
        if (em > point_max) point_max = em;
        next.push_back({c.a, mid, c.ea, em});
        next.push_back({mid, c.b, em, c.eb});
        split_any = true;
      } else {
        next.push_back(c);
      }
    }
    cells.swap(next);
    if (!split_any || global_ub <= point_max * (1.0 + 1e-9)) break;
  }
  double global_ub = point_max;
  for (const auto& c : cells) global_ub = std::max(global_ub, cell_ub(c));

  // Dropped periodization tail, added on the upper side only.
  const double tail = 2.0 * std::exp(-2.0 * kPi * kPi * energy.l_max * energy.l_max /
                                     (lambda * lambda));

  FrameBounds fb;
  fb.lambda = lambda;
  fb.mu = (2.0 * kPi / lambda) * std::max(0.0, global_lb);
  fb.big_m = (2.0 * kPi / lambda) * (global_ub + tail);
  fb.omega_grid = grid;
  fb.l_truncation = energy.l_max;
  return fb;
}

FrameCheck frame_inequality_check(const TranslateNetwork& net, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("frame_inequality_check: tol must be > 0");
  FrameCheck check;
  check.mu = frame_bounds(net.lambda(), 4096).mu;
  for (const auto& [k, c] : net.coefficients()) check.coeff_square_sum += c * c;
  if (net.coeff_abs_sum() == 0.0) {
    check.holds = true;
    return check;
  }
  check.l2_squared = l2_norm_squared(net, tol).value;
  check.holds = check.l2_squared >= check.mu * check.coeff_square_sum - tol;
  return check;
}

double l2_norm_squared_periodized(const TranslateNetwork& net, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("l2_norm_squared_periodized: tol must be > 0");
  if (net.coeff_abs_sum() == 0.0) return 0.0;
  const double lambda = net.lambda();
  const int l_max = default_l_truncation(lambda);
  const auto& coeffs = net.coefficients();

  auto integrand = [&](double w) {
    double re = 0.0, im = 0.0;
    for (const auto& [k, c] : coeffs) {
      re += c * std::cos(k * w);
      im += c * std::sin(k * w);
    }
    return periodized_transform_energy(lambda, w, l_max) * (re * re + im * im);
  };
  auto res = integrate_adaptive(integrand, 0.0, 2.0 * kPi, tol * lambda, 200000);
  if (!res.converged)
    throw quadrature_error("l2_norm_squared_periodized: quadrature did not converge");
  return res.value / lambda;
}

}  // namespace turancert
