#include "turancert/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "turancert/errors.hpp"
#include "turancert/quadrature.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;

// Suffix sums S[n] = sum_{k=n+1..kTailCutoff} |a_k|, built once.
const std::vector<double>& tail_suffix_table() {
  static const std::vector<double> table = [] {
    std::vector<double> s(static_cast<std::size_t>(kTailCutoff) + 1, 0.0);
    double acc = 0.0;
    for (int k = kTailCutoff; k >= 1; --k) {
      s[static_cast<std::size_t>(k) - 1] = acc += std::abs(plateau_cosine_coefficient(k));
    }
    return s;
  }();
  return table;
}

}  // namespace

void ShiftParameters::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("ShiftParameters: lambda must be positive and finite");
  if (order < 1) throw std::invalid_argument("ShiftParameters: order must be >= 1");
}

CoefficientTable::CoefficientTable(int max_index) {
  if (max_index < 0) throw std::invalid_argument("CoefficientTable: max_index must be >= 0");
  values_.reserve(static_cast<std::size_t>(max_index) + 1);
  for (int k = 0; k <= max_index; ++k) values_.push_back(plateau_cosine_coefficient(k));
}

double plateau(double x) {
  const double m = std::remainder(x, 2.0 * kPi);  // in [-pi, pi]
  if (std::abs(m) <= kPi / 2.0) return 1.0;
  const double s = std::sin(m);
  return s * s;
}

double plateau_cosine_coefficient(int k) {
  if (k < 0) throw std::invalid_argument("plateau_cosine_coefficient: k must be >= 0");
  switch (k) {
    case 0: return 0.75;
    case 1: return 4.0 / (3.0 * kPi);
    case 2: return -0.25;
    default: break;
  }
  if (k % 2 == 0) return 0.0;
  const double kd = static_cast<double>(k);
  const double magnitude = 4.0 / (kPi * kd * (kd * kd - 4.0));
  return (k % 4 == 1) ? -magnitude : magnitude;
}

double plateau_cosine_coefficient_quadrature(int k, double tol) {
  if (k < 0) throw std::invalid_argument("plateau_cosine_coefficient_quadrature: k must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("plateau_cosine_coefficient_quadrature: tol must be > 0");

  // (2/pi) int_0^pi plateau(x) cos(kx) dx for k >= 1, (1/pi) int for k = 0.
  // The integrand is evenly split at the branch kink pi/2.
  const double scale = (k == 0) ? 1.0 / kPi : 2.0 / kPi;
  auto integrand = [k](double x) { return plateau(x) * std::cos(k * x); };
  auto left = integrate_adaptive(integrand, 0.0, kPi / 2.0, tol / (2.0 * scale));
  auto right = integrate_adaptive(integrand, kPi / 2.0, kPi, tol / (2.0 * scale));
  if (!left.converged || !right.converged)
    throw quadrature_error("plateau coefficient quadrature did not reach tolerance");
  return scale * (left.value + right.value);
}

double tail_abs_sum_bound(int n) {
  if (n < 1) throw std::invalid_argument("tail_abs_sum_bound: n must be >= 1");
  const double harmonic = 1.0 / static_cast<double>(n);
  if (n >= kTailCutoff) return harmonic;
  const double explicit_tail =
      tail_suffix_table()[static_cast<std::size_t>(n)] + 1.0 / static_cast<double>(kTailCutoff);
  return std::min(harmonic, explicit_tail);
}

WeightedCoefficientSums weighted_coefficient_sums(double lambda, int order) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weighted_coefficient_sums: lambda must be > 0");
  if (order < 0) throw std::invalid_argument("weighted_coefficient_sums: order must be >= 0");
  double acc = 0.0;
  for (int k = order; k >= 1; --k) {
    const double a = plateau_cosine_coefficient(k);
    if (a == 0.0) continue;
    const double lk = lambda * static_cast<double>(k);
    acc += a * std::exp(-lk * lk);
  }
  return {-acc, 0.75 + acc};
}

double coefficient_abs_sum(int up_to) {
  double acc = 0.0;
  for (int k = up_to; k >= 1; --k) acc += std::abs(plateau_cosine_coefficient(k));
  return acc;
}

double coefficient_square_sum(int up_to) {
  double acc = 0.0;
  for (int k = up_to; k >= 1; --k) {
    const double a = plateau_cosine_coefficient(k);
    acc += a * a;
  }
  return acc;
}

}  // namespace turancert
