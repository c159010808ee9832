#include "turancert/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;

// Translates further than this from the evaluation point are exact zeros in
// 64-bit arithmetic relative to every tolerance in the toolkit.
constexpr double kEvalWindow = 9.0;

}  // namespace

double gaussian(double x) { return std::exp(-x * x); }

double gaussian_derivative(double x) { return -2.0 * x * std::exp(-x * x); }

double gaussian_hat(double omega) {
  return std::exp(-omega * omega / 4.0) / std::numbers::sqrt2;
}

double gaussian_derivative_sup() {
  static const double value = std::numbers::sqrt2 * std::exp(-0.5);
  return value;
}

double fejer(double x) {
  static const double norm = 1.0 / std::sqrt(2.0 * kPi);
  const double u = 0.5 * x;
  double sinc;
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    sinc = 1.0 - u2 / 6.0 + u2 * u2 / 120.0;  // sinc^2 loses precision near 0
  } else {
    sinc = std::sin(u) / u;
  }
  return norm * sinc * sinc;
}

double fejer_hat(double omega) { return std::max(1.0 - std::abs(omega), 0.0); }

double fejer_scaled(double r, double t) {
  if (!(r > 0.0)) throw std::invalid_argument("fejer_scaled: r must be > 0");
  return r * fejer(r * t);
}

TranslateNetwork::TranslateNetwork(double lambda, Coefficients coefficients)
    : lambda_(lambda), coeffs_(std::move(coefficients)) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("TranslateNetwork: lambda must be positive and finite");
  std::sort(coeffs_.begin(), coeffs_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i].first == coeffs_[i - 1].first)
      throw std::invalid_argument("TranslateNetwork: duplicate shift index");
  for (const auto& [k, c] : coeffs_) {
    abs_sum_ += std::abs(c);
    max_abs_index_ = std::max(max_abs_index_, std::abs(k));
  }
}

double TranslateNetwork::coefficient(int k) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), k,
                             [](const auto& p, int key) { return p.first < key; });
  return (it != coeffs_.end() && it->first == k) ? it->second : 0.0;
}

double TranslateNetwork::operator()(double x) const {
  const int lo = static_cast<int>(std::floor((x - kEvalWindow) / lambda_));
  const int hi = static_cast<int>(std::ceil((x + kEvalWindow) / lambda_));
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), lo,
                             [](const auto& p, int key) { return p.first < key; });
  double acc = 0.0;
  for (; it != coeffs_.end() && it->first <= hi; ++it) {
    const double u = x - lambda_ * static_cast<double>(it->first);
    acc += it->second * std::exp(-u * u);
  }
  return acc;
}

double TranslateNetwork::derivative(double x) const {
  const int lo = static_cast<int>(std::floor((x - kEvalWindow) / lambda_));
  const int hi = static_cast<int>(std::ceil((x + kEvalWindow) / lambda_));
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), lo,
                             [](const auto& p, int key) { return p.first < key; });
  double acc = 0.0;
  for (; it != coeffs_.end() && it->first <= hi; ++it) {
    const double u = x - lambda_ * static_cast<double>(it->first);
    acc += it->second * (-2.0 * u) * std::exp(-u * u);
  }
  return acc;
}

TranslateNetwork TranslateNetwork::scaled(double factor) const {
  Coefficients scaled = coeffs_;
  for (auto& [k, c] : scaled) c *= factor;
  return TranslateNetwork(lambda_, std::move(scaled));
}

TranslateNetwork canonical_witness(const ShiftParameters& params) {
  params.validate();
  const auto sums = weighted_coefficient_sums(params.lambda, params.order);
  TranslateNetwork::Coefficients coeffs;
  coeffs.reserve(2 * static_cast<std::size_t>(params.order) + 1);
  for (int k = params.order; k >= 1; --k) {
    const double a = plateau_cosine_coefficient(k);
    if (a == 0.0) continue;
    coeffs.emplace_back(-k, a);
    coeffs.emplace_back(k, a);
  }
  coeffs.emplace_back(0, 2.0 * sums.centering);
  return TranslateNetwork(params.lambda, std::move(coeffs));
}

double trig_factor(const ShiftParameters& params, double omega) {
  params.validate();
  double acc = 0.0;
  for (int k = params.order; k >= 1; --k) {
    const double a = plateau_cosine_coefficient(k);
    if (a == 0.0) continue;
    const double lk = params.lambda * static_cast<double>(k);
    acc += a * (std::cos(lk * omega) - std::exp(-lk * lk));
  }
  return acc;
}

FourierProfile::FourierProfile(double lambda, TranslateNetwork::Coefficients coefficients)
    : lambda_(lambda), coeffs_(std::move(coefficients)) {
  int top = 0;
  for (const auto& [k, c] : coeffs_) {
    abs_sum_ += std::abs(c);
    top = std::max(top, std::abs(k));
  }
  if (abs_sum_ > 0.0) {
    // gaussian_hat(R) * abs_sum < band_epsilon
    band_radius_ = 2.0 * std::sqrt(std::max(
        0.0, std::log(abs_sum_ / (std::numbers::sqrt2 * band_epsilon()))));
  }
  scan_step_ = lambda_ * kPi / (64.0 * static_cast<double>(std::max(1, top)));
}

double FourierProfile::operator()(double omega) const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs_)
    acc += c * std::cos(static_cast<double>(k) * lambda_ * omega);
  return gaussian_hat(omega) * acc;
}

double FourierProfile::imag_part(double omega) const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs_)
    acc += c * std::sin(static_cast<double>(k) * lambda_ * omega);
  return -gaussian_hat(omega) * acc;
}

bool FourierProfile::is_real() const {
  const double tol = 1e-12 * std::max(1.0, abs_sum_);
  auto sorted = coeffs_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto lookup = [&sorted](int k) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), k,
                               [](const auto& p, int key) { return p.first < key; });
    return (it != sorted.end() && it->first == k) ? it->second : 0.0;
  };
  for (const auto& [k, c] : sorted) {
    if (k <= 0) continue;
    if (std::abs(c - lookup(-k)) > tol) return false;
  }
  for (const auto& [k, c] : sorted) {
    if (k >= 0) continue;
    if (std::abs(c - lookup(-k)) > tol) return false;
  }
  return true;
}

FourierProfile analytic_fourier_transform(const TranslateNetwork& net) {
  return FourierProfile(net.lambda(), net.coefficients());
}

}  // namespace turancert
