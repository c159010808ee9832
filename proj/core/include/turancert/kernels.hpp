#pragma once

#include <utility>
#include <vector>

#include "turancert/coefficients.hpp"

namespace turancert {

// Gaussian base function exp(-x^2) and relatives.
double gaussian(double x);
double gaussian_derivative(double x);      // -2x exp(-x^2)
double gaussian_hat(double omega);         // (1/sqrt(2)) exp(-omega^2/4)
double gaussian_derivative_sup();          // sqrt(2) e^{-1/2}, attained at 1/sqrt(2)
inline constexpr double kGaussianSecondDerivativeSup = 2.0;  // attained at 0

// Fejer kernel h(x) = (1/sqrt(2pi)) (sin(x/2)/(x/2))^2 and its triangle
// transform. fejer_scaled(r, t) = r h(rt).
double fejer(double x);
double fejer_hat(double omega);  // max(1 - |omega|, 0)
double fejer_scaled(double r, double t);

// Finite sum of Gaussian translates sum_k c_k exp(-(x - lambda k)^2).
// Immutable value type; evaluation windows out translates whose contribution
// underflows.
class TranslateNetwork {
 public:
  using Coefficients = std::vector<std::pair<int, double>>;  // sorted by index

  TranslateNetwork(double lambda, Coefficients coefficients);

  double lambda() const { return lambda_; }
  const Coefficients& coefficients() const { return coeffs_; }
  double coefficient(int k) const;  // 0 when absent

  double coeff_abs_sum() const { return abs_sum_; }
  int max_abs_index() const { return max_abs_index_; }

  double operator()(double x) const;
  double derivative(double x) const;

  TranslateNetwork scaled(double factor) const;

 private:
  double lambda_;
  Coefficients coeffs_;
  double abs_sum_ = 0.0;
  int max_abs_index_ = 0;
};

// The witness network of the certification pipeline: center weight twice the
// centering sum, symmetric coefficients a_k at indices +-k for k = 1..order.
// Vanishes at the origin by construction.
TranslateNetwork canonical_witness(const ShiftParameters& params);

// Cosine-series factor of the canonical witness transform:
// sum_{k=1..order} a_k (cos(k lambda omega) - exp(-(lambda k)^2)).
double trig_factor(const ShiftParameters& params, double omega);

// Analytic Fourier transform of a translate network, with the convention
// f_hat(w) = (1/sqrt(2pi)) int f(x) e^{-iwx} dx. The transform factors as
// gaussian_hat(w) * sum_k c_k e^{-ik lambda w}; it is real iff the
// coefficients are symmetric.
class FourierProfile {
 public:
  FourierProfile(double lambda, TranslateNetwork::Coefficients coefficients);

  double operator()(double omega) const;  // real part
  double imag_part(double omega) const;
  bool is_real() const;

  // |profile| < band_epsilon() outside [-band_radius(), band_radius()].
  double band_radius() const { return band_radius_; }
  static constexpr double band_epsilon() { return 1e-15; }

  // Scan resolution for sign-change isolation, tied to the top harmonic.
  double scan_step() const { return scan_step_; }
  double lambda() const { return lambda_; }
  double coeff_abs_sum() const { return abs_sum_; }

 private:
  double lambda_;
  TranslateNetwork::Coefficients coeffs_;
  double abs_sum_ = 0.0;
  double band_radius_ = 0.0;
  double scan_step_ = 0.0;
};

FourierProfile analytic_fourier_transform(const TranslateNetwork& net);

}  // namespace turancert
