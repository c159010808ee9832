#pragma once

#include <vector>

namespace turancert {

// Parameters shared by the translate-network constructions: the node spacing
// and the truncation order of the coefficient series.
struct ShiftParameters {
  double lambda = 1.0;  // translation spacing, > 0
  int order = 1;        // truncation order n, >= 1

  void validate() const;  // throws std::invalid_argument on violation
};

// Table of the Fourier cosine coefficients a_0..a_n of the plateau function,
// immutable after construction.
class CoefficientTable {
 public:
  explicit CoefficientTable(int max_index);

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  double operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Even 2pi-periodic plateau: 1 on |x| <= pi/2, sin^2(x) on the shoulders
// pi/2 < |x| <= pi.
double plateau(double x);

// Fourier cosine coefficient a_k of the plateau function, in closed form:
// a_0 = 3/4, a_1 = 4/(3 pi), a_2 = -1/4, and for k >= 3
// a_k = -4 sin(k pi/2) / (pi k (k^2 - 4)); zero for even k >= 4.
double plateau_cosine_coefficient(int k);

// Independent check of the closed form: computes the same coefficient by
// adaptive quadrature of the defining integral, with absolute error below
// tol. Throws quadrature_error on nonconvergence.
double plateau_cosine_coefficient_quadrature(int k, double tol);

// Rigorous upper bound for the absolute coefficient tail sum over k > n:
// min(1/n, explicit partial tail up to 10^6 plus the 1/10^6 remainder).
double tail_abs_sum_bound(int n);

// Cutoff used by the explicit partial tail in tail_abs_sum_bound.
inline constexpr int kTailCutoff = 1000000;

// Aggregates of the Gaussian-weighted coefficient series at spacing lambda.
// `centering` is -sum_{k=1..n} a_k exp(-(lambda k)^2); the canonical witness
// uses 2*centering as its center weight so that it vanishes at the origin.
// `series_value` = a_0 - centering = sum_{k=0..n} a_k exp(-(lambda k)^2).
struct WeightedCoefficientSums {
  double centering = 0.0;
  double series_value = 0.0;
};

// Accepts order >= 0 (order 0 is the empty sum: centering 0, series 3/4).
WeightedCoefficientSums weighted_coefficient_sums(double lambda, int order);

// Partial sums used by the self-check audit.
double coefficient_abs_sum(int up_to);     // sum_{k=1..up_to} |a_k|
double coefficient_square_sum(int up_to);  // sum_{k=1..up_to} a_k^2

}  // namespace turancert
