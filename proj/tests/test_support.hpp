#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "turancert/kernels.hpp"

namespace turancert::test {

// Brute-force sup of |P| (or |P'|) on a uniform grid. The Gaussian values
// along the grid follow a two-term multiplicative recurrence, re-seeded every
// chunk so drift and underflow stay out of the picture.
inline double dense_grid_sup(const TranslateNetwork& net, double radius, std::int64_t points,
                             bool derivative = false) {
  const double step = 2.0 * radius / static_cast<double>(points - 1);
  const double decay = std::exp(-2.0 * step * step);
  constexpr std::int64_t kChunk = 8192;

  std::vector<double> acc(static_cast<std::size_t>(kChunk));
  double best = 0.0;
  for (std::int64_t start = 0; start < points; start += kChunk) {
    const std::int64_t len = std::min(kChunk, points - start);
    std::fill(acc.begin(), acc.begin() + static_cast<std::size_t>(len), 0.0);
    const double x0 = -radius + step * static_cast<double>(start);
    for (const auto& [k, c] : net.coefficients()) {
      const double u0 = x0 - net.lambda() * static_cast<double>(k);
      double value = std::exp(-u0 * u0);
      double ratio = std::exp(-(2.0 * u0 * step + step * step));
      double u = u0;
      for (std::int64_t j = 0; j < len; ++j) {
        acc[static_cast<std::size_t>(j)] += derivative ? c * (-2.0 * u) * value : c * value;
        value *= ratio;
        ratio *= decay;
        u += step;
      }
    }
    for (std::int64_t j = 0; j < len; ++j)
      best = std::max(best, std::abs(acc[static_cast<std::size_t>(j)]));
  }
  return best;
}

// Deterministic random networks for property tests.
inline TranslateNetwork random_network(double lambda, int max_index, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  TranslateNetwork::Coefficients coeffs;
  coeffs.reserve(2 * static_cast<std::size_t>(max_index) + 1);
  for (int k = -max_index; k <= max_index; ++k) coeffs.emplace_back(k, coeff(rng));
  return TranslateNetwork(lambda, std::move(coeffs));
}

}  // namespace turancert::test
