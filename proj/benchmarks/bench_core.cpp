#include <benchmark/benchmark.h>

#include "turancert/coefficients.hpp"
#include "turancert/frames.hpp"
#include "turancert/norms.hpp"
#include "turancert/oscillation.hpp"
#include "turancert/witness.hpp"

namespace {

using namespace turancert;

void BM_PlateauCoefficient(benchmark::State& state) {
  int k = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plateau_cosine_coefficient(k));
    k = (k + 7) % 10000;
  }
}
BENCHMARK(BM_PlateauCoefficient);

void BM_CoefficientQuadratureOracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(plateau_cosine_coefficient_quadrature(k, 1e-10));
}
BENCHMARK(BM_CoefficientQuadratureOracle)->Arg(5)->Arg(50)->Arg(200);

void BM_TailBound(benchmark::State& state) {
  int n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_abs_sum_bound(n));
    n = n % 1000 + 1;
  }
}
BENCHMARK(BM_TailBound);

void BM_WitnessEvaluation(benchmark::State& state) {
  const TranslateNetwork net = canonical_witness({0.7, static_cast<int>(state.range(0))});
  double x = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(net(x));
    x += 1e-3;
    if (x > 10.0) x = -10.0;
  }
}
BENCHMARK(BM_WitnessEvaluation)->Arg(8)->Arg(64)->Arg(512);

void BM_SupNormCertification(benchmark::State& state) {
  const TranslateNetwork net = canonical_witness({0.8, 8});
  const double gap = 1e-4 * coarse_sup_estimate(net);
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm(net, gap));
}
BENCHMARK(BM_SupNormCertification)->Unit(benchmark::kMillisecond);

void BM_L2ClosedForm(benchmark::State& state) {
  const TranslateNetwork net = canonical_witness({0.6, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(l2_norm_squared(net, 1e-9));
}
BENCHMARK(BM_L2ClosedForm)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SignedPartIntegrals(benchmark::State& state) {
  const TranslateNetwork net = canonical_witness({0.7, 12});
  const FourierProfile profile = analytic_fourier_transform(net);
  for (auto _ : state)
    benchmark::DoNotOptimize(signed_part_integrals(profile, profile.band_radius(), 1e-9));
}
BENCHMARK(BM_SignedPartIntegrals)->Unit(benchmark::kMillisecond);

void BM_FrameBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(frame_bounds(0.8, 4096));
}
BENCHMARK(BM_FrameBounds)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify(1.0, {1e-4, false, std::nullopt}));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
