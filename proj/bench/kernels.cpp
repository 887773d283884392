// Serial reference versus OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "swcwt/reference.hpp"
#include "swcwt/swsh.hpp"
#include "swcwt/wavelet.hpp"

using namespace swcwt;

namespace {

void BM_Synthesize(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const SpinField c = random_field(2, L, 1);
  const SphereGrid grid = SphereGrid::for_band_limit(L);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(c, grid));
}

void BM_SynthesizeReference(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const SpinField c = random_field(2, L, 1);
  const SphereGrid grid = SphereGrid::for_band_limit(L);
  for (auto _ : state) benchmark::DoNotOptimize(reference::synthesize(c, grid));
}

void BM_Analyze(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const GridField g = synthesize(random_field(2, L, 1), SphereGrid::for_band_limit(L));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, L));
}

void BM_AnalyzeReference(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const GridField g = synthesize(random_field(2, L, 1), SphereGrid::for_band_limit(L));
  for (auto _ : state) benchmark::DoNotOptimize(reference::analyze(g, L));
}

struct Setup {
  explicit Setup(int L)
      : family(example_family({}, 2, L)),
        scales(family, 1e-3, 16),
        rotations(SO3Grid::for_band_limit(L)),
        field(random_field(2, L, 1)) {}
  WaveletFamily family;
  ScaleGrid scales;
  SO3Grid rotations;
  SpinField field;
};

void BM_Forward(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cwt_forward(s.field, s.family, s.scales, s.rotations));
}

void BM_ForwardReference(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::cwt_forward(s.field, s.family, s.scales, s.rotations));
}

void BM_Inverse(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Setup s(L);
  const WaveletCoefficients w = cwt_forward(s.field, s.family, s.scales, s.rotations);
  for (auto _ : state) benchmark::DoNotOptimize(cwt_inverse(w, s.family, L));
}

void BM_InverseReference(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Setup s(L);
  const WaveletCoefficients w = cwt_forward(s.field, s.family, s.scales, s.rotations);
  for (auto _ : state) benchmark::DoNotOptimize(reference::cwt_inverse(w, s.family, L));
}

}  // namespace

BENCHMARK(BM_Synthesize)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SynthesizeReference)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Analyze)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeReference)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Forward)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForwardReference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inverse)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseReference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
