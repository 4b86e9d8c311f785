#include <benchmark/benchmark.h>

#include "tfa/amalgam.hpp"
#include "tfa/factor.hpp"
#include "tfa/fourier.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/timefreq.hpp"
#include "tfa/twist.hpp"
#include "tfa/weyl.hpp"

using namespace tfa;

namespace {

void BM_Fourier(benchmark::State& state) {
  const GridSpec grid = make_grid(1, static_cast<int>(state.range(0)), 16);
  Rng rng(1);
  const SampledField f = random_field(grid, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_Fourier)->Arg(4)->Arg(16)->Arg(64);

void BM_AmalgamNorm(benchmark::State& state) {
  const GridSpec grid = make_grid(1, static_cast<int>(state.range(0)), 16);
  Rng rng(2);
  const SampledField f = random_field(grid, rng);
  const AmalgamSpace s = AmalgamSpace::make(2.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(amalgam_norm(f, s));
}
BENCHMARK(BM_AmalgamNorm)->Arg(4)->Arg(16)->Arg(64);

void BM_Stft(benchmark::State& state) {
  const GridSpec grid = make_grid(1, static_cast<int>(state.range(0)), 16);
  const SampledField f = gaussian(grid, 1.0, 0.5, 2.0);
  const SampledField w = gaussian_window(grid);
  for (auto _ : state) benchmark::DoNotOptimize(stft(f, w));
}
BENCHMARK(BM_Stft)->Arg(2)->Arg(4)->Arg(8);

void BM_WeylSvd(benchmark::State& state) {
  const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, static_cast<int>(state.range(0)), 8));
  Rng rng(3);
  const PhaseField a = random_smooth_symbol(carrier, rng);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(op_matrix(a, Quantization::weyl)));
}
BENCHMARK(BM_WeylSvd)->Arg(2)->Arg(4)->Arg(8);

void BM_TwistedConvolve(benchmark::State& state) {
  const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, 2, static_cast<int>(state.range(0))));
  Rng rng(4);
  const PhaseField a = random_smooth_symbol(carrier, rng), b = random_smooth_symbol(carrier, rng);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_convolve(a, b));
}
BENCHMARK(BM_TwistedConvolve)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HewittConv(benchmark::State& state) {
  ConvConfig cfg;
  cfg.grid = make_grid(1, static_cast<int>(state.range(0)), 8);
  const ConvCtx ctx(cfg);
  const SampledField f = gaussian(cfg.grid);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  for (auto _ : state) benchmark::DoNotOptimize(hewitt_factorize(ctx, f, opt));
}
BENCHMARK(BM_HewittConv)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
