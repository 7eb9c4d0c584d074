#include <benchmark/benchmark.h>

#include <cstdint>

#include "vsi/model_signals.hpp"
#include "vsi/shock_metrics.hpp"

namespace {

vsi::Signal noise(std::int64_t n) {
  return vsi::gen_wgn(1.0, 50000.0, static_cast<double>(n) / 50000.0, 7);
}

void BM_Cumulative(benchmark::State& state) {
  const auto s = noise(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsi::cumulative_energy_analysis(s));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Cumulative)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_Wms(benchmark::State& state) {
  const auto s = noise(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsi::wms_analysis(s, 2.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Wms)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_Kurtosis(benchmark::State& state) {
  const auto p = vsi::power_signal(noise(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsi::excess_kurtosis(p));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Kurtosis)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_EnergyStep(benchmark::State& state) {
  const auto s = noise(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsi::energy_step(s));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnergyStep)->RangeMultiplier(10)->Range(10000, 1000000);

void BM_PulseTrain(benchmark::State& state) {
  const vsi::PulseTrainParams params{100.0, 0.1, 3.58e-6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsi::gen_pulse_train(params, 50000.0, 10.0));
  }
}
BENCHMARK(BM_PulseTrain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
