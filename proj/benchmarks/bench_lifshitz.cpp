#include "cpkit/constants.hpp"
#include "cpkit/lifshitz.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace cpkit;

namespace {

const WallModel kGold = WallModel::plasma(units::ev_to_rad_per_s(9.0));
const WallModel kSilicon = WallModel::dielectric_oscillator(11.66, units::ev_to_rad_per_s(4.34));

void BM_MatsubaraFreeEnergy(benchmark::State& state) {
  const Scene scene(static_cast<double>(state.range(0)) * 1e-9, 300.0);
  const auto he = metastable_helium();
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_energy(scene, kGold, he).value);
  }
}
BENCHMARK(BM_MatsubaraFreeEnergy)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MatsubaraThreads(benchmark::State& state) {
  const Scene scene(50e-9, 300.0);
  const auto he = metastable_helium();
  LifshitzOptions o;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_energy(scene, kSilicon, he, o).value);
  }
}
BENCHMARK(BM_MatsubaraThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZeroTemperatureEnergy(benchmark::State& state) {
  const auto he = metastable_helium();
  const double a = static_cast<double>(state.range(0)) * 1e-9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zero_temperature_energy(a, kGold, he).value);
  }
}
BENCHMARK(BM_ZeroTemperatureEnergy)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KramersKronig(benchmark::State& state) {
  const double wp = units::ev_to_rad_per_s(9.0);
  const double gamma = units::ev_to_rad_per_s(0.035);
  std::vector<OpticalSample> rows;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 2.0 * gamma * std::pow(1e4, static_cast<double>(i) / static_cast<double>(n - 1));
    rows.push_back({w, wp * wp * gamma / (w * (w * w + gamma * gamma))});
  }
  const OpticalTable table(rows);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kramers_kronig(table, wp, LowFrequencyTail::Metal));
  }
}
BENCHMARK(BM_KramersKronig)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
