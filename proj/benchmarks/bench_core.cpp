#include <benchmark/benchmark.h>

#include <random>

#include "linecast/dataset.hpp"
#include "linecast/prob_model.hpp"
#include "linecast/rng.hpp"
#include "linecast/simulator.hpp"

namespace {

using namespace linecast;

void BM_PoissonBinomial(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(state.range(0)));
  for (auto& x : p) x = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_binomial(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonBinomial)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_UniformAt(benchmark::State& state) {
  std::uint32_t g = 0;
  for (auto _ : state) benchmark::DoNotOptimize(uniform_at(7, 3, g++));
}
BENCHMARK(BM_UniformAt);

SeasonSchedule full_season() {
  // 32 teams, 16 games each: team i hosts i+1..i+8 (mod 32).
  SeasonSchedule s;
  s.season = 2011;
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.2, 0.8);
  std::uint32_t idx = 0;
  for (int i = 0; i < 32; ++i) {
    for (int k = 1; k <= 8; ++k) {
      s.entries.push_back({idx++, TeamId{"T" + std::to_string(i)}, TeamId{"T" + std::to_string((i + k) % 32)},
                           u(rng), std::nullopt});
    }
  }
  return s;
}

void BM_SimulateSeason(benchmark::State& state) {
  const auto schedule = full_season();
  const SimulationOptions options{.replications = 1000,
                                  .seed = 42,
                                  .threads = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(simulate(schedule, options));
  state.SetItemsProcessed(state.iterations() * 1000 * 256);
}
BENCHMARK(BM_SimulateSeason)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ParseGames(benchmark::State& state) {
  const auto text = read_text_file(LINECAST_BENCH_DATA);
  for (auto _ : state) benchmark::DoNotOptimize(parse_games(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseGames);

}  // namespace

BENCHMARK_MAIN();
