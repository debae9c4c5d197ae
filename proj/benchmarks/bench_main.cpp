// Copyright 2026 The risrelay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "risrelay/analytic.hpp"
#include "risrelay/fading.hpp"
#include "risrelay/montecarlo.hpp"
#include "risrelay/optimizer.hpp"
#include "risrelay/schemes.hpp"

namespace {

using namespace risrelay;

ScenarioConfig joint(std::size_t n) {
  ScenarioConfig c;
  c.scheme = Scheme::joint;
  c.layout = {{5, 0}, {5, 10}, Point2{0, 15}, Point2{10, 35}};
  c.elements = n;
  c.k_factor = 10.0;
  c.pathloss = PathLossModel::umi_2_4ghz();
  c.power = ExplicitPowers{5.0, 5.0};
  c.noise_power = 1e-12;
  return c;
}

void BM_DrawRealization(benchmark::State& state) {
  const ScenarioSampler sampler(joint(static_cast<std::size_t>(state.range(0))));
  ChannelRealization real;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sampler.draw(seed++, real);
    benchmark::DoNotOptimize(real.h_sr.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DrawRealization)->RangeMultiplier(4)->Range(64, 4096);

void BM_OptimalGains(benchmark::State& state) {
  const auto cfg = joint(static_cast<std::size_t>(state.range(0)));
  const auto real = draw_scenario(cfg, 1);
  const auto pa = explicit_allocation(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_gains(real, pa, cfg.scheme));
}
BENCHMARK(BM_OptimalGains)->RangeMultiplier(4)->Range(64, 4096);

void BM_BerTrials(benchmark::State& state) {
  SweepPlan plan;
  plan.base = with_snr_db(joint(64), 90.0);
  plan.trials = 4096;
  plan.max_trials = 4096;
  plan.min_error_events = 0;
  plan.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_ber(plan));
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_BerTrials)->Unit(benchmark::kMillisecond);

void BM_SepQuadrature(benchmark::State& state) {
  const auto cfg = with_snr_db(joint(64), 90.0);
  const Mgf m = total_snr_mgf(cfg, explicit_allocation(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(sep_mpsk(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SepQuadrature)->Arg(2)->Arg(8);

void BM_SolvePowerSplit(benchmark::State& state) {
  const ArmCoefficients c{1.7e9, 2.3e9, 0.0};
  double pt = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_power_split(c, pt, Scheme::joint));
    pt = pt == 5.0 ? 5.5 : 5.0;
  }
}
BENCHMARK(BM_SolvePowerSplit);

void BM_GridSearchPowerSplit(benchmark::State& state) {
  const ArmCoefficients c{1.7e9, 2.3e9, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(grid_search_power_split(c, 5.0, Scheme::joint));
}
BENCHMARK(BM_GridSearchPowerSplit);

}  // namespace

BENCHMARK_MAIN();
