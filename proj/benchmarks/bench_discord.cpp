// Copyright 2026 The superdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "superdiscord/discord.hpp"
#include "superdiscord/families.hpp"

namespace {

using namespace superdiscord;

void BM_WeakConditionalEntropy(benchmark::State& state) {
  const DensityMatrix rho = random_state(3);
  const QubitBasis basis(0.7, 1.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_conditional_entropy(rho, basis, Strength(0.5)));
  }
}
BENCHMARK(BM_WeakConditionalEntropy);

void BM_Minimize(benchmark::State& state) {
  const DensityMatrix rho = random_state(3);
  OptimizerConfig cfg;
  cfg.grid_gamma = cfg.grid_delta = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_conditional_entropy(rho, Strength(0.5), cfg));
  }
}
BENCHMARK(BM_Minimize)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_DiscordReport(benchmark::State& state) {
  const DensityMatrix rho = random_state(3);
  OptimizerConfig cfg;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord_report(rho, Strength(0.5), cfg));
  }
}
BENCHMARK(BM_DiscordReport)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
