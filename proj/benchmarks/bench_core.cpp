// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <complex>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "cellsim/channel_model.hpp"
#include "cellsim/joint_processing.hpp"
#include "cellsim/montecarlo.hpp"
#include "cellsim/rng.hpp"
#include "cellsim/scheduling.hpp"

namespace {

using namespace cellsim;

void BM_Exponential(benchmark::State& state) {
  RngStream s(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(s.exponential());
}
BENCHMARK(BM_Exponential);

void BM_Drop(benchmark::State& state) {
  const auto model = static_cast<ChannelModel>(state.range(0));
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const auto n = static_cast<std::size_t>(state.range(1));
  RngStream s(2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(draw_drop(model, g, HataPathLoss{}, LinkBudget{}, n, s));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Drop)->ArgsProduct({{0, 1}, {64, 4096}});

void BM_Schedule(benchmark::State& state) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  RngStream s(3, 3);
  const Drop d = drop_symmetric(g, HataPathLoss{}, LinkBudget{}, static_cast<std::size_t>(state.range(0)), s);
  for (auto _ : state) benchmark::DoNotOptimize(schedule(d, SchedulerKind::max_sinr));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Schedule)->Arg(64)->Arg(4096);

void BM_Waterfilling(benchmark::State& state) {
  const std::vector<double> g = {3.1, 0.4, 1.7};
  for (auto _ : state) benchmark::DoNotOptimize(waterfilling(g, 3.0));
}
BENCHMARK(BM_Waterfilling);

void BM_JpRate(benchmark::State& state) {
  RngStream rng(4, 4);
  ClusterChannel ch;
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      ch.gains(i, j) = std::polar(std::sqrt(rng.exponential()), 2.0 * std::numbers::pi * rng.uniform());
    }
  }
  const std::array<double, 3> beta = {0.5, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(jp_rate(ch, 1.0, beta));
}
BENCHMARK(BM_JpRate);

void BM_RunPoint(benchmark::State& state) {
  ScenarioConfig c;
  c.n_grid = {64};
  c.trials_per_n = 200;
  c.jp_enabled = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_point(c, 64, 1));
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_RunPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
