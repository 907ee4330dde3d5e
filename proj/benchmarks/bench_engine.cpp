// Copyright 2026 The clickhd Authors
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

#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "clickhd/click_engine.hpp"
#include "clickhd/homodyne.hpp"
#include "clickhd/imperfections.hpp"
#include "clickhd/sampler.hpp"
#include "clickhd/witnesses.hpp"

namespace {

using namespace clickhd;

ArmDescriptor unbalanced(int n) {
  return unbalanced_arm(BeamSplitter(0.8, 0.6), {Complex{0.0, 4.0}}, DetectorConfig(n, 0.5));
}

void BM_ClickStatistics(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  const auto arm = unbalanced(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(click_statistics(cat, arm));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClickStatistics)->RangeMultiplier(2)->Range(2, 256)->Complexity();

void BM_ClickStatisticsByExpansion(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  const std::vector<ArmDescriptor> arms = {unbalanced(static_cast<int>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(joint_click_statistics_by_expansion(cat, arms));
}
BENCHMARK(BM_ClickStatisticsByExpansion)->RangeMultiplier(2)->Range(2, 16);

void BM_JointEightPort(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  const auto arms = eight_port_arms({4.0}, DetectorConfig(static_cast<int>(state.range(0)), 0.5)).descriptors();
  for (auto _ : state) benchmark::DoNotOptimize(joint_click_statistics(cat, arms));
}
BENCHMARK(BM_JointEightPort)->Arg(2)->Arg(4)->Arg(8);

void BM_PiMoment(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  const std::vector<ArmDescriptor> arms = {unbalanced(8)};
  const int powers[1] = {static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(pi_moment(cat, arms, powers));
}
BENCHMARK(BM_PiMoment)->DenseRange(1, 8, 1);

void BM_VarianceSweep(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  const auto arm = unbalanced(8);
  for (auto _ : state) {
    double sum = 0.0;
    for (int i = 0; i < 256; ++i) sum += variance_criterion(cat, arm, 2.0 * std::numbers::pi * i / 256).value;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_VarianceSweep);

void BM_TwoModeGrid(benchmark::State& state) {
  const auto cat = make_two_mode_cat(1.0, Parity::even);
  const auto arms = two_mode_arms({4.0}, {4.0}, DetectorConfig(8, 0.5));
  for (auto _ : state) {
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) sum += two_mode_criteria(cat, arms, 0.4 * i, 0.3 * i).covariance.value;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_TwoModeGrid);

void BM_ThermalQuadrature(benchmark::State& state) {
  const auto cat = make_cat(1.0, Parity::even);
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermal_lo_expectation_quadrature(cat, 0.3, {0.0, 2.0}, 0.5, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ThermalQuadrature)->Arg(16)->Arg(64);

void BM_Sample(benchmark::State& state) {
  const auto distribution = click_statistics(make_cat(1.0, Parity::even), unbalanced(8));
  for (auto _ : state) benchmark::DoNotOptimize(sample(distribution, static_cast<std::uint64_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(10000)->Arg(1000000);

}  // namespace
BENCHMARK_MAIN();
