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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "clickhd/errors.hpp"
#include "clickhd/homodyne.hpp"
#include "clickhd/sampler.hpp"
#include "clickhd/witnesses.hpp"

namespace clickhd {
namespace {

ArmDescriptor figure4_arm() {
  auto arm = unbalanced_arm(BeamSplitter(0.8, 0.6), {4.0}, DetectorConfig(8, 0.5));
  arm.displacement = std::polar(std::abs(arm.displacement), std::numbers::pi / 2);
  return arm;
}

TEST(Sample, DeltaDistribution) {
  const ClickDistribution delta({4}, {0.0, 0.0, 1.0, 0.0, 0.0});
  const auto h = sample(delta, 1000, 7);
  EXPECT_EQ(h.shots(), 1000u);
  EXPECT_EQ(h.counts()[2], 1000u);
}

TEST(Sample, UniformWithinFiveSigma) {
  const ClickDistribution uniform({3, 1}, std::vector<double>(8, 0.125));
  const std::uint64_t shots = 80000;
  const auto h = sample(uniform, shots, 11);
  const double sigma = std::sqrt(shots * 0.125 * 0.875);
  for (auto c : h.counts()) EXPECT_LT(std::abs(static_cast<double>(c) - 10000.0), 5 * sigma);
}

TEST(Sample, SeedDeterminism) {
  const auto dist = click_statistics(make_cat(1.0, Parity::even), figure4_arm());
  EXPECT_EQ(sample(dist, 5000, 3), sample(dist, 5000, 3));
  EXPECT_NE(sample(dist, 5000, 3), sample(dist, 5000, 4));
}

TEST(Histogram, Validation) {
  EXPECT_THROW(ClickHistogram({2}, {1, 2}), InvalidArgument);
  EXPECT_THROW(ClickHistogram({2}, {0, 0, 0}).frequencies(), InvalidArgument);
  const ClickHistogram h({2}, {1, 2, 1});
  EXPECT_DOUBLE_EQ(h.frequencies().probabilities()[1], 0.5);
}

TEST(Estimate, SaturatedHistogramHasNoSpread) {
  std::vector<std::uint64_t> counts(9, 0);
  counts[8] = 500;
  const ClickHistogram h({8}, counts);
  for (int m = 0; m <= 3; ++m) {
    const int powers[1] = {m};
    const auto e = estimate_moments(h, powers);
    EXPECT_NEAR(e.value, std::pow(8.0, m), 1e-9);
    EXPECT_EQ(e.standard_error, 0.0);
  }
}

TEST(Estimate, ExactFrequenciesReproduceMoments) {
  const auto cat = make_cat(1.0, Parity::even);
  const auto arm = figure4_arm();
  const auto dist = click_statistics(cat, arm);
  std::vector<std::uint64_t> counts;
  for (double p : dist.probabilities()) counts.push_back(static_cast<std::uint64_t>(std::llround(p * 1e12)));
  const ClickHistogram h(dist.sizes(), counts);
  const std::vector<ArmDescriptor> arms = {arm};
  for (int m = 1; m <= 2; ++m) {
    const int powers[1] = {m};
    EXPECT_NEAR(estimate_moments(h, powers, {20, 1}).value, pi_moment(cat, arms, powers), 1e-9);
  }
}

TEST(Estimate, StandardErrorShrinksWithShots) {
  const auto cat = make_cat(1.0, Parity::even);
  const auto dist = click_statistics(cat, figure4_arm());
  const auto statistic = [](const ClickDistribution& c) {
    return variance_value(StatisticsMoments(c));
  };
  const double small = estimate_statistic(sample(dist, 10000, 5), statistic).standard_error;
  const double large = estimate_statistic(sample(dist, 1000000, 5), statistic).standard_error;
  EXPECT_NEAR(small / large, 10.0, 3.0);
}

TEST(Estimate, BootstrapIsSeeded) {
  const auto dist = click_statistics(make_cat(1.0, Parity::odd), figure4_arm());
  const auto h = sample(dist, 20000, 9);
  const int powers[1] = {2};
  const auto a = estimate_moments(h, powers, {100, 42});
  const auto b = estimate_moments(h, powers, {100, 42});
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_GT(a.standard_error, 0.0);
}

}  // namespace
}  // namespace clickhd
