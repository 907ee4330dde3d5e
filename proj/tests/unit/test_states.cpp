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
#include "clickhd/state.hpp"
#include "clickhd/states.hpp"
#include "oracles.hpp"

namespace clickhd {
namespace {

TEST(Overlap, ModulusSquaredIsGaussian) {
  const Complex a{0.3, -1.2}, b{-0.7, 0.4};
  EXPECT_NEAR(std::norm(overlap(a, b)), std::exp(-std::norm(a - b)), 1e-14);
  EXPECT_NEAR(std::abs(overlap(a, a) - 1.0), 0.0, 1e-15);
}

TEST(Overlap, FarApartIsExactlyZero) { EXPECT_EQ(overlap(0.0, 40.0), Complex{}); }

TEST(Cat, NormalizationConstant) {
  for (double alpha : {0.1, 0.5, 1.0, 2.0}) {
    for (auto parity : {Parity::even, Parity::odd}) {
      const auto cat = make_cat(alpha, parity);
      EXPECT_NEAR(cat.norm(), 1.0, 1e-12);
      const double sign = parity == Parity::even ? 1.0 : -1.0;
      const double expected = 1.0 / std::sqrt(2.0 * (1.0 + sign * std::exp(-2.0 * alpha * alpha)));
      EXPECT_NEAR(std::abs(cat.terms()[0].coefficient), expected, 1e-12);
    }
  }
}

TEST(Cat, OddAtOriginIsDegenerate) {
  EXPECT_THROW(make_cat(0.0, Parity::odd), DegenerateState);
  EXPECT_THROW(make_two_mode_cat(0.0, Parity::odd), DegenerateState);
  EXPECT_NO_THROW(make_cat(0.0, Parity::even));
}

TEST(Cat, PhotonParity) {
  const auto even = testing::dense_state(make_cat(1.3, Parity::even), 40);
  const auto odd = testing::dense_state(make_cat(1.3, Parity::odd), 40);
  const auto pe = testing::photon_distribution(even);
  const auto po = testing::photon_distribution(odd);
  for (std::size_t n = 1; n < pe.size(); n += 2) EXPECT_LT(pe[n], 1e-28);
  for (std::size_t n = 0; n < po.size(); n += 2) EXPECT_LT(po[n], 1e-28);
}

TEST(CoherentSuperposition, RejectsBadInput) {
  EXPECT_THROW(CoherentSuperposition::normalized(1, {}), InvalidArgument);
  EXPECT_THROW(CoherentSuperposition::normalized(0, {{1.0, {}}}), InvalidArgument);
  EXPECT_THROW(CoherentSuperposition::normalized(2, {{1.0, {0.5}}}), InvalidArgument);
  EXPECT_THROW(CoherentSuperposition::normalized(1, {{1.0, {std::nan("")}}}), InvalidArgument);
  EXPECT_THROW(CoherentSuperposition::normalized(1, {{1.0, {0.5}}, {-1.0, {0.5}}}), DegenerateState);
}

TEST(CoherentSuperposition, ScaledMultipliesAmplitudes) {
  const auto s = make_cat(1.0, Parity::even).scaled(2.0);
  EXPECT_NEAR(std::abs(s.terms()[0].amplitudes[0]), 2.0, 1e-15);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(Expectation, EmptyProductIsPrefactor) {
  const auto cat = make_cat({0.4, 0.9}, Parity::odd);
  EXPECT_NEAR(expectation(cat, FactorProduct{{}, 0.25}), 0.25, 1e-14);
}

TEST(Expectation, CoherentStateClosedForm) {
  const Complex alpha{1.1, -0.3}, gamma{-0.5, 2.0};
  const double lambda = 0.37;
  const FactorProduct p{{{0, lambda, gamma}}, 1.0};
  EXPECT_NEAR(expectation(coherent(alpha), p), std::exp(-lambda * std::norm(alpha - gamma)), 1e-14);
}

TEST(Expectation, VacuumIsGaussianInDisplacement) {
  const Complex gamma{3.0, 1.0};
  EXPECT_NEAR(expectation(vacuum(), FactorProduct{{{0, 0.2, gamma}}, 1.0}), std::exp(-0.2 * 10.0), 1e-14);
}

TEST(Expectation, MatchesDenseOracleOnRandomSuperpositions) {
  testing::Random rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto state = rng.superposition(1, rng.integer(1, 4), 1.5);
    const FactorProduct p{{{0, rng.uniform(0.0, 1.0), rng.complex_in_disk(2.5)},
                           {0, rng.uniform(0.0, 0.5), rng.complex_in_disk(2.5)}},
                          rng.uniform(0.5, 1.0)};
    EXPECT_NEAR(expectation(state, p), testing::dense_expectation(testing::dense_state(state, 40), p), 1e-9);
  }
}

TEST(Expectation, TwoModeMatchesDenseOracle) {
  testing::Random rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto state = rng.superposition(2, 2, 1.2);
    const FactorProduct p{{{0, rng.uniform(0.0, 1.0), rng.complex_in_disk(2.0)},
                           {1, rng.uniform(0.0, 1.0), rng.complex_in_disk(2.0)}},
                          1.0};
    EXPECT_NEAR(expectation(state, p), testing::dense_expectation(testing::dense_state(state, 30), p), 1e-9);
  }
}

TEST(Expectation, RejectsUnknownMode) {
  EXPECT_THROW(expectation(coherent(1.0), FactorProduct{{{1, 0.5, 0.0}}, 1.0}), InvalidArgument);
}

TEST(Mixture, WeightsAreRenormalized) {
  const auto m = Mixture::of({{2.0, coherent(0.5)}, {6.0, coherent(-0.5)}});
  EXPECT_NEAR(m.components()[0].weight, 0.25, 1e-15);
  EXPECT_NEAR(m.components()[1].weight, 0.75, 1e-15);
  const FactorProduct p{{{0, 0.5, 0.0}}, 1.0};
  EXPECT_NEAR(expectation(m, p), std::exp(-0.125), 1e-14);
}

TEST(Mixture, RejectsBadWeights) {
  EXPECT_THROW(Mixture::of({}), InvalidArgument);
  EXPECT_THROW(Mixture::of({{-1.0, coherent(0.5)}}), InvalidArgument);
  EXPECT_THROW(Mixture::of({{0.0, coherent(0.5)}}), InvalidArgument);
  EXPECT_THROW(Mixture::of({{1.0, coherent(0.5)}, {1.0, coherent(std::vector<Complex>{0.5, 0.5})}}),
               InvalidArgument);
}

TEST(State, ClassicalityFlag) {
  EXPECT_TRUE(is_classical(State{coherent(1.0)}));
  EXPECT_TRUE(is_classical(State{Mixture::of({{1.0, coherent(1.0)}, {1.0, coherent(-1.0)}})}));
  EXPECT_FALSE(is_classical(State{make_cat(1.0, Parity::even)}));
  EXPECT_EQ(mode_count(State{make_two_mode_cat(1.0, Parity::even)}), 2u);
}

TEST(TermPairs, CountsNonZeroPairs) {
  EXPECT_EQ(term_pairs(make_cat(1.0, Parity::even)).size(), 4u);
  EXPECT_EQ(term_pairs(coherent(1.0)).size(), 1u);
}

}  // namespace
}  // namespace clickhd
