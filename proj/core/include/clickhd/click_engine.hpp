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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "clickhd/numeric.hpp"
#include "clickhd/state.hpp"

namespace clickhd {

/// N avalanche photodiodes sharing efficiency eta and dark rate nu.
class DetectorConfig {
 public:
  DetectorConfig(int apd_count, double efficiency, double dark_rate = 0.0);

  int apd_count() const { return apd_count_; }
  double efficiency() const { return efficiency_; }
  double dark_rate() const { return dark_rate_; }

  DetectorConfig with_efficiency(double efficiency) const;
  DetectorConfig with_dark_rate(double dark_rate) const;
  DetectorConfig with_apd_count(int apd_count) const;

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;

 private:
  int apd_count_;
  double efficiency_;
  double dark_rate_;
};

/// What one click detector sees behind the port network: the signal mode
/// scaled by `scale` in intensity and displaced by `displacement`.
struct ArmDescriptor {
  std::size_t mode = 0;
  double scale = 1.0;
  Complex displacement{};
  DetectorConfig detector{1, 1.0, 0.0};

  /// kappa * eta / N: the exponent of one no-click factor per unit of
  /// displaced photon number.
  double unit_exponent() const {
    return scale * detector.efficiency() / detector.apd_count();
  }

  /// Throws InvalidArgument when scale is outside [0, 1] or the
  /// displacement is not finite.
  void validate() const;
};

/// Joint probabilities c_{k_1, k_2, ...}, k_i in [0, N_i], flattened with
/// the first arm as the slowest index.
class ClickDistribution {
 public:
  ClickDistribution(std::vector<int> sizes, std::vector<double> probabilities);

  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  std::size_t arm_count() const { return sizes_.size(); }

  double at(std::span<const int> clicks) const;
  std::size_t flat_index(std::span<const int> clicks) const;
  std::vector<int> unflatten(std::size_t flat) const;

  double total() const;
  ClickDistribution marginal(std::size_t arm) const;

 private:
  std::vector<int> sizes_;
  std::vector<double> probabilities_;
};

/// Single-arm click statistics c_k.
ClickDistribution click_statistics(const State& state, const ArmDescriptor& arm);

/// Joint click statistics of several arms. Coherent superpositions are
/// evaluated by substituting each term pair into the normally ordered
/// binomial; Fock vectors go through inclusion-exclusion. Probabilities in
/// [-1e-9, 0) are clamped and the tensor renormalized; anything more
/// negative throws EvaluationError.
ClickDistribution joint_click_statistics(const State& state, std::span<const ArmDescriptor> arms);

/// The same tensor for any state type: (1 - e^{-x})^k is expanded by
/// inclusion-exclusion into factor-product expectations.
ClickDistribution joint_click_statistics_by_expansion(const State& state,
                                                      std::span<const ArmDescriptor> arms);

struct PhotoelectricOptions {
  std::size_t mode = 0;
  Complex displacement{};
};

/// p_n = <:(eta n(gamma) + nu)^n e^{-(eta n(gamma) + nu)} / n!:> for
/// n = 0..n_max. A warning is appended when the missing tail exceeds 1e-10.
std::vector<double> photoelectric_statistics(const State& state, double efficiency, double dark_rate,
                                             int n_max, const PhotoelectricOptions& options = {},
                                             std::vector<std::string>* warnings = nullptr);

/// <: prod_i pi_i^{m_i} :> with pi_i = N_i (1 - e^{-nu_i} :e^{-kappa_i eta_i n(gamma_i)/N_i}:).
double pi_moment(const State& state, std::span<const ArmDescriptor> arms, std::span<const int> powers);

/// pi_moment through the binomial expansion into factor-product
/// expectations; works for every state type and serves as the cross-check.
double pi_moment_by_expansion(const State& state, std::span<const ArmDescriptor> arms,
                              std::span<const int> powers);

/// Joint moments from a click tensor:
/// prod_i N_i^{m_i} sum_{k_i >= m_i} prod_i [C(k_i, m_i) / C(N_i, m_i)] c_k.
double moments_from_statistics(const ClickDistribution& distribution, std::span<const int> powers);

/// Source of normally ordered joint click moments, either exact (state and
/// arms) or empirical (a click tensor).
class MomentSource {
 public:
  virtual ~MomentSource() = default;
  virtual std::size_t arm_count() const = 0;
  virtual int apd_count(std::size_t arm) const = 0;
  virtual double moment(std::span<const int> powers) const = 0;
};

class StateMoments final : public MomentSource {
 public:
  StateMoments(State state, std::vector<ArmDescriptor> arms);

  std::size_t arm_count() const override { return arms_.size(); }
  int apd_count(std::size_t arm) const override { return arms_.at(arm).detector.apd_count(); }
  double moment(std::span<const int> powers) const override;

 private:
  State state_;
  std::vector<ArmDescriptor> arms_;
};

class StatisticsMoments final : public MomentSource {
 public:
  explicit StatisticsMoments(const ClickDistribution& distribution) : distribution_(distribution) {}

  std::size_t arm_count() const override { return distribution_.arm_count(); }
  int apd_count(std::size_t arm) const override { return distribution_.sizes().at(arm); }
  double moment(std::span<const int> powers) const override;

 private:
  const ClickDistribution& distribution_;
};

}  // namespace clickhd
