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

#include "clickhd/click_engine.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <type_traits>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

constexpr double kClampTolerance = 1e-9;

void check_arms(const State& state, std::span<const ArmDescriptor> arms) {
  const std::size_t modes = mode_count(state);
  for (const auto& arm : arms) {
    arm.validate();
    if (arm.mode >= modes) throw InvalidArgument("arm refers to a mode outside the state");
  }
}

std::size_t tensor_size(const std::vector<int>& sizes) {
  std::size_t total = 1;
  for (int n : sizes) total *= static_cast<std::size_t>(n) + 1;
  return total;
}

std::vector<int> arm_sizes(std::span<const ArmDescriptor> arms) {
  std::vector<int> sizes;
  sizes.reserve(arms.size());
  for (const auto& arm : arms) sizes.push_back(arm.detector.apd_count());
  return sizes;
}

// Clamps round-off negativity and builds the distribution.
ClickDistribution finalize(std::vector<int> sizes, std::vector<double> probabilities) {
  bool clamped = false;
  for (double& p : probabilities) {
    if (p < -kClampTolerance) {
      std::ostringstream msg;
      msg << "click probability " << p << " is negative beyond round-off";
      throw EvaluationError(msg.str());
    }
    if (p < 0.0) {
      p = 0.0;
      clamped = true;
    }
  }
  if (clamped) {
    const double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    for (double& p : probabilities) p /= total;
  }
  return ClickDistribution(std::move(sizes), std::move(probabilities));
}

// z = (a_i^* - gamma^*)(a_j - gamma) for one arm and one term pair.
Complex displaced_product(const TermPair& pair, const ArmDescriptor& arm) {
  return std::conj(pair.bra->amplitudes[arm.mode] - arm.displacement) *
         (pair.ket->amplitudes[arm.mode] - arm.displacement);
}

ClickDistribution joint_coherent(const CoherentSuperposition& state, std::span<const ArmDescriptor> arms) {
  const auto sizes = arm_sizes(arms);
  const std::size_t total = tensor_size(sizes);
  std::vector<Complex> tensor(total);
  std::vector<double> scale(total, 0.0);
  std::vector<std::vector<Complex>> per_arm(arms.size());
  for (const auto& pair : term_pairs(state)) {
    for (std::size_t a = 0; a < arms.size(); ++a) {
      const int n = sizes[a];
      const Complex log_off = -arms[a].detector.dark_rate() - arms[a].unit_exponent() * displaced_product(pair, arms[a]);
      const Complex off = std::exp(log_off);
      const Complex on = -numeric::expm1(log_off);
      auto& f = per_arm[a];
      f.assign(static_cast<std::size_t>(n) + 1, Complex{});
      for (int k = 0; k <= n; ++k) {
        f[static_cast<std::size_t>(k)] = numeric::binomial(n, k) * numeric::ipow(off, n - k) * numeric::ipow(on, k);
      }
    }
    for (std::size_t flat = 0; flat < total; ++flat) {
      Complex value = pair.weight;
      std::size_t rest = flat;
      for (std::size_t a = arms.size(); a-- > 0;) {
        const std::size_t width = static_cast<std::size_t>(sizes[a]) + 1;
        value *= per_arm[a][rest % width];
        rest /= width;
      }
      tensor[flat] += value;
      scale[flat] += std::abs(value);
    }
  }
  std::vector<double> probabilities(total);
  for (std::size_t i = 0; i < total; ++i) {
    probabilities[i] = hermitian_real_part(tensor[i], scale[i], "joint_click_statistics");
  }
  return finalize(sizes, std::move(probabilities));
}

ClickDistribution weighted_sum(const Mixture& mixture, std::span<const ArmDescriptor> arms,
                               ClickDistribution (*component)(const CoherentSuperposition&,
                                                              std::span<const ArmDescriptor>)) {
  const auto sizes = arm_sizes(arms);
  std::vector<double> probabilities(tensor_size(sizes), 0.0);
  for (const auto& c : mixture.components()) {
    const auto part = component(c.state, arms);
    for (std::size_t i = 0; i < probabilities.size(); ++i) probabilities[i] += c.weight * part.probabilities()[i];
  }
  return finalize(sizes, std::move(probabilities));
}

// Inclusion-exclusion over the table E[s_1, ..., s_A] of
// e^{-sum s_a nu_a} <: prod_a exp(-s_a kappa_a eta_a n(gamma_a) / N_a) :>.
ClickDistribution joint_expansion(const State& state, std::span<const ArmDescriptor> arms) {
  const auto sizes = arm_sizes(arms);
  const std::size_t total = tensor_size(sizes);
  std::vector<double> table(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    FactorProduct product;
    double dark = 0.0;
    std::size_t rest = flat;
    for (std::size_t a = arms.size(); a-- > 0;) {
      const std::size_t width = static_cast<std::size_t>(sizes[a]) + 1;
      const int s = static_cast<int>(rest % width);
      rest /= width;
      if (s == 0) continue;
      product.factors.push_back({arms[a].mode, s * arms[a].unit_exponent(), arms[a].displacement});
      dark += s * arms[a].detector.dark_rate();
    }
    product.prefactor = std::exp(-dark);
    table[flat] = expectation(state, product);
  }
  // Axis by axis: out[k] = C(N,k) sum_j C(k,j) (-1)^j in[N - k + j].
  std::size_t stride = 1;
  for (std::size_t a = arms.size(); a-- > 0;) {
    const int n = sizes[a];
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<double> line(width), out(width);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % width != 0) continue;
      for (std::size_t s = 0; s < width; ++s) line[s] = table[base + s * stride];
      for (int k = 0; k <= n; ++k) {
        double sum = 0.0;
        for (int j = 0; j <= k; ++j) {
          const double sign = (j % 2 == 0) ? 1.0 : -1.0;
          sum += sign * numeric::binomial(k, j) * line[static_cast<std::size_t>(n - k + j)];
        }
        out[static_cast<std::size_t>(k)] = numeric::binomial(n, k) * sum;
      }
      for (std::size_t s = 0; s < width; ++s) table[base + s * stride] = out[s];
    }
    stride *= width;
  }
  return finalize(sizes, std::move(table));
}

double pi_moment_coherent(const CoherentSuperposition& state, std::span<const ArmDescriptor> arms,
                          std::span<const int> powers) {
  Complex sum{};
  double scale = 0.0;
  for (const auto& pair : term_pairs(state)) {
    Complex value = pair.weight;
    for (std::size_t a = 0; a < arms.size(); ++a) {
      if (powers[a] == 0) continue;
      const Complex log_off = -arms[a].detector.dark_rate() - arms[a].unit_exponent() * displaced_product(pair, arms[a]);
      const Complex pi = -static_cast<double>(arms[a].detector.apd_count()) * numeric::expm1(log_off);
      value *= numeric::ipow(pi, powers[a]);
    }
    sum += value;
    scale += std::abs(value);
  }
  return hermitian_real_part(sum, scale, "pi_moment");
}

void check_powers(std::span<const ArmDescriptor> arms, std::span<const int> powers) {
  if (powers.size() != arms.size()) throw InvalidArgument("one power per arm is required");
  for (int m : powers) {
    if (m < 0) throw InvalidArgument("moment powers must be >= 0");
  }
}

std::vector<double> photoelectric_coherent(const CoherentSuperposition& state, double efficiency,
                                           double dark_rate, int n_max, const PhotoelectricOptions& options) {
  std::vector<Complex> sum(static_cast<std::size_t>(n_max) + 1);
  std::vector<double> scale(sum.size(), 0.0);
  for (const auto& pair : term_pairs(state)) {
    const Complex bra = std::conj(pair.bra->amplitudes[options.mode] - options.displacement);
    const Complex ket = pair.ket->amplitudes[options.mode] - options.displacement;
    const Complex x = efficiency * bra * ket + dark_rate;
    Complex term = pair.weight * std::exp(-x);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) term *= x / static_cast<double>(n);
      sum[static_cast<std::size_t>(n)] += term;
      scale[static_cast<std::size_t>(n)] += std::abs(term);
    }
  }
  std::vector<double> p(sum.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = hermitian_real_part(sum[n], scale[n], "photoelectric_statistics");
  return p;
}

std::vector<double> photoelectric_fock(const FockVector& state, double efficiency, double dark_rate, int n_max,
                                       const PhotoelectricOptions& options) {
  if (options.displacement != Complex{}) {
    throw InvalidArgument("displaced photoelectric statistics need a coherent-superposition state");
  }
  const auto photons = state.photon_number_distribution(options.mode);
  std::vector<double> thinned(photons.size(), 0.0);  // after efficiency
  for (std::size_t m = 0; m < photons.size(); ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      thinned[k] += photons[m] * numeric::binomial(static_cast<int>(m), static_cast<int>(k)) *
                    std::pow(efficiency, static_cast<double>(k)) *
                    std::pow(1.0 - efficiency, static_cast<double>(m - k));
    }
  }
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::size_t n = 0; n < p.size(); ++n) {
    for (std::size_t k = 0; k <= n && k < thinned.size(); ++k) {
      const double dark = std::exp(-dark_rate + static_cast<double>(n - k) * std::log(dark_rate) -
                                   std::lgamma(static_cast<double>(n - k) + 1.0));
      p[n] += thinned[k] * (n == k ? std::exp(-dark_rate) : (dark_rate > 0.0 ? dark : 0.0));
    }
  }
  return p;
}

}  // namespace

DetectorConfig::DetectorConfig(int apd_count, double efficiency, double dark_rate)
    : apd_count_(apd_count), efficiency_(efficiency), dark_rate_(dark_rate) {
  if (apd_count < 1) throw InvalidArgument("detector needs at least one APD");
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) throw InvalidArgument("detector efficiency must lie in [0, 1]");
  if (!(dark_rate >= 0.0) || !std::isfinite(dark_rate)) throw InvalidArgument("dark rate must be finite and >= 0");
}

DetectorConfig DetectorConfig::with_efficiency(double efficiency) const {
  return {apd_count_, efficiency, dark_rate_};
}
DetectorConfig DetectorConfig::with_dark_rate(double dark_rate) const {
  return {apd_count_, efficiency_, dark_rate};
}
DetectorConfig DetectorConfig::with_apd_count(int apd_count) const {
  return {apd_count, efficiency_, dark_rate_};
}

void ArmDescriptor::validate() const {
  if (!(scale >= 0.0 && scale <= 1.0 + 1e-12)) throw InvalidArgument("arm intensity scale must lie in [0, 1]");
  if (!std::isfinite(displacement.real()) || !std::isfinite(displacement.imag())) {
    throw InvalidArgument("arm displacement must be finite");
  }
}

ClickDistribution::ClickDistribution(std::vector<int> sizes, std::vector<double> probabilities)
    : sizes_(std::move(sizes)), probabilities_(std::move(probabilities)) {
  if (sizes_.empty()) throw InvalidArgument("click distribution needs at least one arm");
  for (int n : sizes_) {
    if (n < 1) throw InvalidArgument("click detector sizes must be >= 1");
  }
  if (probabilities_.size() != tensor_size(sizes_)) throw InvalidArgument("click tensor has the wrong size");
  for (double p : probabilities_) {
    if (!(p >= -1e-10 && p <= 1.0 + 1e-10)) throw InvalidArgument("click probability outside [0, 1]");
  }
  if (std::abs(total() - 1.0) > 1e-9) throw InvalidArgument("click probabilities do not sum to one");
}

std::size_t ClickDistribution::flat_index(std::span<const int> clicks) const {
  if (clicks.size() != sizes_.size()) throw InvalidArgument("click index has the wrong length");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < sizes_.size(); ++a) {
    if (clicks[a] < 0 || clicks[a] > sizes_[a]) throw InvalidArgument("click index out of range");
    flat = flat * (static_cast<std::size_t>(sizes_[a]) + 1) + static_cast<std::size_t>(clicks[a]);
  }
  return flat;
}

std::vector<int> ClickDistribution::unflatten(std::size_t flat) const {
  std::vector<int> clicks(sizes_.size());
  for (std::size_t a = sizes_.size(); a-- > 0;) {
    const std::size_t width = static_cast<std::size_t>(sizes_[a]) + 1;
    clicks[a] = static_cast<int>(flat % width);
    flat /= width;
  }
  return clicks;
}

double ClickDistribution::at(std::span<const int> clicks) const { return probabilities_[flat_index(clicks)]; }

double ClickDistribution::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

ClickDistribution ClickDistribution::marginal(std::size_t arm) const {
  if (arm >= sizes_.size()) throw InvalidArgument("marginal arm out of range");
  std::vector<double> p(static_cast<std::size_t>(sizes_[arm]) + 1, 0.0);
  for (std::size_t flat = 0; flat < probabilities_.size(); ++flat) {
    p[static_cast<std::size_t>(unflatten(flat)[arm])] += probabilities_[flat];
  }
  return ClickDistribution({sizes_[arm]}, std::move(p));
}

ClickDistribution click_statistics(const State& state, const ArmDescriptor& arm) {
  return joint_click_statistics(state, std::span<const ArmDescriptor>(&arm, 1));
}

ClickDistribution joint_click_statistics(const State& state, std::span<const ArmDescriptor> arms) {
  if (arms.empty()) throw InvalidArgument("at least one arm is required");
  check_arms(state, arms);
  if (const auto* pure = std::get_if<CoherentSuperposition>(&state)) return joint_coherent(*pure, arms);
  if (const auto* mixed = std::get_if<Mixture>(&state)) return weighted_sum(*mixed, arms, &joint_coherent);
  return joint_expansion(state, arms);
}

ClickDistribution joint_click_statistics_by_expansion(const State& state, std::span<const ArmDescriptor> arms) {
  if (arms.empty()) throw InvalidArgument("at least one arm is required");
  check_arms(state, arms);
  return joint_expansion(state, arms);
}

std::vector<double> photoelectric_statistics(const State& state, double efficiency, double dark_rate, int n_max,
                                             const PhotoelectricOptions& options,
                                             std::vector<std::string>* warnings) {
  if (n_max < 0) throw InvalidArgument("n_max must be >= 0");
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) throw InvalidArgument("efficiency must lie in [0, 1]");
  if (!(dark_rate >= 0.0)) throw InvalidArgument("dark rate must be >= 0");
  if (options.mode >= mode_count(state)) throw InvalidArgument("mode outside the state");
  std::vector<double> p = std::visit(
      [&](const auto& s) -> std::vector<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSuperposition>) {
          return photoelectric_coherent(s, efficiency, dark_rate, n_max, options);
        } else if constexpr (std::is_same_v<T, Mixture>) {
          std::vector<double> total(static_cast<std::size_t>(n_max) + 1, 0.0);
          for (const auto& c : s.components()) {
            const auto part = photoelectric_coherent(c.state, efficiency, dark_rate, n_max, options);
            for (std::size_t n = 0; n < total.size(); ++n) total[n] += c.weight * part[n];
          }
          return total;
        } else {
          return photoelectric_fock(s, efficiency, dark_rate, n_max, options);
        }
      },
      state);
  for (double& v : p) {
    if (v < -kClampTolerance) throw EvaluationError("photoelectric probability negative beyond round-off");
    if (v < 0.0) v = 0.0;
  }
  const double tail = 1.0 - std::accumulate(p.begin(), p.end(), 0.0);
  if (warnings && tail > 1e-10) {
    std::ostringstream msg;
    msg << "photoelectric tail mass " << tail << " beyond n_max = " << n_max;
    warnings->push_back(msg.str());
  }
  return p;
}

double pi_moment(const State& state, std::span<const ArmDescriptor> arms, std::span<const int> powers) {
  check_arms(state, arms);
  check_powers(arms, powers);
  if (const auto* pure = std::get_if<CoherentSuperposition>(&state)) return pi_moment_coherent(*pure, arms, powers);
  if (const auto* mixed = std::get_if<Mixture>(&state)) {
    double total = 0.0;
    for (const auto& c : mixed->components()) total += c.weight * pi_moment_coherent(c.state, arms, powers);
    return total;
  }
  return pi_moment_by_expansion(state, arms, powers);
}

double pi_moment_by_expansion(const State& state, std::span<const ArmDescriptor> arms, std::span<const int> powers) {
  check_arms(state, arms);
  check_powers(arms, powers);
  // Iterate over j_a in [0, m_a] for every arm.
  std::vector<int> j(arms.size(), 0);
  double total = 0.0;
  while (true) {
    FactorProduct product;
    double coefficient = 1.0;
    double dark = 0.0;
    for (std::size_t a = 0; a < arms.size(); ++a) {
      const int m = powers[a];
      coefficient *= numeric::ipow(static_cast<double>(arms[a].detector.apd_count()), m) * numeric::binomial(m, j[a]) *
                     (j[a] % 2 == 0 ? 1.0 : -1.0);
      if (j[a] > 0) {
        product.factors.push_back({arms[a].mode, j[a] * arms[a].unit_exponent(), arms[a].displacement});
        dark += j[a] * arms[a].detector.dark_rate();
      }
    }
    product.prefactor = std::exp(-dark);
    total += coefficient * expectation(state, product);

    std::size_t a = 0;
    for (; a < arms.size(); ++a) {
      if (++j[a] <= powers[a]) break;
      j[a] = 0;
    }
    if (a == arms.size()) break;
  }
  return total;
}

double moments_from_statistics(const ClickDistribution& distribution, std::span<const int> powers) {
  const auto& sizes = distribution.sizes();
  if (powers.size() != sizes.size()) throw InvalidArgument("one power per arm is required");
  double prefactor = 1.0;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    if (powers[a] < 0) throw InvalidArgument("moment powers must be >= 0");
    if (powers[a] > sizes[a]) throw InvalidArgument("moment power exceeds the APD count");
    prefactor *= numeric::ipow(static_cast<double>(sizes[a]), powers[a]);
  }
  std::vector<std::vector<double>> ratio(sizes.size());
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    const double denominator = numeric::binomial(sizes[a], powers[a]);
    ratio[a].resize(static_cast<std::size_t>(sizes[a]) + 1);
    for (int k = 0; k <= sizes[a]; ++k) {
      ratio[a][static_cast<std::size_t>(k)] = numeric::binomial(k, powers[a]) / denominator;
    }
  }
  const auto& p = distribution.probabilities();
  double sum = 0.0;
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    if (p[flat] == 0.0) continue;
    double weight = p[flat];
    std::size_t rest = flat;
    for (std::size_t a = sizes.size(); a-- > 0;) {
      const std::size_t width = static_cast<std::size_t>(sizes[a]) + 1;
      weight *= ratio[a][rest % width];
      rest /= width;
    }
    sum += weight;
  }
  return prefactor * sum;
}

StateMoments::StateMoments(State state, std::vector<ArmDescriptor> arms)
    : state_(std::move(state)), arms_(std::move(arms)) {
  check_arms(state_, arms_);
}

double StateMoments::moment(std::span<const int> powers) const { return pi_moment(state_, arms_, powers); }

double StatisticsMoments::moment(std::span<const int> powers) const {
  return moments_from_statistics(distribution_, powers);
}

}  // namespace clickhd
