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

#include "clickhd/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> multinomial(std::span<const std::uint64_t> counts, std::uint64_t shots,
                                       std::mt19937_64& rng) {
  std::vector<std::uint64_t> out(counts.size(), 0);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  for (std::size_t i = 0; i < counts.size() && remaining > 0; ++i) {
    const double p = static_cast<double>(counts[i]) / static_cast<double>(shots);
    if (p <= 0.0) continue;
    const double conditional = i + 1 == counts.size() ? 1.0 : std::clamp(p / mass, 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(remaining, conditional);
    out[i] = draw(rng);
    remaining -= out[i];
    mass -= p;
  }
  if (remaining > 0) {
    // round-off left the tail unassigned
    for (std::size_t i = counts.size(); i-- > 0;) {
      if (counts[i] > 0) {
        out[i] += remaining;
        break;
      }
    }
  }
  return out;
}

}  // namespace

ClickHistogram::ClickHistogram(std::vector<int> sizes, std::vector<std::uint64_t> counts)
    : sizes_(std::move(sizes)), counts_(std::move(counts)) {
  if (sizes_.empty()) throw InvalidArgument("histogram needs at least one arm");
  std::size_t total = 1;
  for (int n : sizes_) {
    if (n < 1) throw InvalidArgument("histogram detector sizes must be >= 1");
    total *= static_cast<std::size_t>(n) + 1;
  }
  if (counts_.size() != total) throw InvalidArgument("histogram tensor has the wrong size");
  shots_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ClickDistribution ClickHistogram::frequencies() const {
  if (shots_ == 0) throw InvalidArgument("empty histogram has no frequencies");
  std::vector<double> p(counts_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<double>(counts_[i]) / static_cast<double>(shots_);
  return ClickDistribution(sizes_, std::move(p));
}

ClickHistogram sample(const ClickDistribution& distribution, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidArgument("shots must be >= 1");
  const auto& p = distribution.probabilities();
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  const double total = cdf.back();
  std::vector<std::uint64_t> counts(p.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    auto index = static_cast<std::size_t>(it - cdf.begin());
    while (p[index] <= 0.0 && index > 0) --index;
    ++counts[index];
  }
  return ClickHistogram(distribution.sizes(), std::move(counts));
}

Estimate estimate_statistic(const ClickHistogram& histogram,
                            const std::function<double(const ClickDistribution&)>& statistic,
                            const BootstrapOptions& options) {
  if (options.resamples < 2) throw InvalidArgument("bootstrap needs at least two resamples");
  Estimate estimate;
  estimate.value = statistic(histogram.frequencies());
  std::mt19937_64 rng(options.seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(options.resamples));
  for (int b = 0; b < options.resamples; ++b) {
    const ClickHistogram resample(histogram.sizes(), multinomial(histogram.counts(), histogram.shots(), rng));
    values.push_back(statistic(resample.frequencies()));
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  estimate.standard_error = std::sqrt(squares / static_cast<double>(values.size() - 1));
  return estimate;
}

Estimate estimate_moments(const ClickHistogram& histogram, std::span<const int> powers,
                          const BootstrapOptions& options) {
  const std::vector<int> p(powers.begin(), powers.end());
  return estimate_statistic(
      histogram, [&p](const ClickDistribution& d) { return moments_from_statistics(d, p); }, options);
}

}  // namespace clickhd
