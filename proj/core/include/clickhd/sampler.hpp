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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "clickhd/click_engine.hpp"

namespace clickhd {

/// Measured or synthetic joint click counts, flattened like ClickDistribution.
class ClickHistogram {
 public:
  ClickHistogram(std::vector<int> sizes, std::vector<std::uint64_t> counts);

  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t shots() const { return shots_; }

  /// Relative frequencies as a click tensor.
  ClickDistribution frequencies() const;

  friend bool operator==(const ClickHistogram&, const ClickHistogram&) = default;

 private:
  std::vector<int> sizes_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t shots_ = 0;
};

/// i.i.d. draws by inverse CDF over the flattened tensor. Deterministic for a
/// fixed seed; no global RNG state is touched.
ClickHistogram sample(const ClickDistribution& distribution, std::uint64_t shots, std::uint64_t seed);

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

struct BootstrapOptions {
  int resamples = 200;
  std::uint64_t seed = 0x5eed;
};

/// Plug-in value of `statistic` on the empirical frequencies, with a
/// bootstrap standard error from multinomial resamples of the histogram.
Estimate estimate_statistic(const ClickHistogram& histogram,
                            const std::function<double(const ClickDistribution&)>& statistic,
                            const BootstrapOptions& options = {});

/// Joint moment <: prod_i pi_i^{m_i} :> estimated from a histogram.
Estimate estimate_moments(const ClickHistogram& histogram, std::span<const int> powers,
                          const BootstrapOptions& options = {});

}  // namespace clickhd
