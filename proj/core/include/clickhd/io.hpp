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

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "clickhd/click_engine.hpp"
#include "clickhd/homodyne.hpp"
#include "clickhd/imperfections.hpp"
#include "clickhd/sampler.hpp"
#include "clickhd/state.hpp"

namespace clickhd::io {

/// Accepts a bare number or [re, im].
Complex complex_from_json(const nlohmann::json& value);
nlohmann::json complex_to_json(Complex value);

/// State description:
///   {"modes": M, "terms": [{"c": [re, im], "alphas": [[re, im], ...]}]}
///   {"cat": {"alpha": a, "parity": "even"|"odd"}}
///   {"two_mode_cat": {...}}, {"coherent": {"alpha": a}} or {"alphas": [...]}
///   {"vacuum": {"modes": M}}
///   {"mixture": [{"weight": w, "state": {...}}, ...]}
State state_from_json(const nlohmann::json& description);

DetectorConfig detector_from_json(const nlohmann::json& description);

enum class SchemeKind { direct, unbalanced4, balanced4, eight, two_mode };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::unbalanced4;
  Complex t{1.0};
  Complex r{0.0};
  Complex beta{};
  Complex beta2{};
  DetectorConfig detector{8, 1.0, 0.0};

  /// Tagged arms for the configured scheme. Single-arm schemes produce one
  /// arm with role `single`.
  SchemeArms arms() const;
};

/// {"scheme": "direct|unbalanced4|balanced4|eight|two_mode", "t": ..., "r": ...,
///  "beta": ..., "beta2": ..., "detector": {"N": 8, "eta": 0.5, "nu": 0}}
SchemeConfig scheme_from_json(const nlohmann::json& description);
const char* to_string(SchemeKind kind);

/// Arrays "omega", "G", "f_SI", "f_LO", "t", "r" and a scalar "beta".
SpectralSetup spectral_setup_from_json(const nlohmann::json& description);

/// "k1,k2,...,prob" rows, first arm slowest.
void write_distribution_csv(std::ostream& out, const ClickDistribution& distribution);
nlohmann::json distribution_to_json(const ClickDistribution& distribution);

/// "# sizes=N1,N2" comment followed by "k1,k2,...,count" rows. Lines
/// starting with '#' other than the sizes line are skipped on reading. When
/// no sizes line is present the sizes are the largest observed indices.
void write_histogram_csv(std::ostream& out, const ClickHistogram& histogram);
ClickHistogram read_histogram_csv(std::istream& in);

}  // namespace clickhd::io
