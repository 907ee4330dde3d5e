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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clickhd/imperfections.hpp"
#include "clickhd/io.hpp"
#include "clickhd/state.hpp"

namespace clickhd::cli {

inline constexpr int kMaxApdCount = 256;

struct LabeledState {
  std::string label;
  State state;
};

/// One sweep axis: "phi", "phi2", "N", "eta", "nu" or "nbar".
struct Axis {
  std::string variable;
  std::vector<double> values;
};

struct RunConfig {
  nlohmann::json source;
  std::vector<LabeledState> states;
  io::SchemeConfig scheme;
  std::vector<std::string> criteria;
  std::vector<Axis> axes;
  double phi = 0.0;
  double phi2 = 0.0;
  double nbar = 0.0;
  int n_max = 40;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  int resamples = 200;
  std::optional<SpectralSetup> spectral;
  std::vector<std::string> warnings;
};

/// Grid: an array of values, or {"start", "stop", "points", "endpoint"}.
std::vector<double> grid_from_json(const nlohmann::json& grid);

/// Parses a run configuration. Throws InvalidArgument on unresolved
/// references or empty grids.
RunConfig parse_run_config(const nlohmann::json& config);

/// Clamps N to kMaxApdCount, recording a warning.
int capped_apd_count(int n, std::vector<std::string>& warnings);

/// Built-in parameter sets for figures 2, 4, 5, 6, 7, 8 and 9, together with
/// the subcommand that consumes them.
struct FigurePreset {
  std::string command;
  nlohmann::json config;
};
FigurePreset figure_preset(int figure);

}  // namespace clickhd::cli
