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
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "clickhd/sampler.hpp"
#include "clickhd/table.hpp"

namespace clickhd::cli {

struct CommandOptions {
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::optional<std::string> histogram_path;
};

struct Output {
  Metadata metadata;
  Table table;
  std::optional<ClickHistogram> histogram;
};

Output run_stats(const nlohmann::json& config, const CommandOptions& options);
Output run_sweep(const nlohmann::json& config, const CommandOptions& options);
Output run_sample(const nlohmann::json& config, const CommandOptions& options);
Output run_mismatch(const nlohmann::json& config, const CommandOptions& options);
Output run_thermal_lo(const nlohmann::json& config, const CommandOptions& options);

/// Dispatches "stats", "sweep", "sample", "mismatch" or "thermal-lo".
Output run_command(const std::string& command, const nlohmann::json& config, const CommandOptions& options);

/// Runs a figure preset with `overrides` merged on top (JSON merge patch).
Output run_figure(int figure, const nlohmann::json& overrides, const CommandOptions& options);

/// format: "csv" or "json".
void write_table(std::ostream& out, const Output& output, const std::string& format);
void write_histogram(std::ostream& out, const Output& output, const std::string& format);

}  // namespace clickhd::cli
