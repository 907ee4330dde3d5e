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
#include <string>
#include <string_view>
#include <vector>

namespace clickhd::cli {

struct Metadata {
  std::string command;
  std::string config_hash;
  std::uint64_t seed = 0;
};

/// Numeric table with an optional leading text column. NaN cells are
/// written as empty CSV fields and JSON nulls.
struct Table {
  std::string label_column;
  std::vector<std::string> labels;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;

  std::size_t column(std::string_view name) const;
};

std::string fnv1a_hex(std::string_view text);

void write_csv(std::ostream& out, const Metadata& metadata, const Table& table);
void write_json(std::ostream& out, const Metadata& metadata, const Table& table);

}  // namespace clickhd::cli
