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

#include "clickhd/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "clickhd/errors.hpp"
#include "clickhd/version.hpp"

namespace clickhd::cli {
namespace {

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw InvalidArgument("no column named " + std::string(name));
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

void write_csv(std::ostream& out, const Metadata& metadata, const Table& table) {
  out << "# clickhd version=" << kVersion << " command=" << metadata.command
      << " config_hash=fnv1a64:" << metadata.config_hash << " seed=" << metadata.seed << '\n';
  for (const auto& note : table.notes) out << "# " << note << '\n';
  bool first = true;
  if (!table.label_column.empty()) {
    out << table.label_column;
    first = false;
  }
  for (const auto& c : table.columns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    first = true;
    if (!table.label_column.empty()) {
      out << table.labels[r];
      first = false;
    }
    for (double v : table.rows[r]) {
      out << (first ? "" : ",") << format_number(v);
      first = false;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Metadata& metadata, const Table& table) {
  nlohmann::json doc;
  doc["metadata"] = {{"version", kVersion},
                     {"command", metadata.command},
                     {"config_hash", "fnv1a64:" + metadata.config_hash},
                     {"seed", metadata.seed}};
  doc["notes"] = table.notes;
  auto columns = nlohmann::json::array();
  if (!table.label_column.empty()) columns.push_back(table.label_column);
  for (const auto& c : table.columns) columns.push_back(c);
  doc["columns"] = columns;
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto row = nlohmann::json::array();
    if (!table.label_column.empty()) row.push_back(table.labels[r]);
    for (double v : table.rows[r]) {
      if (std::isnan(v)) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace clickhd::cli
