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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "clickhd/commands.hpp"
#include "clickhd/errors.hpp"
#include "clickhd/version.hpp"
#include "clickhd/worker_pool.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string report;
  std::string histogram;
  std::string format = "csv";
  std::uint64_t seed = 0;
  int jobs = clickhd::cli::default_jobs();
  int figure = 0;
};

void add_common(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config, "JSON run configuration")->check(CLI::ExistingFile);
  app->add_option("--out", flags.out, "Output path (default: stdout)");
  app->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", flags.seed, "RNG seed");
  app->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw clickhd::InvalidArgument("cannot open config " + path);
  return nlohmann::json::parse(in);
}

template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw clickhd::InvalidArgument("cannot write " + path);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Click-detector homodyne simulator"};
  app.set_version_flag("--version", clickhd::kVersion);
  app.require_subcommand(1);
  Flags flags;

  const std::pair<const char*, const char*> plain[] = {
      {"stats", "Click and photoelectric statistics"},
      {"sweep", "Evaluate criteria over a parameter grid"},
      {"mismatch", "Variance criterion behind a spectrally mismatched beam splitter"},
      {"thermal-lo", "Variance criterion with a thermally broadened local oscillator"},
  };
  for (const auto& [name, description] : plain) add_common(app.add_subcommand(name, description), flags);
  auto* sample = app.add_subcommand("sample", "Sample click events and estimate criteria");
  add_common(sample, flags);
  sample->add_option("--histogram", flags.histogram, "Analyze a measured histogram CSV instead of sampling")
      ->check(CLI::ExistingFile);
  sample->add_option("--report", flags.report, "Report path (default: stdout after the histogram)");
  auto* figure = app.add_subcommand("figure", "Run a figure preset");
  add_common(figure, flags);
  figure->add_option("number", flags.figure, "Figure number")->required()->check(CLI::IsMember({2, 4, 5, 6, 7, 8, 9}));

  CLI11_PARSE(app, argc, argv);

  try {
    clickhd::cli::CommandOptions options;
    options.jobs = flags.jobs;
    if (app.got_subcommand("sample") ? sample->count("--seed") > 0 : false) options.seed = flags.seed;
    if (!flags.histogram.empty()) options.histogram_path = flags.histogram;
    const auto config = load_config(flags.config);
    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    clickhd::cli::Output output = command == "figure" ? clickhd::cli::run_figure(flags.figure, config, options)
                                                      : clickhd::cli::run_command(command, config, options);
    for (const auto& note : output.table.notes) {
      if (note.rfind("warning", 0) == 0) std::cerr << note << '\n';
    }
    if (command == "sample") {
      emit(flags.out, [&](std::ostream& out) { clickhd::cli::write_histogram(out, output, flags.format); });
      emit(flags.report, [&](std::ostream& out) { clickhd::cli::write_table(out, output, flags.format); });
    } else {
      emit(flags.out, [&](std::ostream& out) { clickhd::cli::write_table(out, output, flags.format); });
    }
  } catch (const clickhd::Error& e) {
    std::cerr << "clickhd: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "clickhd: bad configuration: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
