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

#include "clickhd/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "clickhd/errors.hpp"
#include "clickhd/evaluate.hpp"
#include "clickhd/imperfections.hpp"
#include "clickhd/run_config.hpp"
#include "clickhd/version.hpp"
#include "clickhd/witnesses.hpp"
#include "clickhd/worker_pool.hpp"

namespace clickhd::cli {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Metadata metadata_for(const std::string& command, const json& config, std::uint64_t seed) {
  return {command, fnv1a_hex(command + "\n" + config.dump()), seed};
}

void require_states(const RunConfig& run) {
  if (run.states.empty()) throw InvalidArgument("configuration needs \"state\" or \"states\"");
}

Point base_point(const RunConfig& run) {
  Point p;
  p.phi = run.phi;
  p.phi2 = run.phi2;
  p.nbar = run.nbar;
  return p;
}

std::vector<std::vector<double>> grid_points(const std::vector<Axis>& axes) {
  std::vector<std::vector<double>> points;
  if (axes.empty()) return {{}};
  for (double a : axes[0].values) {
    if (axes.size() == 1) {
      points.push_back({a});
      continue;
    }
    for (double b : axes[1].values) points.push_back({a, b});
  }
  return points;
}

void cap_axes(RunConfig& run) {
  for (auto& axis : run.axes) {
    if (axis.variable != "N") continue;
    for (double& v : axis.values) v = capped_apd_count(static_cast<int>(std::lround(v)), run.warnings);
  }
}

std::vector<std::string> default_criteria(const io::SchemeConfig& scheme) {
  switch (scheme.kind) {
    case io::SchemeKind::direct:
    case io::SchemeKind::unbalanced4:
      return {"mean", "variance"};
    case io::SchemeKind::balanced4:
      return {"squeezing", "sum_variance"};
    case io::SchemeKind::eight:
      return {"x_variance", "p_variance", "xp_covariance"};
    case io::SchemeKind::two_mode:
      return {"x1_variance", "x2_variance", "two_mode_covariance"};
  }
  return {};
}

}  // namespace

Output run_stats(const json& config, const CommandOptions&) {
  auto run = parse_run_config(config);
  require_states(run);
  const auto arms = phased_arms(run.scheme, base_point(run));
  Output output{metadata_for("stats", config, run.seed), {}, std::nullopt};
  auto& table = output.table;
  table.notes = run.warnings;

  if (arms.size() == 1) {
    const auto& arm = arms.tagged()[0].arm;
    const int n = arm.detector.apd_count();
    const int rows = std::max(n, run.n_max);
    table.columns = {"k"};
    std::vector<std::vector<double>> click, photo;
    for (const auto& s : run.states) {
      table.columns.push_back(s.label + ":click");
      table.columns.push_back(s.label + ":photoelectric");
      click.push_back(click_statistics(s.state, arm).probabilities());
      const PhotoelectricOptions po{arm.mode, arm.displacement};
      photo.push_back(photoelectric_statistics(s.state, arm.scale * arm.detector.efficiency(),
                                               n * arm.detector.dark_rate(), rows, po, &table.notes));
    }
    for (int k = 0; k <= rows; ++k) {
      std::vector<double> row = {static_cast<double>(k)};
      for (std::size_t i = 0; i < run.states.size(); ++i) {
        row.push_back(k <= n ? click[i][static_cast<std::size_t>(k)] : 0.0);
        row.push_back(photo[i][static_cast<std::size_t>(k)]);
      }
      table.rows.push_back(std::move(row));
    }
    return output;
  }

  const auto descriptors = arms.descriptors();
  std::vector<ClickDistribution> joint;
  for (std::size_t a = 0; a < descriptors.size(); ++a) table.columns.push_back("k" + std::to_string(a + 1));
  for (const auto& s : run.states) {
    table.columns.push_back(s.label + ":prob");
    joint.push_back(joint_click_statistics(s.state, descriptors));
  }
  const auto& first = joint.front();
  for (std::size_t flat = 0; flat < first.probabilities().size(); ++flat) {
    std::vector<double> row;
    for (int k : first.unflatten(flat)) row.push_back(k);
    for (const auto& d : joint) row.push_back(d.probabilities()[flat]);
    table.rows.push_back(std::move(row));
  }
  return output;
}

Output run_sweep(const json& config, const CommandOptions& options) {
  auto run = parse_run_config(config);
  require_states(run);
  cap_axes(run);
  if (run.criteria.empty()) run.criteria = default_criteria(run.scheme);
  Output output{metadata_for("sweep", config, run.seed), {}, std::nullopt};
  auto& table = output.table;
  table.notes = run.warnings;
  for (const auto& axis : run.axes) table.columns.push_back(axis.variable);
  for (const auto& s : run.states) {
    for (const auto& c : run.criteria) table.columns.push_back(s.label + ":" + c);
  }
  const auto points = grid_points(run.axes);
  table.rows.resize(points.size());
  parallel_for(points.size(), options.jobs, [&](std::size_t i) {
    Point point = base_point(run);
    for (std::size_t a = 0; a < run.axes.size(); ++a) set_variable(point, run.axes[a].variable, points[i][a]);
    std::vector<double> row = points[i];
    for (const auto& s : run.states) {
      for (const auto& c : run.criteria) row.push_back(evaluate(c, s.state, run.scheme, point));
    }
    table.rows[i] = std::move(row);
  });
  return output;
}

Output run_sample(const json& config, const CommandOptions& options) {
  auto run = parse_run_config(config);
  const std::uint64_t seed = options.seed.value_or(run.seed);
  if (run.criteria.empty()) run.criteria = default_criteria(run.scheme);
  const auto arms = phased_arms(run.scheme, base_point(run));
  const auto descriptors = arms.descriptors();

  Output output{metadata_for("sample", config, seed), {}, std::nullopt};
  if (options.histogram_path) {
    std::ifstream in(*options.histogram_path);
    if (!in) throw InvalidArgument("cannot open histogram file " + *options.histogram_path);
    output.histogram = io::read_histogram_csv(in);
    if (output.histogram->sizes().size() != descriptors.size()) {
      throw InvalidArgument("histogram arm count does not match the scheme");
    }
  } else {
    require_states(run);
    output.histogram = sample(joint_click_statistics(run.states.front().state, descriptors), run.shots, seed);
  }
  const ClickHistogram& histogram = *output.histogram;

  auto& table = output.table;
  table.notes = run.warnings;
  table.notes.push_back("shots=" + std::to_string(histogram.shots()) +
                        " resamples=" + std::to_string(run.resamples));
  table.label_column = "criterion";
  table.columns = {"estimate", "standard_error", "exact", "deviation_in_se"};
  table.labels = run.criteria;
  table.rows.resize(run.criteria.size());
  const BootstrapOptions bootstrap{run.resamples, seed};
  parallel_for(run.criteria.size(), options.jobs, [&](std::size_t i) {
    const auto& criterion = run.criteria[i];
    const auto estimate = estimate_statistic(
        histogram,
        [&](const ClickDistribution& d) { return evaluate_from_source(criterion, StatisticsMoments(d), arms); },
        bootstrap);
    double exact = kNaN;
    if (!run.states.empty()) {
      exact = evaluate_from_source(criterion, StateMoments(run.states.front().state, descriptors), arms);
    }
    const double z = estimate.standard_error > 0.0 ? (estimate.value - exact) / estimate.standard_error : kNaN;
    table.rows[i] = {estimate.value, estimate.standard_error, exact, z};
  });
  return output;
}

Output run_mismatch(const json& config, const CommandOptions& options) {
  auto run = parse_run_config(config);
  require_states(run);
  if (!run.spectral) throw InvalidArgument("mismatch needs a \"spectral\" section");
  const auto params = mode_mismatch_parameters(*run.spectral);
  const auto arm = mismatched_arm(params, run.scheme.detector);
  Output output{metadata_for("mismatch", config, run.seed), {}, std::nullopt};
  auto& table = output.table;
  table.notes = run.warnings;
  std::ostringstream summary;
  summary.precision(12);
  summary << "eta_t=" << params.efficiency << " gamma=" << params.displacement.real() << ","
          << params.displacement.imag() << " nu_tilde=" << params.noise_rate;
  table.notes.push_back(summary.str());

  std::vector<double> phis = {run.phi};
  for (const auto& axis : run.axes) {
    if (axis.variable != "phi") throw InvalidArgument("mismatch sweeps only over phi");
    phis = axis.values;
  }
  table.columns = {"phi"};
  for (const auto& s : run.states) table.columns.push_back(s.label + ":variance");
  table.rows.resize(phis.size());
  parallel_for(phis.size(), options.jobs, [&](std::size_t i) {
    std::vector<double> row = {phis[i]};
    for (const auto& s : run.states) row.push_back(variance_criterion(s.state, arm, phis[i]).value);
    table.rows[i] = std::move(row);
  });
  return output;
}

Output run_thermal_lo(const json& config, const CommandOptions& options) {
  auto run = parse_run_config(config);
  require_states(run);
  std::vector<double> occupations = grid_from_json(json{{"start", 0.0}, {"stop", 0.5}, {"points", 11}});
  for (const auto& axis : run.axes) {
    if (axis.variable != "nbar") throw InvalidArgument("thermal-lo sweeps only over nbar");
    occupations = axis.values;
  }
  const auto arms = phased_arms(run.scheme, base_point(run));
  if (arms.size() != 1) throw InvalidArgument("thermal-lo needs a single-arm scheme");
  const auto& arm = arms.tagged()[0].arm;

  Output output{metadata_for("thermal-lo", config, run.seed), {}, std::nullopt};
  auto& table = output.table;
  table.notes = run.warnings;
  table.columns = {"nbar"};
  for (const auto& s : run.states) {
    table.columns.push_back(s.label + ":variance");
    table.columns.push_back(s.label + ":quadrature_deviation");
  }
  table.rows.resize(occupations.size());
  parallel_for(occupations.size(), options.jobs, [&](std::size_t i) {
    const double nbar = occupations[i];
    std::vector<double> row = {nbar};
    for (const auto& s : run.states) {
      row.push_back(thermal_variance_criterion(s.state, arm, run.phi, nbar).value);
      const double lambda = arm.unit_exponent();
      const double closed = thermal_lo_expectation(s.state, lambda, arm.displacement, nbar, arm.mode);
      const double numeric = thermal_lo_expectation_quadrature(s.state, lambda, arm.displacement, nbar, 64, arm.mode);
      row.push_back(std::abs(closed - numeric));
    }
    table.rows[i] = std::move(row);
  });
  return output;
}

Output run_command(const std::string& command, const json& config, const CommandOptions& options) {
  if (command == "stats") return run_stats(config, options);
  if (command == "sweep") return run_sweep(config, options);
  if (command == "sample") return run_sample(config, options);
  if (command == "mismatch") return run_mismatch(config, options);
  if (command == "thermal-lo") return run_thermal_lo(config, options);
  throw InvalidArgument("unknown command \"" + command + "\"");
}

Output run_figure(int figure, const json& overrides, const CommandOptions& options) {
  auto preset = figure_preset(figure);
  if (!overrides.is_null()) preset.config.merge_patch(overrides);
  auto output = run_command(preset.command, preset.config, options);
  output.metadata = metadata_for("figure" + std::to_string(figure), preset.config, output.metadata.seed);
  return output;
}

void write_table(std::ostream& out, const Output& output, const std::string& format) {
  if (format == "csv") return write_csv(out, output.metadata, output.table);
  if (format == "json") return write_json(out, output.metadata, output.table);
  throw InvalidArgument("format must be csv or json");
}

void write_histogram(std::ostream& out, const Output& output, const std::string& format) {
  if (!output.histogram) throw InvalidArgument("no histogram to write");
  const auto& h = *output.histogram;
  if (format == "json") {
    json doc = {{"metadata",
                 {{"version", kVersion},
                  {"command", output.metadata.command},
                  {"config_hash", "fnv1a64:" + output.metadata.config_hash},
                  {"seed", output.metadata.seed}}},
                {"sizes", h.sizes()},
                {"counts", h.counts()}};
    out << doc.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw InvalidArgument("format must be csv or json");
  out << "# clickhd version=" << kVersion << " command=" << output.metadata.command
      << " config_hash=fnv1a64:" << output.metadata.config_hash << " seed=" << output.metadata.seed << '\n';
  io::write_histogram_csv(out, h);
}

}  // namespace clickhd::cli
