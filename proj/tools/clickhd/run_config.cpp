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

#include "clickhd/run_config.hpp"

#include <numbers>

#include "clickhd/errors.hpp"

namespace clickhd::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kAxisNames = {"phi", "phi2", "N", "eta", "nu", "nbar"};

Axis axis_from_json(const json& j) {
  Axis axis{j.at("variable").get<std::string>(), grid_from_json(j.at("grid"))};
  if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.variable) == kAxisNames.end()) {
    throw InvalidArgument("unknown sweep variable \"" + axis.variable + "\"");
  }
  return axis;
}

json phase_grid(int points) { return {{"start", 0.0}, {"stop", 2.0 * std::numbers::pi}, {"points", points}, {"endpoint", false}}; }

json cat(const char* parity) { return {{"cat", {{"alpha", 1.0}, {"parity", parity}}}}; }

json detector(int n, double eta) { return {{"N", n}, {"eta", eta}, {"nu", 0.0}}; }

}  // namespace

std::vector<double> grid_from_json(const json& grid) {
  std::vector<double> values;
  if (grid.is_array()) {
    values = grid.get<std::vector<double>>();
  } else {
    const double start = grid.at("start").get<double>();
    const double stop = grid.at("stop").get<double>();
    const int points = grid.at("points").get<int>();
    const bool endpoint = grid.value("endpoint", true);
    if (points < 1) throw InvalidArgument("grid needs at least one point");
    const int divisions = endpoint ? std::max(points - 1, 1) : points;
    for (int i = 0; i < points; ++i) values.push_back(start + (stop - start) * i / divisions);
  }
  if (values.empty()) throw InvalidArgument("grid is empty");
  return values;
}

int capped_apd_count(int n, std::vector<std::string>& warnings) {
  if (n <= kMaxApdCount) return n;
  warnings.push_back("warning: N=" + std::to_string(n) + " capped at " + std::to_string(kMaxApdCount));
  return kMaxApdCount;
}

RunConfig parse_run_config(const json& config) {
  if (!config.is_object()) throw InvalidArgument("run configuration must be a JSON object");
  RunConfig run;
  run.source = config;
  if (config.contains("states")) {
    const auto& states = config.at("states");
    if (states.is_object()) {
      for (const auto& [label, description] : states.items()) {
        run.states.push_back({label, io::state_from_json(description)});
      }
    } else {
      for (const auto& entry : states) {
        run.states.push_back({entry.at("label").get<std::string>(), io::state_from_json(entry.at("state"))});
      }
    }
  } else if (config.contains("state")) {
    run.states.push_back({"state", io::state_from_json(config.at("state"))});
  }
  run.scheme = io::scheme_from_json(config.value("scheme", json::object()));
  const int n = capped_apd_count(run.scheme.detector.apd_count(), run.warnings);
  run.scheme.detector = run.scheme.detector.with_apd_count(n);
  if (config.contains("criteria")) run.criteria = config.at("criteria").get<std::vector<std::string>>();
  if (config.contains("criterion")) run.criteria.push_back(config.at("criterion").get<std::string>());
  if (config.contains("sweep")) {
    const auto& sweep = config.at("sweep");
    if (sweep.is_array()) {
      for (const auto& a : sweep) run.axes.push_back(axis_from_json(a));
    } else {
      run.axes.push_back(axis_from_json(sweep));
    }
    if (run.axes.size() > 2) throw InvalidArgument("at most two sweep axes are supported");
  }
  run.phi = config.value("phi", run.phi);
  run.phi2 = config.value("phi2", run.phi2);
  run.nbar = config.value("nbar", run.nbar);
  run.n_max = config.value("n_max", run.n_max);
  run.seed = config.value("seed", run.seed);
  if (config.contains("sample")) {
    run.shots = config.at("sample").value("shots", run.shots);
    run.resamples = config.at("sample").value("resamples", run.resamples);
  }
  if (config.contains("spectral")) {
    const auto& s = config.at("spectral");
    if (s.contains("gaussian")) {
      const auto& g = s.at("gaussian");
      run.spectral = gaussian_spectral_setup(
          g.value("signal_center", 0.0), g.value("signal_width", 1.0), g.value("lo_center", 0.0),
          g.value("lo_width", 1.0), io::complex_from_json(g.value("t", json(0.8))),
          io::complex_from_json(g.value("r", json(0.6))), io::complex_from_json(g.value("beta", json(4.0))),
          g.value("response_center", 0.0), g.value("response_width", 0.0), g.value("points", 257));
    } else {
      run.spectral = io::spectral_setup_from_json(s);
    }
  }
  return run;
}

FigurePreset figure_preset(int figure) {
  const double half_pi = std::numbers::pi / 2.0;
  switch (figure) {
    case 2:
      return {"stats",
              {{"states",
                {{"coherent", {{"coherent", {{"alpha", 2.0}}}}},
                 {"even", {{"cat", {{"alpha", 2.0}, {"parity", "even"}}}}},
                 {"odd", {{"cat", {{"alpha", 2.0}, {"parity", "odd"}}}}}}},
               {"scheme", {{"scheme", "direct"}, {"detector", detector(8, 1.0)}}},
               {"n_max", 30}}};
    case 4:
      return {"sweep",
              {{"states", {{"even", cat("even")}, {"odd", cat("odd")}}},
               {"scheme", {{"scheme", "unbalanced4"}, {"t", 0.8}, {"r", 0.6}, {"beta", 4.0}, {"detector", detector(8, 0.5)}}},
               {"criteria", json::array({"variance"})},
               {"sweep", {{"variable", "phi"}, {"grid", phase_grid(256)}}}}};
    case 5:
      return {"sweep",
              {{"states", {{"even", cat("even")}}},
               {"scheme", {{"scheme", "unbalanced4"}, {"t", 0.8}, {"r", 0.6}, {"beta", 4.0}, {"detector", detector(8, 0.5)}}},
               {"criteria", json::array({"variance", "fourth_order"})},
               {"phi", half_pi},
               {"sweep", {{"variable", "N"}, {"grid", {2, 4, 8, 16, 32, 64, 128}}}}}};
    case 6:
      return {"sweep",
              {{"states", {{"coherent", {{"coherent", {{"alpha", 1.0}}}}}, {"even", cat("even")}, {"odd", cat("odd")}}},
               {"scheme", {{"scheme", "balanced4"}, {"beta", 4.0}, {"detector", detector(8, 0.5)}}},
               {"criteria", json::array({"squeezing", "sum_variance"})},
               {"sweep", {{"variable", "phi"}, {"grid", phase_grid(256)}}}}};
    case 7:
      return {"thermal-lo",
              {{"states", {{"even", cat("even")}}},
               {"scheme", {{"scheme", "unbalanced4"}, {"t", 0.8}, {"r", 0.6}, {"beta", 4.0}, {"detector", detector(8, 1.0)}}},
               {"phi", half_pi},
               {"sweep", {{"variable", "nbar"}, {"grid", {{"start", 0.0}, {"stop", 0.5}, {"points", 11}}}}}}};
    case 8:
      return {"sweep",
              {{"states", {{"even", cat("even")}}},
               {"scheme", {{"scheme", "eight"}, {"beta", 4.0}, {"detector", detector(8, 0.5)}}},
               {"criteria", json::array({"x_variance", "p_variance", "xp_covariance"})},
               {"sweep", {{"variable", "phi"}, {"grid", phase_grid(64)}}}}};
    case 9:
      return {"sweep",
              {{"states", {{"even", {{"two_mode_cat", {{"alpha", 1.0}, {"parity", "even"}}}}}}},
               {"scheme", {{"scheme", "two_mode"}, {"beta", 4.0}, {"beta2", 4.0}, {"detector", detector(8, 0.5)}}},
               {"criteria", json::array({"two_mode_covariance", "x1_variance", "x2_variance"})},
               {"sweep", {{{"variable", "phi"}, {"grid", phase_grid(64)}}, {{"variable", "phi2"}, {"grid", phase_grid(64)}}}}}};
    default:
      throw InvalidArgument("no preset for figure " + std::to_string(figure) + "; choose 2, 4, 5, 6, 7, 8 or 9");
  }
}

}  // namespace clickhd::cli
