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

#include "clickhd/click_engine.hpp"
#include "clickhd/homodyne.hpp"
#include "clickhd/io.hpp"

namespace clickhd::cli {

/// Parameter overrides for one grid point.
struct Point {
  double phi = 0.0;
  double phi2 = 0.0;
  double nbar = 0.0;
  std::optional<int> apd_count;
  std::optional<double> efficiency;
  std::optional<double> dark_rate;
};

/// Applies a sweep variable ("phi", "phi2", "N", "eta", "nu", "nbar").
void set_variable(Point& point, const std::string& variable, double value);

io::SchemeConfig apply(const io::SchemeConfig& scheme, const Point& point);

/// Scheme arms rotated to the point's phases.
SchemeArms phased_arms(const io::SchemeConfig& scheme, const Point& point);

/// Criterion names: mean, variance, fourth_order, cross_correlation,
/// squeezing, sum_variance, x_variance, p_variance, xp_covariance,
/// x1_variance, x2_variance, two_mode_covariance.
const std::vector<std::string>& criterion_names();

/// Value of a criterion on any moment source laid out like `arms`. NaN when
/// the criterion does not apply (fourth order with N < 4).
double evaluate_from_source(const std::string& criterion, const MomentSource& source, const SchemeArms& arms);

/// Exact value at a grid point; a thermal LO (nbar > 0) supports only the
/// single-arm variance.
double evaluate(const std::string& criterion, const State& state, const io::SchemeConfig& scheme,
                const Point& point);

}  // namespace clickhd::cli
