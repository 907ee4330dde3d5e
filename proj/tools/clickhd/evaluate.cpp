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

#include "clickhd/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clickhd/errors.hpp"
#include "clickhd/imperfections.hpp"
#include "clickhd/witnesses.hpp"

namespace clickhd::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double form_variance(const MomentSource& source, const ClickForm& form) {
  return normal_covariance(source, form, form);
}

}  // namespace

void set_variable(Point& point, const std::string& variable, double value) {
  if (variable == "phi") {
    point.phi = value;
  } else if (variable == "phi2") {
    point.phi2 = value;
  } else if (variable == "nbar") {
    point.nbar = value;
  } else if (variable == "N") {
    point.apd_count = static_cast<int>(std::lround(value));
  } else if (variable == "eta") {
    point.efficiency = value;
  } else if (variable == "nu") {
    point.dark_rate = value;
  } else {
    throw InvalidArgument("unknown sweep variable \"" + variable + "\"");
  }
}

io::SchemeConfig apply(const io::SchemeConfig& scheme, const Point& point) {
  io::SchemeConfig out = scheme;
  if (point.apd_count) out.detector = out.detector.with_apd_count(*point.apd_count);
  if (point.efficiency) out.detector = out.detector.with_efficiency(*point.efficiency);
  if (point.dark_rate) out.detector = out.detector.with_dark_rate(*point.dark_rate);
  return out;
}

SchemeArms phased_arms(const io::SchemeConfig& scheme, const Point& point) {
  auto arms = apply(scheme, point).arms().at_phase(point.phi, 0);
  if (scheme.kind == io::SchemeKind::two_mode) arms = arms.at_phase(point.phi2, 1);
  return arms;
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "mean",          "variance",    "fourth_order", "cross_correlation", "squeezing",   "sum_variance",
      "x_variance",    "p_variance",  "xp_covariance", "x1_variance",      "x2_variance", "two_mode_covariance"};
  return names;
}

double evaluate_from_source(const std::string& criterion, const MomentSource& source, const SchemeArms& arms) {
  if (criterion == "mean") {
    std::vector<int> powers(source.arm_count(), 0);
    powers[0] = 1;
    return source.moment(powers);
  }
  if (criterion == "variance") return variance_value(source, 0);
  if (criterion == "fourth_order") return source.apd_count(0) < 4 ? kNaN : fourth_order_value(source, 0);
  if (criterion == "cross_correlation") return cross_correlation_value(source, 0, 1);
  if (criterion == "squeezing" || criterion == "x_variance") return form_variance(source, difference_form(arms));
  if (criterion == "sum_variance") return form_variance(source, sum_form(arms));
  if (criterion == "p_variance") return form_variance(source, difference_form(arms, 0, Quadrature::p));
  if (criterion == "xp_covariance") {
    return covariance_minor(source, difference_form(arms), difference_form(arms, 0, Quadrature::p));
  }
  if (criterion == "x1_variance") return form_variance(source, difference_form(arms, 0));
  if (criterion == "x2_variance") return form_variance(source, difference_form(arms, 1));
  if (criterion == "two_mode_covariance") {
    return covariance_minor(source, difference_form(arms, 0), difference_form(arms, 1));
  }
  throw InvalidArgument("unknown criterion \"" + criterion + "\"");
}

double evaluate(const std::string& criterion, const State& state, const io::SchemeConfig& scheme,
                const Point& point) {
  const auto arms = phased_arms(scheme, point);
  if (point.nbar > 0.0) {
    if (criterion != "variance" || arms.size() != 1) {
      throw InvalidArgument("a thermal LO supports only the single-arm variance criterion");
    }
    return thermal_variance_criterion(state, arms.tagged()[0].arm, point.phi, point.nbar).value;
  }
  const StateMoments source(state, arms.descriptors());
  return evaluate_from_source(criterion, source, arms);
}

}  // namespace clickhd::cli
