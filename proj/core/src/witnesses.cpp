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

#include "clickhd/witnesses.hpp"

#include <cmath>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

ClickForm unit_form(std::size_t size, std::size_t arm) {
  if (arm >= size) throw InvalidArgument("arm index out of range");
  ClickForm form(size, 0.0);
  form[arm] = 1.0;
  return form;
}

std::vector<double> raw_single_arm(const MomentSource& source, std::size_t arm, int order) {
  std::vector<double> raw(static_cast<std::size_t>(order) + 1);
  std::vector<int> powers(source.arm_count(), 0);
  for (int k = 0; k <= order; ++k) {
    powers[arm] = k;
    raw[static_cast<std::size_t>(k)] = source.moment(powers);
  }
  return raw;
}

ArmDescriptor with_phase(ArmDescriptor arm, double phi) {
  arm.displacement = std::polar(std::abs(arm.displacement), phi);
  return arm;
}

std::pair<ClickForm, ClickForm> pair_forms(const SchemeArms& arms, std::size_t mode, Quadrature q, double sign) {
  const ArmRole plus = q == Quadrature::x ? ArmRole::plus : ArmRole::p_plus;
  const ArmRole minus = q == Quadrature::x ? ArmRole::minus : ArmRole::p_minus;
  return {unit_form(arms.size(), arms.require(plus, mode)),
          [&] {
            ClickForm f(arms.size(), 0.0);
            f[arms.require(minus, mode)] = sign;
            return f;
          }()};
}

ClickForm combined_form(const SchemeArms& arms, std::size_t mode, Quadrature q, double sign) {
  auto [form, other] = pair_forms(arms, mode, q, sign);
  for (std::size_t i = 0; i < form.size(); ++i) form[i] += other[i];
  return form;
}

}  // namespace

MomentMatrix::MomentMatrix(int order, MatrixVariant variant, Eigen::MatrixXd entries)
    : order_(order), variant_(variant), entries_(std::move(entries)) {
  if (order < 0 || order % 2 != 0) throw InvalidArgument("moment matrix order must be even and >= 0");
  const auto size = static_cast<Eigen::Index>(order / 2 + 1);
  if (entries_.rows() != size || entries_.cols() != size) throw InvalidArgument("moment matrix has the wrong size");
}

double MomentMatrix::determinant() const {
  if (entries_.rows() <= 3) return entries_.determinant();
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(entries_);
  return ldlt.vectorD().prod();
}

double MomentMatrix::min_eigenvalue() const {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool MomentMatrix::is_positive_semidefinite(double tolerance) const {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev(0) >= -tolerance * scale;
}

std::vector<double> MomentMatrix::leading_minors() const {
  std::vector<double> minors;
  for (Eigen::Index k = 1; k <= entries_.rows(); ++k) {
    minors.push_back(MomentMatrix(static_cast<int>(2 * (k - 1)), variant_, entries_.topLeftCorner(k, k)).determinant());
  }
  return minors;
}

MomentMatrix moment_matrix(std::span<const double> raw_moments, int apd_count, int order, MatrixVariant variant) {
  if (order < 0 || order % 2 != 0) throw InvalidArgument("moment matrix order must be even and >= 0");
  if (order > apd_count) throw InvalidArgument("moment matrix order exceeds the APD count");
  if (variant.y == 0.0) throw InvalidArgument("variant y must be nonzero");
  if (raw_moments.size() < static_cast<std::size_t>(order) + 1) throw InvalidArgument("too few raw moments");
  std::vector<double> shifted(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 0; n <= order; ++n) {
    for (int j = 0; j <= n; ++j) {
      shifted[static_cast<std::size_t>(n)] += numeric::binomial(n, j) * numeric::ipow(variant.x, n - j) *
                                              numeric::ipow(variant.y, j) * raw_moments[static_cast<std::size_t>(j)];
    }
  }
  const int size = order / 2 + 1;
  Eigen::MatrixXd entries(size, size);
  for (int m = 0; m < size; ++m) {
    for (int k = 0; k < size; ++k) entries(m, k) = shifted[static_cast<std::size_t>(m + k)];
  }
  return MomentMatrix(order, variant, std::move(entries));
}

MomentMatrix moment_matrix(const State& state, const ArmDescriptor& arm, int order, MatrixVariant variant) {
  if (order < 0 || order > arm.detector.apd_count()) throw InvalidArgument("moment matrix order out of range");
  const StateMoments source(state, {arm});
  return moment_matrix(raw_single_arm(source, 0, order), arm.detector.apd_count(), order, variant);
}

MomentMatrix moment_matrix(const ClickDistribution& single_arm, int order, MatrixVariant variant) {
  if (single_arm.arm_count() != 1) throw InvalidArgument("moment matrix needs a single-arm distribution");
  const int n = single_arm.sizes()[0];
  if (order < 0 || order > n) throw InvalidArgument("moment matrix order out of range");
  const StatisticsMoments source(single_arm);
  return moment_matrix(raw_single_arm(source, 0, order), n, order, variant);
}

Eigen::MatrixXd congruence_transform(double x, double y, int size) {
  if (y == 0.0) throw InvalidArgument("congruence transform needs y != 0");
  if (size < 1) throw InvalidArgument("congruence transform size must be >= 1");
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(size, size);
  for (int m = 0; m < size; ++m) {
    for (int k = 0; k <= m; ++k) t(m, k) = numeric::binomial(m, k) * numeric::ipow(x, m - k) * numeric::ipow(y, k);
  }
  return t;
}

CriterionResult make_result(std::string id, double value, std::map<std::string, double> parameters,
                            double tolerance) {
  return {std::move(id), value, value < -tolerance ? Verdict::nonclassical : Verdict::inconclusive,
          std::move(parameters)};
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::nonclassical ? "nonclassical" : "inconclusive";
}

double linear_form_moment(const MomentSource& source, std::span<const ClickForm> forms) {
  const std::size_t arms = source.arm_count();
  for (const auto& f : forms) {
    if (f.size() != arms) throw InvalidArgument("click form length does not match the arm count");
  }
  std::map<std::vector<int>, double> grouped;
  std::vector<std::size_t> choice(forms.size(), 0);
  while (true) {
    double coefficient = 1.0;
    std::vector<int> powers(arms, 0);
    for (std::size_t l = 0; l < forms.size(); ++l) {
      coefficient *= forms[l][choice[l]];
      ++powers[choice[l]];
    }
    if (coefficient != 0.0) grouped[powers] += coefficient;
    std::size_t l = 0;
    for (; l < forms.size(); ++l) {
      if (++choice[l] < arms) break;
      choice[l] = 0;
    }
    if (l == forms.size()) break;
  }
  double total = 0.0;
  for (const auto& [powers, coefficient] : grouped) total += coefficient * source.moment(powers);
  return total;
}

double normal_covariance(const MomentSource& source, const ClickForm& a, const ClickForm& b) {
  const ClickForm both[2] = {a, b};
  return linear_form_moment(source, both) - linear_form_moment(source, std::span<const ClickForm>(&a, 1)) *
                                                linear_form_moment(source, std::span<const ClickForm>(&b, 1));
}

double variance_value(const MomentSource& source, std::size_t arm) {
  const auto e = unit_form(source.arm_count(), arm);
  return normal_covariance(source, e, e);
}

double fourth_order_value(const MomentSource& source, std::size_t arm) {
  if (arm >= source.arm_count()) throw InvalidArgument("arm index out of range");
  return moment_matrix(raw_single_arm(source, arm, 4), source.apd_count(arm), 4).determinant();
}

double covariance_minor(const MomentSource& source, const ClickForm& a, const ClickForm& b) {
  const double ab = normal_covariance(source, a, b);
  return normal_covariance(source, a, a) * normal_covariance(source, b, b) - ab * ab;
}

double cross_correlation_value(const MomentSource& source, std::size_t arm1, std::size_t arm2) {
  return covariance_minor(source, unit_form(source.arm_count(), arm1), unit_form(source.arm_count(), arm2));
}

ClickForm difference_form(const SchemeArms& arms, std::size_t mode, Quadrature quadrature) {
  return combined_form(arms, mode, quadrature, -1.0);
}

ClickForm sum_form(const SchemeArms& arms, std::size_t mode, Quadrature quadrature) {
  return combined_form(arms, mode, quadrature, 1.0);
}

CriterionResult variance_criterion(const State& state, const ArmDescriptor& arm, double phi) {
  const StateMoments source(state, {with_phase(arm, phi)});
  return make_result("variance", variance_value(source), {{"phi", phi}, {"N", arm.detector.apd_count()}});
}

CriterionResult fourth_order_criterion(const State& state, const ArmDescriptor& arm, double phi) {
  if (arm.detector.apd_count() < 4) throw InvalidArgument("fourth-order criterion needs N >= 4");
  const StateMoments source(state, {with_phase(arm, phi)});
  return make_result("fourth_order", fourth_order_value(source), {{"phi", phi}, {"N", arm.detector.apd_count()}});
}

CriterionResult cross_correlation_criterion(const State& state, const ArmDescriptor& arm1,
                                            const ArmDescriptor& arm2) {
  const StateMoments source(state, {arm1, arm2});
  return make_result("cross_correlation", cross_correlation_value(source, 0, 1));
}

CriterionResult nonlinear_squeezing(const State& state, const SchemeArms& arms, double phi, std::size_t mode) {
  const auto rotated = arms.at_phase(phi, mode);
  const StateMoments source(state, rotated.descriptors());
  const auto x = difference_form(rotated, mode);
  return make_result("nonlinear_squeezing", normal_covariance(source, x, x), {{"phi", phi}});
}

CriterionResult sum_variance(const State& state, const SchemeArms& arms, double phi, std::size_t mode) {
  const auto rotated = arms.at_phase(phi, mode);
  const StateMoments source(state, rotated.descriptors());
  const auto s = sum_form(rotated, mode);
  return make_result("sum_variance", normal_covariance(source, s, s), {{"phi", phi}});
}

EightPortCriteria eight_port_criteria(const State& state, const SchemeArms& eight_port, double phi) {
  const auto rotated = eight_port.at_phase(phi);
  const StateMoments source(state, rotated.descriptors());
  const auto x = difference_form(rotated, 0, Quadrature::x);
  const auto p = difference_form(rotated, 0, Quadrature::p);
  const double vx = normal_covariance(source, x, x);
  const double vp = normal_covariance(source, p, p);
  const double cxp = normal_covariance(source, x, p);
  return {make_result("x_variance", vx, {{"phi", phi}}), make_result("p_variance", vp, {{"phi", phi}}),
          make_result("xp_covariance", vx * vp - cxp * cxp, {{"phi", phi}})};
}

CriterionResult xp_covariance_criterion(const State& state, const SchemeArms& eight_port, double phi) {
  return eight_port_criteria(state, eight_port, phi).covariance;
}

TwoModeCriteria two_mode_criteria(const State& state, const SchemeArms& two_mode, double phi1, double phi2) {
  const auto rotated = two_mode.at_phase(phi1, 0).at_phase(phi2, 1);
  const StateMoments source(state, rotated.descriptors());
  const auto x1 = difference_form(rotated, 0);
  const auto x2 = difference_form(rotated, 1);
  const double v1 = normal_covariance(source, x1, x1);
  const double v2 = normal_covariance(source, x2, x2);
  const double c = normal_covariance(source, x1, x2);
  const std::map<std::string, double> params = {{"phi1", phi1}, {"phi2", phi2}};
  return {make_result("x1_variance", v1, params), make_result("x2_variance", v2, params),
          make_result("two_mode_covariance", v1 * v2 - c * c, params)};
}

}  // namespace clickhd
