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

#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clickhd/click_engine.hpp"
#include "clickhd/homodyne.hpp"

namespace clickhd {

/// Verdicts flip to nonclassical when a value drops below -1e-12.
inline constexpr double kVerdictTolerance = 1e-12;

/// Parameterization of M(x, y) = (<:(x + y pi)^{m + m'}:>)_{m, m'}.
struct MatrixVariant {
  double x = 0.0;
  double y = 1.0;
};

class MomentMatrix {
 public:
  MomentMatrix(int order, MatrixVariant variant, Eigen::MatrixXd entries);

  int order() const { return order_; }
  MatrixVariant variant() const { return variant_; }
  const Eigen::MatrixXd& entries() const { return entries_; }

  double determinant() const;
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tolerance = 1e-9) const;
  /// Determinants of the leading principal submatrices of size 1..K/2+1.
  std::vector<double> leading_minors() const;

 private:
  int order_;
  MatrixVariant variant_;
  Eigen::MatrixXd entries_;
};

/// Builds M^(K)(x, y) from raw moments mu_k = <:pi^k:>, k = 0..K.
/// Throws InvalidArgument if K is odd, negative or exceeds `apd_count`, or
/// if y = 0.
MomentMatrix moment_matrix(std::span<const double> raw_moments, int apd_count, int order,
                           MatrixVariant variant = {});
MomentMatrix moment_matrix(const State& state, const ArmDescriptor& arm, int order,
                           MatrixVariant variant = {});
MomentMatrix moment_matrix(const ClickDistribution& single_arm, int order, MatrixVariant variant = {});

/// Lower-triangular T with t_{m,k} = C(m,k) x^{m-k} y^k, so that
/// M(x, y) = T M(0, 1) T^T.
Eigen::MatrixXd congruence_transform(double x, double y, int size);

enum class Verdict { nonclassical, inconclusive };

struct CriterionResult {
  std::string id;
  double value = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::map<std::string, double> parameters;
};

CriterionResult make_result(std::string id, double value, std::map<std::string, double> parameters = {},
                            double tolerance = kVerdictTolerance);

const char* to_string(Verdict verdict);

/// Linear click observable sum_a c_a pi_a over the arms of a source.
using ClickForm = std::vector<double>;

/// <: prod_l (sum_a c_{l,a} pi_a) :> expanded into joint pi moments.
double linear_form_moment(const MomentSource& source, std::span<const ClickForm> forms);

/// <:Delta A Delta B:> = <:AB:> - <:A:><:B:>.
double normal_covariance(const MomentSource& source, const ClickForm& a, const ClickForm& b);

/// Single-arm sources: <:[Delta pi]^2:> and det M^(4).
double variance_value(const MomentSource& source, std::size_t arm = 0);
double fourth_order_value(const MomentSource& source, std::size_t arm = 0);

/// <:[Delta pi_1]^2:><:[Delta pi_2]^2:> - <:Delta pi_1 Delta pi_2:>^2.
double cross_correlation_value(const MomentSource& source, std::size_t arm1, std::size_t arm2);

/// Covariance minor of two linear observables.
double covariance_minor(const MomentSource& source, const ClickForm& a, const ClickForm& b);

/// Difference (or sum) form pi_plus -+ pi_minus over the scheme's arms.
ClickForm difference_form(const SchemeArms& arms, std::size_t mode = 0,
                          Quadrature quadrature = Quadrature::x);
ClickForm sum_form(const SchemeArms& arms, std::size_t mode = 0, Quadrature quadrature = Quadrature::x);

/// Unbalanced detection with arg(gamma) set to phi.
CriterionResult variance_criterion(const State& state, const ArmDescriptor& arm, double phi);

/// det M^(4)(phi) < 0. Requires N >= 4.
CriterionResult fourth_order_criterion(const State& state, const ArmDescriptor& arm, double phi);

CriterionResult cross_correlation_criterion(const State& state, const ArmDescriptor& arm1,
                                            const ArmDescriptor& arm2);

/// <:[Delta X(phi)]^2:> for a balanced pair.
CriterionResult nonlinear_squeezing(const State& state, const SchemeArms& arms, double phi,
                                    std::size_t mode = 0);

/// <:[Delta(pi_plus + pi_minus)]^2:>.
CriterionResult sum_variance(const State& state, const SchemeArms& arms, double phi,
                             std::size_t mode = 0);

struct EightPortCriteria {
  CriterionResult x_variance;
  CriterionResult p_variance;
  CriterionResult covariance;
};

/// Normally ordered Schroedinger-Robertson test on the eight-port scheme.
CriterionResult xp_covariance_criterion(const State& state, const SchemeArms& eight_port, double phi);
EightPortCriteria eight_port_criteria(const State& state, const SchemeArms& eight_port, double phi);

struct TwoModeCriteria {
  CriterionResult x1_variance;
  CriterionResult x2_variance;
  CriterionResult covariance;
};

TwoModeCriteria two_mode_criteria(const State& state, const SchemeArms& two_mode, double phi1,
                                  double phi2);

}  // namespace clickhd
