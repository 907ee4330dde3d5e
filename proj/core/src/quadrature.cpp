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

#include "clickhd/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "clickhd/errors.hpp"

namespace clickhd {

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw InvalidArgument("quadrature order must be >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const double root_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < order; ++i) {
    const double v = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = root_pi * v * v;
  }
  return rule;
}

double trapezoid(std::span<const double> values, double step) {
  if (values.empty()) throw InvalidArgument("trapezoid needs at least one sample");
  if (!(step > 0.0)) throw InvalidArgument("trapezoid step must be positive");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool edge = i == 0 || i + 1 == values.size();
    sum += edge ? 0.5 * values[i] : values[i];
  }
  return values.size() == 1 ? 0.0 : sum * step;
}

}  // namespace clickhd
