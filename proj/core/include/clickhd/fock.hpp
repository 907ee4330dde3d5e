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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clickhd/numeric.hpp"
#include "clickhd/states.hpp"

namespace clickhd {

/// Dense state vector in the truncated Fock basis |n_1, ..., n_M>,
/// 0 <= n_m <= truncation. Mode 0 is the slowest-varying index. Used as an
/// independent oracle for the closed-form coherent-state evaluations.
class FockVector {
 public:
  /// Throws InvalidArgument unless the amplitudes have (truncation+1)^modes
  /// entries and unit norm within 1e-10.
  FockVector(std::size_t modes, int truncation, std::vector<Complex> amplitudes);

  static FockVector number_state(std::vector<int> occupations, int truncation);

  std::size_t modes() const { return modes_; }
  int truncation() const { return truncation_; }
  std::size_t levels() const { return static_cast<std::size_t>(truncation_) + 1; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  Complex amplitude(std::span<const int> occupations) const;

  /// Largest |amplitude| over basis states that sit on the truncation edge.
  double boundary_amplitude() const;

  /// Diagonal of the reduced density matrix of `mode`.
  std::vector<double> photon_number_distribution(std::size_t mode) const;

 private:
  std::size_t modes_;
  int truncation_;
  std::vector<Complex> amplitudes_;
};

/// Expands a coherent superposition in the truncated Fock basis. Throws
/// InvalidArgument if the truncated vector misses more than 1e-10 of norm.
FockVector to_fock(const CoherentSuperposition& state, int truncation);

/// Matrix of e^{-w} e^{v a^dagger} (1 - Lambda)^{n} e^{u a} on levels
/// 0..truncation. Entries are exact; no truncation error enters a matrix
/// element between retained levels.
Eigen::MatrixXcd normally_ordered_exponential(double total_lambda, Complex v, Complex u, double w,
                                              int truncation);

/// Expectation of a factor product evaluated with the normally ordered
/// operator built per mode in the Fock basis. Appends a message to
/// `warnings` when the boundary amplitude exceeds 1e-8 or when a per-mode
/// aggregate exponent exceeds one.
double fock_expectation(const FockVector& state, const FactorProduct& product,
                        std::vector<std::string>* warnings = nullptr);

}  // namespace clickhd
