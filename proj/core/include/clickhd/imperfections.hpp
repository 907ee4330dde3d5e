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

#include <string>
#include <vector>

#include "clickhd/click_engine.hpp"
#include "clickhd/witnesses.hpp"

namespace clickhd {

// ---------------------------------------------------------------------------
// Dark counts
// ---------------------------------------------------------------------------

struct DarkCountReport {
  bool passed = false;
  /// max |M_nu - T_nu M_0 T_nu| over entries of the deficit-moment matrix.
  double max_entry_deviation = 0.0;
  double variance_without_dark_counts = 0.0;
  double variance_with_dark_counts = 0.0;
  /// |var_nu - e^{-2 nu} var_0|.
  double variance_deviation = 0.0;
};

/// Checks that the matrix of <:(N - pi)^{m+m'}:> at dark rate nu equals the
/// nu = 0 matrix conjugated by diag(e^{-m nu}), and that the variance scales
/// by e^{-2 nu}. Tolerance 1e-10.
DarkCountReport dark_count_decomposition_check(const State& state, const ArmDescriptor& arm,
                                               double dark_rate, int order,
                                               double tolerance = 1e-10);

// ---------------------------------------------------------------------------
// Thermal local oscillator
// ---------------------------------------------------------------------------

/// Displaced thermal LO: P(gamma') = exp(-|gamma' - gamma|^2 / nbar) / (pi nbar).
struct ThermalLO {
  Complex mean{};
  double occupation = 0.0;
};

/// Closed form of the thermal average of <:exp(-lambda n(gamma')):>:
/// (1 / (1 + lambda nbar)) <:exp(-[lambda / (1 + nbar lambda)] n(gamma)):>.
double thermal_lo_expectation(const State& state, double lambda, Complex gamma, double occupation,
                              std::size_t mode = 0);

/// Same average by 2-D Gauss-Hermite integration over the LO amplitude.
double thermal_lo_expectation_quadrature(const State& state, double lambda, Complex gamma,
                                         double occupation, int order = 64, std::size_t mode = 0);

/// lambda / (1 + nbar lambda), the effective exponent after averaging.
double thermal_effective_exponent(double lambda, double occupation);

/// <:pi^m:> of an unbalanced arm whose LO is thermally broadened.
double thermal_lo_pi_moment(const State& state, const ArmDescriptor& arm, double occupation, int power);

/// Unbalanced variance criterion under a thermal LO of occupation nbar.
CriterionResult thermal_variance_criterion(const State& state, const ArmDescriptor& arm, double phi,
                                           double occupation);

// ---------------------------------------------------------------------------
// Spectral mode mismatch
// ---------------------------------------------------------------------------

/// Frequency-resolved beam splitter input. Inner products are
/// (a, b) = integral G(w) a^*(w) b(w) dw on a uniform grid.
struct SpectralSetup {
  std::vector<double> omega;
  std::vector<double> response;
  std::vector<Complex> signal_profile;
  std::vector<Complex> lo_profile;
  std::vector<Complex> transmission;
  std::vector<Complex> reflection;
  Complex beta{};

  /// Throws InvalidArgument naming the violated invariant: grid sizes,
  /// uniform spacing, G >= 0, |t|^2 + |r|^2 = 1 pointwise, unit-normalized
  /// profiles within 1e-8.
  void validate() const;
};

struct ModeMismatch {
  double efficiency = 0.0;   ///< eta_t = (t f_SI, t f_SI)
  Complex displacement{};    ///< gamma = -[(t f_SI, r f_LO) / (t f_SI, t f_SI)] beta
  double noise_rate = 0.0;   ///< nu-tilde, proportional to |beta|^2
};

ModeMismatch mode_mismatch_parameters(const SpectralSetup& setup);

/// Arm seen behind a mismatched beam splitter. The overlap efficiency
/// multiplies the detector efficiency; nu-tilde is a whole-detector rate and
/// enters each of the N diodes as nu-tilde / N.
ArmDescriptor mismatched_arm(const ModeMismatch& mismatch, const DetectorConfig& detector,
                             std::size_t mode = 0);

/// Gaussian spectral profiles on a uniform grid (n_omega >= 257 by default).
SpectralSetup gaussian_spectral_setup(double signal_center, double signal_width, double lo_center,
                                      double lo_width, Complex t, Complex r, Complex beta,
                                      double response_center = 0.0, double response_width = 0.0,
                                      int points = 257);

// ---------------------------------------------------------------------------
// Saturation and efficiency
// ---------------------------------------------------------------------------

struct SaturationPoint {
  double scale = 0.0;
  /// Total-variation distance of c_k to delta_{k,N}.
  double saturation_distance = 0.0;
  double top_probability = 0.0;
  double min_eigenvalue = 0.0;
  double variance = 0.0;
};

struct SaturationReport {
  std::vector<SaturationPoint> points;
  /// True when the input is classical and some criterion dropped below
  /// -1e-9 or a moment matrix had an eigenvalue below -1e-9.
  bool fake_nonclassicality = false;
};

/// Scales signal amplitudes and the arm displacement by sqrt(s) for each s
/// in `scales`. `order` is the moment-matrix order (even, <= N).
SaturationReport saturation_probe(const CoherentSuperposition& state, const ArmDescriptor& arm,
                                  const std::vector<double>& scales, int order = 2);
SaturationReport saturation_probe(const Mixture& state, const ArmDescriptor& arm,
                                  const std::vector<double>& scales, int order = 2);

struct Surface {
  std::vector<double> rows;     ///< first axis (e.g. eta)
  std::vector<double> columns;  ///< second axis (e.g. phi)
  std::vector<double> values;   ///< row-major
  double at(std::size_t row, std::size_t column) const { return values[row * columns.size() + column]; }
};

/// Variance criterion over an (eta, phi) grid; `arm` supplies everything
/// except the efficiency and the phase.
Surface efficiency_sweep(const State& state, const ArmDescriptor& arm, const std::vector<double>& etas,
                         const std::vector<double>& phis);

}  // namespace clickhd
