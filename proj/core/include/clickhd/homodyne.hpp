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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "clickhd/click_engine.hpp"

namespace clickhd {

/// a_1 = t a_SI + r a_LO, a_2 = -r^* a_SI + t^* a_LO.
class BeamSplitter {
 public:
  /// Throws InvalidArgument unless |t|^2 + |r|^2 = 1 within 1e-12.
  BeamSplitter(Complex t, Complex r);
  static BeamSplitter balanced();

  Complex t() const { return t_; }
  Complex r() const { return r_; }

 private:
  Complex t_;
  Complex r_;
};

/// Coherent reference beam |beta>.
struct LocalOscillator {
  Complex beta{};
};

/// Role of an arm in the difference and sum observables. X = pi_plus -
/// pi_minus, P = pi_p_plus - pi_p_minus.
enum class ArmRole { single, plus, minus, p_plus, p_minus };

struct TaggedArm {
  ArmDescriptor arm;
  ArmRole role = ArmRole::single;
  /// Phase the scheme's phi refers to at construction: arg(gamma) for the
  /// unbalanced arm, arg(beta) for balanced schemes.
  double reference_phase = 0.0;
};

/// Arms produced by one homodyne scheme.
class SchemeArms {
 public:
  explicit SchemeArms(std::vector<TaggedArm> arms);

  const std::vector<TaggedArm>& tagged() const { return arms_; }
  std::vector<ArmDescriptor> descriptors() const;
  std::size_t size() const { return arms_.size(); }

  /// Index of the arm with `role` on `mode`; nullopt if absent.
  std::optional<std::size_t> find(ArmRole role, std::size_t mode = 0) const;
  /// As find(), but throws InvalidArgument when the arm is missing.
  std::size_t require(ArmRole role, std::size_t mode = 0) const;

  /// Rotates the LO of every arm on `mode` so that the scheme phase is phi.
  /// Displacements are linear in beta, so each gamma picks up
  /// exp(i (phi - reference_phase)).
  SchemeArms at_phase(double phi, std::size_t mode = 0) const;

  /// Rotates every arm's displacement by exp(i delta).
  SchemeArms rotated(double delta) const;

  /// Sum of intensity scales over the arms on `mode`.
  double total_scale(std::size_t mode = 0) const;

 private:
  std::vector<TaggedArm> arms_;
};

/// Two-arm four-port scheme: arm 1 (|t|^2, -r beta / t), arm 2
/// (|r|^2, t^* beta / r^*). Throws InvalidArgument when t or r vanishes.
SchemeArms four_port_arms(const BeamSplitter& bs, const LocalOscillator& lo,
                          const DetectorConfig& d1, const DetectorConfig& d2,
                          std::size_t mode = 0);

/// Detector behind output 1 only. phi = arg(gamma).
ArmDescriptor unbalanced_arm(const BeamSplitter& bs, const LocalOscillator& lo,
                             const DetectorConfig& detector, std::size_t mode = 0);

/// Balanced eight-port scheme with all four detectors sharing `detector`.
SchemeArms eight_port_arms(const LocalOscillator& lo, const DetectorConfig& detector);

/// Balanced four-port on each of two signal modes.
SchemeArms two_mode_arms(const LocalOscillator& lo1, const LocalOscillator& lo2,
                         const DetectorConfig& detector);

/// Input to a generic linear port network: coherent amplitudes on LO ports.
struct PortInput {
  std::size_t port;
  Complex amplitude;
};

/// Arms behind an arbitrary unitary port network with one signal input.
/// Row k of `unitary` gives output k. Unused ports carry vacuum and drop out
/// of every normally ordered expression. An output without signal
/// contribution is a constant LO background, folded into the dark rate.
/// Throws InvalidArgument unless U^dagger U = 1 within 1e-10.
std::vector<ArmDescriptor> port_network_arms(const Eigen::MatrixXcd& unitary, std::size_t signal_port,
                                             std::span<const PortInput> lo_inputs,
                                             std::span<const DetectorConfig> detectors,
                                             std::size_t mode = 0);

/// The eight-port input-output matrix (rows: detectors 1..4; columns: SI,
/// LO, vac.1, vac.2).
Eigen::MatrixXcd eight_port_unitary();

enum class Quadrature { x, p };

/// <:(pi_plus - pi_minus)^m:> on `mode` (or the p pair).
double difference_moment(const State& state, const SchemeArms& arms, int order,
                         std::size_t mode = 0, Quadrature quadrature = Quadrature::x);

/// <:(pi_plus + pi_minus)^m:>.
double sum_moment(const State& state, const SchemeArms& arms, int order, std::size_t mode = 0,
                  Quadrature quadrature = Quadrature::x);

}  // namespace clickhd
