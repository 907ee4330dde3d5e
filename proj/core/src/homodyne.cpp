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

#include "clickhd/homodyne.hpp"

#include <cmath>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

constexpr double kSignalFloor = 1e-14;

std::pair<std::size_t, std::size_t> quadrature_pair(const SchemeArms& arms, std::size_t mode, Quadrature q) {
  if (q == Quadrature::x) return {arms.require(ArmRole::plus, mode), arms.require(ArmRole::minus, mode)};
  return {arms.require(ArmRole::p_plus, mode), arms.require(ArmRole::p_minus, mode)};
}

double pair_moment(const State& state, const SchemeArms& arms, int order, std::size_t mode, Quadrature q,
                   double sign) {
  if (order < 0) throw InvalidArgument("moment order must be >= 0");
  const auto [plus, minus] = quadrature_pair(arms, mode, q);
  const std::vector<ArmDescriptor> pair = {arms.tagged()[plus].arm, arms.tagged()[minus].arm};
  double total = 0.0;
  for (int k = 0; k <= order; ++k) {
    const int powers[2] = {k, order - k};
    const double coefficient = numeric::binomial(order, k) * ((order - k) % 2 == 0 ? 1.0 : sign);
    total += coefficient * pi_moment(state, pair, powers);
  }
  return total;
}

}  // namespace

BeamSplitter::BeamSplitter(Complex t, Complex r) : t_(t), r_(r) {
  if (std::abs(std::norm(t) + std::norm(r) - 1.0) > 1e-12) {
    throw InvalidArgument("beam splitter needs |t|^2 + |r|^2 = 1");
  }
}

BeamSplitter BeamSplitter::balanced() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h};
}

SchemeArms::SchemeArms(std::vector<TaggedArm> arms) : arms_(std::move(arms)) {
  for (const auto& a : arms_) a.arm.validate();
}

std::vector<ArmDescriptor> SchemeArms::descriptors() const {
  std::vector<ArmDescriptor> out;
  out.reserve(arms_.size());
  for (const auto& a : arms_) out.push_back(a.arm);
  return out;
}

std::optional<std::size_t> SchemeArms::find(ArmRole role, std::size_t mode) const {
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    if (arms_[i].role == role && arms_[i].arm.mode == mode) return i;
  }
  return std::nullopt;
}

std::size_t SchemeArms::require(ArmRole role, std::size_t mode) const {
  if (auto i = find(role, mode)) return *i;
  throw InvalidArgument("scheme has no arm with the requested role");
}

SchemeArms SchemeArms::at_phase(double phi, std::size_t mode) const {
  auto arms = arms_;
  for (auto& a : arms) {
    if (a.arm.mode != mode) continue;
    a.arm.displacement *= std::polar(1.0, phi - a.reference_phase);
    a.reference_phase = phi;
  }
  return SchemeArms(std::move(arms));
}

SchemeArms SchemeArms::rotated(double delta) const {
  auto arms = arms_;
  for (auto& a : arms) {
    a.arm.displacement *= std::polar(1.0, delta);
    a.reference_phase += delta;
  }
  return SchemeArms(std::move(arms));
}

double SchemeArms::total_scale(std::size_t mode) const {
  double total = 0.0;
  for (const auto& a : arms_) {
    if (a.arm.mode == mode) total += a.arm.scale;
  }
  return total;
}

SchemeArms four_port_arms(const BeamSplitter& bs, const LocalOscillator& lo, const DetectorConfig& d1,
                          const DetectorConfig& d2, std::size_t mode) {
  if (bs.t() == Complex{} || bs.r() == Complex{}) {
    throw InvalidArgument("four-port scheme needs nonzero t and r");
  }
  const double phase = std::arg(lo.beta);
  TaggedArm first{{mode, std::norm(bs.t()), -bs.r() * lo.beta / bs.t(), d1}, ArmRole::plus, phase};
  TaggedArm second{{mode, std::norm(bs.r()), std::conj(bs.t()) * lo.beta / std::conj(bs.r()), d2},
                   ArmRole::minus, phase};
  return SchemeArms({first, second});
}

ArmDescriptor unbalanced_arm(const BeamSplitter& bs, const LocalOscillator& lo, const DetectorConfig& detector,
                             std::size_t mode) {
  if (bs.t() == Complex{}) throw InvalidArgument("unbalanced scheme needs nonzero t");
  ArmDescriptor arm{mode, std::norm(bs.t()), -bs.r() * lo.beta / bs.t(), detector};
  arm.validate();
  return arm;
}

Eigen::MatrixXcd eight_port_unitary() {
  const Complex i{0.0, 1.0};
  Eigen::MatrixXcd u(4, 4);
  u << -1.0, 1.0, 1.0, -i,
        1.0, 1.0, -1.0, -i,
        1.0, i, 1.0, -1.0,
        1.0, -i, 1.0, 1.0;
  return 0.5 * u;
}

std::vector<ArmDescriptor> port_network_arms(const Eigen::MatrixXcd& unitary, std::size_t signal_port,
                                             std::span<const PortInput> lo_inputs,
                                             std::span<const DetectorConfig> detectors, std::size_t mode) {
  const auto n = unitary.rows();
  if (unitary.cols() != n) throw InvalidArgument("port network matrix must be square");
  if (!(unitary.adjoint() * unitary).isApprox(Eigen::MatrixXcd::Identity(n, n), 1e-10)) {
    throw InvalidArgument("port network matrix is not unitary");
  }
  if (signal_port >= static_cast<std::size_t>(n)) throw InvalidArgument("signal port out of range");
  if (detectors.size() != static_cast<std::size_t>(n)) throw InvalidArgument("one detector per output is required");
  for (const auto& in : lo_inputs) {
    if (in.port >= static_cast<std::size_t>(n) || in.port == signal_port) {
      throw InvalidArgument("LO input port is invalid");
    }
  }
  std::vector<ArmDescriptor> arms;
  arms.reserve(detectors.size());
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex s = unitary(k, static_cast<Eigen::Index>(signal_port));
    Complex background{};
    for (const auto& in : lo_inputs) background += unitary(k, static_cast<Eigen::Index>(in.port)) * in.amplitude;
    const auto& d = detectors[static_cast<std::size_t>(k)];
    if (std::norm(s) > kSignalFloor) {
      arms.push_back({mode, std::norm(s), -background / s, d});
    } else {
      const double extra = d.efficiency() * std::norm(background) / d.apd_count();
      arms.push_back({mode, 0.0, Complex{}, d.with_dark_rate(d.dark_rate() + extra)});
    }
  }
  return arms;
}

SchemeArms eight_port_arms(const LocalOscillator& lo, const DetectorConfig& detector) {
  const PortInput input{1, lo.beta};
  const std::vector<DetectorConfig> detectors(4, detector);
  const auto arms = port_network_arms(eight_port_unitary(), 0, std::span<const PortInput>(&input, 1), detectors);
  const double phase = std::arg(lo.beta);
  return SchemeArms({{arms[0], ArmRole::minus, phase},
                     {arms[1], ArmRole::plus, phase},
                     {arms[2], ArmRole::p_plus, phase},
                     {arms[3], ArmRole::p_minus, phase}});
}

SchemeArms two_mode_arms(const LocalOscillator& lo1, const LocalOscillator& lo2, const DetectorConfig& detector) {
  auto first = four_port_arms(BeamSplitter::balanced(), lo1, detector, detector, 0).tagged();
  const auto second = four_port_arms(BeamSplitter::balanced(), lo2, detector, detector, 1).tagged();
  first.insert(first.end(), second.begin(), second.end());
  return SchemeArms(std::move(first));
}

double difference_moment(const State& state, const SchemeArms& arms, int order, std::size_t mode,
                         Quadrature quadrature) {
  return pair_moment(state, arms, order, mode, quadrature, -1.0);
}

double sum_moment(const State& state, const SchemeArms& arms, int order, std::size_t mode, Quadrature quadrature) {
  return pair_moment(state, arms, order, mode, quadrature, 1.0);
}

}  // namespace clickhd
