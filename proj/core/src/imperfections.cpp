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

#include "clickhd/imperfections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clickhd/errors.hpp"
#include "clickhd/quadrature.hpp"

namespace clickhd {
namespace {

constexpr double kFakeTolerance = 1e-9;

void check_thermal(double lambda, double occupation) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be finite and >= 0");
  if (!(occupation >= 0.0) || !std::isfinite(occupation)) throw InvalidArgument("thermal occupation must be >= 0");
}

double single_factor(const State& state, double lambda, Complex gamma, std::size_t mode) {
  FactorProduct product;
  if (lambda != 0.0) product.factors.push_back({mode, lambda, gamma});
  return expectation(state, product);
}

Complex inner(const SpectralSetup& s, const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<double> re(s.omega.size()), im(s.omega.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    const Complex v = s.response[i] * std::conj(a[i]) * b[i];
    re[i] = v.real();
    im[i] = v.imag();
  }
  const double step = s.omega[1] - s.omega[0];
  return {trapezoid(re, step), trapezoid(im, step)};
}

double profile_norm(const SpectralSetup& s, const std::vector<Complex>& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = std::norm(f[i]);
  return trapezoid(v, s.omega[1] - s.omega[0]);
}

std::vector<Complex> gaussian_profile(const std::vector<double>& omega, double center, double width) {
  std::vector<Complex> f(omega.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = (omega[i] - center) / width;
    f[i] = std::exp(-0.25 * d * d);
  }
  return f;
}

SaturationPoint saturation_point(const State& state, const ArmDescriptor& arm, double scale, int order) {
  SaturationPoint point;
  point.scale = scale;
  const auto dist = click_statistics(state, arm);
  point.top_probability = dist.probabilities().back();
  point.saturation_distance = std::max(0.0, 1.0 - point.top_probability);
  point.min_eigenvalue = moment_matrix(state, arm, order).min_eigenvalue();
  point.variance = variance_value(StateMoments(state, {arm}));
  return point;
}

template <typename Scale>
SaturationReport probe(bool classical, const ArmDescriptor& arm, const std::vector<double>& scales, int order,
                       Scale scaled_state) {
  SaturationReport report;
  for (double s : scales) {
    if (!(s >= 0.0)) throw InvalidArgument("saturation scale must be >= 0");
    ArmDescriptor scaled_arm = arm;
    scaled_arm.displacement *= std::sqrt(s);
    const State state = scaled_state(std::sqrt(s));
    auto point = saturation_point(state, scaled_arm, s, order);
    const auto matrix = moment_matrix(state, scaled_arm, order);
    if (classical && (point.variance < -kFakeTolerance || !matrix.is_positive_semidefinite(kFakeTolerance))) {
      report.fake_nonclassicality = true;
    }
    report.points.push_back(point);
  }
  return report;
}

}  // namespace

DarkCountReport dark_count_decomposition_check(const State& state, const ArmDescriptor& arm, double dark_rate,
                                               int order, double tolerance) {
  if (!(dark_rate >= 0.0)) throw InvalidArgument("dark rate must be >= 0");
  ArmDescriptor clean = arm;
  clean.detector = arm.detector.with_dark_rate(0.0);
  ArmDescriptor noisy = arm;
  noisy.detector = arm.detector.with_dark_rate(dark_rate);
  const MatrixVariant deficit{static_cast<double>(arm.detector.apd_count()), -1.0};
  const auto m0 = moment_matrix(state, clean, order, deficit).entries();
  const auto mnu = moment_matrix(state, noisy, order, deficit).entries();

  DarkCountReport report;
  double scale = 1.0;
  for (Eigen::Index i = 0; i < m0.rows(); ++i) {
    for (Eigen::Index j = 0; j < m0.cols(); ++j) {
      const double expected = std::exp(-static_cast<double>(i + j) * dark_rate) * m0(i, j);
      report.max_entry_deviation = std::max(report.max_entry_deviation, std::abs(mnu(i, j) - expected));
      scale = std::max(scale, std::abs(expected));
    }
  }
  report.variance_without_dark_counts = variance_value(StateMoments(state, {clean}));
  report.variance_with_dark_counts = variance_value(StateMoments(state, {noisy}));
  report.variance_deviation =
      std::abs(report.variance_with_dark_counts - std::exp(-2.0 * dark_rate) * report.variance_without_dark_counts);
  report.passed = report.max_entry_deviation <= tolerance * scale &&
                  report.variance_deviation <= tolerance * std::max(1.0, std::abs(report.variance_without_dark_counts));
  return report;
}

double thermal_effective_exponent(double lambda, double occupation) {
  check_thermal(lambda, occupation);
  return lambda / (1.0 + occupation * lambda);
}

double thermal_lo_expectation(const State& state, double lambda, Complex gamma, double occupation,
                              std::size_t mode) {
  const double effective = thermal_effective_exponent(lambda, occupation);
  return single_factor(state, effective, gamma, mode) / (1.0 + lambda * occupation);
}

double thermal_lo_expectation_quadrature(const State& state, double lambda, Complex gamma, double occupation,
                                         int order, std::size_t mode) {
  check_thermal(lambda, occupation);
  if (occupation == 0.0) return single_factor(state, lambda, gamma, mode);
  const auto rule = gauss_hermite(order);
  const double width = std::sqrt(occupation);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const Complex shifted = gamma + width * Complex{rule.nodes[i], rule.nodes[j]};
      total += rule.weights[i] * rule.weights[j] * single_factor(state, lambda, shifted, mode);
    }
  }
  return total / std::numbers::pi;
}

double thermal_lo_pi_moment(const State& state, const ArmDescriptor& arm, double occupation, int power) {
  arm.validate();
  if (power < 0) throw InvalidArgument("moment power must be >= 0");
  const double n = arm.detector.apd_count();
  double total = 0.0;
  for (int j = 0; j <= power; ++j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    total += sign * numeric::binomial(power, j) * std::exp(-j * arm.detector.dark_rate()) *
             thermal_lo_expectation(state, j * arm.unit_exponent(), arm.displacement, occupation, arm.mode);
  }
  return numeric::ipow(n, power) * total;
}

CriterionResult thermal_variance_criterion(const State& state, const ArmDescriptor& arm, double phi,
                                           double occupation) {
  ArmDescriptor rotated = arm;
  rotated.displacement = std::polar(std::abs(arm.displacement), phi);
  const double first = thermal_lo_pi_moment(state, rotated, occupation, 1);
  const double second = thermal_lo_pi_moment(state, rotated, occupation, 2);
  return make_result("thermal_variance", second - first * first, {{"phi", phi}, {"nbar", occupation}});
}

void SpectralSetup::validate() const {
  const std::size_t n = omega.size();
  if (n < 2) throw InvalidArgument("spectral grid needs at least two points");
  if (response.size() != n || signal_profile.size() != n || lo_profile.size() != n || transmission.size() != n ||
      reflection.size() != n) {
    throw InvalidArgument("spectral arrays must share the grid size");
  }
  const double step = omega[1] - omega[0];
  if (!(step > 0.0)) throw InvalidArgument("spectral grid must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(omega[i] - omega[i - 1] - step) > 1e-9 * std::max(1.0, std::abs(step))) {
      throw InvalidArgument("spectral grid must be uniform");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(response[i] >= 0.0)) throw InvalidArgument("response G must be >= 0");
    if (std::abs(std::norm(transmission[i]) + std::norm(reflection[i]) - 1.0) > 1e-10) {
      throw InvalidArgument("|t|^2 + |r|^2 = 1 must hold pointwise");
    }
  }
  if (std::abs(profile_norm(*this, signal_profile) - 1.0) > 1e-8) {
    throw InvalidArgument("signal profile must be unit-normalized");
  }
  if (std::abs(profile_norm(*this, lo_profile) - 1.0) > 1e-8) {
    throw InvalidArgument("LO profile must be unit-normalized");
  }
}

ModeMismatch mode_mismatch_parameters(const SpectralSetup& setup) {
  setup.validate();
  const std::size_t n = setup.omega.size();
  std::vector<Complex> tf(n), rf(n);
  for (std::size_t i = 0; i < n; ++i) {
    tf[i] = setup.transmission[i] * setup.signal_profile[i];
    rf[i] = setup.reflection[i] * setup.lo_profile[i];
  }
  const double eta = inner(setup, tf, tf).real();
  if (!(eta > 1e-300)) throw InvalidArgument("signal has zero overlap with the detector response");
  const Complex c = inner(setup, tf, rf) / eta;
  std::vector<Complex> residual(n);
  for (std::size_t i = 0; i < n; ++i) residual[i] = rf[i] - c * tf[i];
  ModeMismatch out;
  out.efficiency = eta;
  out.displacement = -c * setup.beta;
  out.noise_rate = std::norm(setup.beta) * std::max(0.0, inner(setup, residual, residual).real());
  return out;
}

ArmDescriptor mismatched_arm(const ModeMismatch& mismatch, const DetectorConfig& detector, std::size_t mode) {
  ArmDescriptor arm{mode, mismatch.efficiency, mismatch.displacement,
                    detector.with_dark_rate(detector.dark_rate() + mismatch.noise_rate / detector.apd_count())};
  arm.validate();
  return arm;
}

SpectralSetup gaussian_spectral_setup(double signal_center, double signal_width, double lo_center, double lo_width,
                                      Complex t, Complex r, Complex beta, double response_center,
                                      double response_width, int points) {
  if (!(signal_width > 0.0) || !(lo_width > 0.0)) throw InvalidArgument("profile widths must be positive");
  if (points < 2) throw InvalidArgument("spectral grid needs at least two points");
  const double reach = 10.0 * std::max(signal_width, lo_width);
  const double lo = std::min(signal_center, lo_center) - reach;
  const double hi = std::max(signal_center, lo_center) + reach;
  SpectralSetup s;
  s.omega.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) s.omega[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  s.response.assign(s.omega.size(), 1.0);
  if (response_width > 0.0) {
    for (std::size_t i = 0; i < s.omega.size(); ++i) {
      const double d = (s.omega[i] - response_center) / response_width;
      s.response[i] = std::exp(-0.5 * d * d);
    }
  }
  s.signal_profile = gaussian_profile(s.omega, signal_center, signal_width);
  s.lo_profile = gaussian_profile(s.omega, lo_center, lo_width);
  for (auto* f : {&s.signal_profile, &s.lo_profile}) {
    const double norm = std::sqrt(profile_norm(s, *f));
    for (auto& v : *f) v /= norm;
  }
  s.transmission.assign(s.omega.size(), t);
  s.reflection.assign(s.omega.size(), r);
  s.beta = beta;
  return s;
}

SaturationReport saturation_probe(const CoherentSuperposition& state, const ArmDescriptor& arm,
                                  const std::vector<double>& scales, int order) {
  return probe(is_classical(State{state}), arm, scales, order,
               [&](double f) { return State{state.scaled(f)}; });
}

SaturationReport saturation_probe(const Mixture& state, const ArmDescriptor& arm, const std::vector<double>& scales,
                                  int order) {
  return probe(is_classical(State{state}), arm, scales, order, [&](double f) {
    std::vector<Mixture::Component> components;
    for (const auto& c : state.components()) components.push_back({c.weight, c.state.scaled(f)});
    return State{Mixture::of(std::move(components))};
  });
}

Surface efficiency_sweep(const State& state, const ArmDescriptor& arm, const std::vector<double>& etas,
                         const std::vector<double>& phis) {
  Surface surface{etas, phis, {}};
  surface.values.reserve(etas.size() * phis.size());
  for (double eta : etas) {
    ArmDescriptor a = arm;
    a.detector = arm.detector.with_efficiency(eta);
    for (double phi : phis) surface.values.push_back(variance_criterion(state, a, phi).value);
  }
  return surface;
}

}  // namespace clickhd
