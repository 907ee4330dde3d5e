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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "clickhd/click_engine.hpp"
#include "clickhd/homodyne.hpp"
#include "clickhd/imperfections.hpp"
#include "clickhd/io.hpp"
#include "clickhd/sampler.hpp"
#include "clickhd/witnesses.hpp"
#include "oracles.hpp"

namespace clickhd::acceptance {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

std::vector<double> phase_grid(int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = 2.0 * kPi * i / points;
  return grid;
}

ArmDescriptor unbalanced(int n, double eta, double phi) {
  auto arm = unbalanced_arm(BeamSplitter(0.8, 0.6), {4.0}, DetectorConfig(n, eta));
  arm.displacement = std::polar(std::abs(arm.displacement), phi);
  return arm;
}

double variance_at(const State& state, const ArmDescriptor& arm) {
  return variance_value(StateMoments(state, {arm}));
}

Outcome figure2_statistics() {
  const ArmDescriptor arm{0, 1.0, 0.0, DetectorConfig(8, 1.0)};
  const auto clicks = click_statistics(coherent(2.0), arm).probabilities();
  const auto binomial = testing::binomial_pmf(8, 1.0 - std::exp(-0.5));
  double click_error = 0.0;
  for (std::size_t k = 0; k < clicks.size(); ++k) click_error = std::max(click_error, std::abs(clicks[k] - binomial[k]));
  double leak = 0.0;
  const auto even = photoelectric_statistics(make_cat(2.0, Parity::even), 1.0, 0.0, 40);
  const auto odd = photoelectric_statistics(make_cat(2.0, Parity::odd), 1.0, 0.0, 40);
  for (std::size_t n = 0; n < even.size(); ++n) leak = std::max(leak, std::abs(n % 2 ? even[n] : odd[n]));
  return {click_error < 1e-12 && leak < 1e-12,
          format("binomial deviation %.2e, wrong-parity photoelectric mass %.2e", click_error, leak)};
}

Outcome figure4_variance() {
  const auto even = make_cat(1.0, Parity::even);
  const auto odd = make_cat(1.0, Parity::odd);
  const double quarter = variance_at(even, unbalanced(8, 0.5, kPi / 2));
  const double three_quarter = variance_at(even, unbalanced(8, 0.5, 3 * kPi / 2));
  double odd_min = INFINITY;
  for (double phi : phase_grid(256)) odd_min = std::min(odd_min, variance_at(odd, unbalanced(8, 0.5, phi)));
  return {quarter < -1e-6 && three_quarter < -1e-6 && odd_min >= -1e-9,
          format("even cat %.6f at pi/2 and %.6f at 3pi/2, odd cat minimum %.3e", quarter, three_quarter, odd_min)};
}

Outcome figure5_orders() {
  const auto even = make_cat(1.0, Parity::even);
  const std::vector<int> sizes = {4, 8, 16, 32, 64, 128};
  std::vector<double> second, fourth;
  for (int n : sizes) {
    const StateMoments source(even, {unbalanced(n, 0.5, kPi / 2)});
    second.push_back(variance_value(source));
    fourth.push_back(fourth_order_value(source));
  }
  const bool stronger = std::abs(fourth[1]) > std::abs(second[1]) && fourth[1] < 0.0;
  bool monotone = true;
  for (std::size_t i = 1; i < sizes.size(); ++i) monotone = monotone && second[i] < second[i - 1] && fourth[i] < fourth[i - 1];
  const double second_change = std::abs(second[5] - second[4]) / std::abs(second[4]);
  const double fourth_change = std::abs(fourth[5] - fourth[4]) / std::abs(fourth[4]);
  std::string detail = format("N=8: |det4| %.4f vs |var| %.4f; N=64->128 change %.1f%% (var), %.1f%% (det4); monotone %s",
                              std::abs(fourth[1]), std::abs(second[1]), 100 * second_change, 100 * fourth_change,
                              monotone ? "yes" : "no");
  return {stronger && monotone && second_change < 0.1 && fourth_change < 0.1, detail};
}

Outcome figure6_balanced() {
  const DetectorConfig d(8, 0.5);
  const auto arms = four_port_arms(BeamSplitter::balanced(), {4.0}, d, d);
  const auto even = make_cat(1.0, Parity::even);
  const auto odd = make_cat(1.0, Parity::odd);
  const auto classical = coherent(1.0);
  double squeezing = INFINITY, sum = INFINITY, classical_min = INFINITY;
  for (double phi : phase_grid(256)) {
    squeezing = std::min(squeezing, nonlinear_squeezing(even, arms, phi).value);
    sum = std::min(sum, sum_variance(odd, arms, phi).value);
    classical_min = std::min({classical_min, nonlinear_squeezing(classical, arms, phi).value,
                              sum_variance(classical, arms, phi).value});
  }
  return {squeezing < 0.0 && sum < 0.0 && classical_min >= -1e-9,
          format("optimal squeezing %.6f (even), minimal sum variance %.6f (odd), coherent minimum %.3e", squeezing,
                 sum, classical_min)};
}

Outcome figure7_thermal() {
  const auto even = make_cat(1.0, Parity::even);
  const auto arm = unbalanced(8, 1.0, kPi / 2);
  std::vector<double> negativity;
  for (int i = 0; i <= 10; ++i) {
    negativity.push_back(std::max(0.0, -thermal_variance_criterion(even, arm, kPi / 2, 0.05 * i).value));
  }
  bool monotone = negativity[0] > 0.0;
  std::size_t last = 0;
  for (std::size_t i = 1; i < negativity.size(); ++i) {
    monotone = monotone && (negativity[i] < negativity[i - 1] || negativity[i - 1] == 0.0) && negativity[i] <= negativity[i - 1];
    if (negativity[i] > 0.0) last = i;
  }
  const double fraction = negativity[last] / negativity[0];
  testing::Random rng(7001);
  double deviation = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const State state = trial % 2 ? State(rng.superposition(1, rng.integer(1, 3), 1.5))
                                  : State(rng.coherent_mixture(1, rng.integer(1, 3), 1.5));
    const double lambda = rng.uniform(0.0, 1.0);
    const double nbar = rng.uniform(0.0, 3.0);
    const Complex gamma = rng.complex_in_disk(4.0);
    deviation = std::max(deviation, std::abs(thermal_lo_expectation(state, lambda, gamma, nbar) -
                                             thermal_lo_expectation_quadrature(state, lambda, gamma, nbar)));
  }
  return {monotone && fraction < 0.1 && deviation < 1e-7,
          format("negativity %.4f at nbar=0, %.4f (%.1f%%) at nbar=%.2f; closed form vs quadrature %.2e",
                 negativity[0], negativity[last], 100 * fraction, 0.05 * static_cast<double>(last), deviation)};
}

Outcome figure8_eight_port() {
  const auto arms = eight_port_arms({4.0}, DetectorConfig(8, 0.5));
  const auto even = make_cat(1.0, Parity::even);
  const auto grid = phase_grid(64);
  std::vector<double> x, p;
  int covariance_negative = 0;
  for (double phi : grid) {
    const auto c = eight_port_criteria(even, arms, phi);
    x.push_back(c.x_variance.value);
    p.push_back(c.p_variance.value);
    if (c.covariance.value < 0.0) ++covariance_negative;
  }
  const auto negative_count = [](const std::vector<double>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](double a) { return a < 0.0; }));
  };
  double conjugate = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) conjugate = std::max(conjugate, std::abs(x[(i + 16) % 64] - p[i]));
  const int nx = negative_count(x), np = negative_count(p);
  return {covariance_negative == 64 && nx > 0 && nx < 64 && np > 0 && np < 64 && conjugate < 1e-10,
          format("covariance negative on %d/64 phases, X on %d/64, P on %d/64, conjugate mismatch %.2e",
                 covariance_negative, nx, np, conjugate)};
}

bool arcs_around_quarter_turns(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  const auto negative = [&](int i) { return values[static_cast<std::size_t>((i % n + n) % n)] < 0.0; };
  if (!negative(n / 4) || !negative(3 * n / 4) || negative(0) || negative(n / 2)) return false;
  for (int i = 0; i < n; ++i) {
    if (!negative(i)) continue;
    const int centre = i < n / 2 ? n / 4 : 3 * n / 4;
    for (int j = std::min(i, centre); j <= std::max(i, centre); ++j) {
      if (!negative(j)) return false;
    }
  }
  return true;
}

Outcome figure9_two_mode() {
  const auto arms = two_mode_arms({4.0}, {4.0}, DetectorConfig(8, 0.5));
  const auto cat = make_two_mode_cat(1.0, Parity::even);
  const auto grid = phase_grid(64);
  int negative = 0;
  std::vector<double> x1, x2;
  for (double phi1 : grid) {
    for (double phi2 : grid) {
      const auto c = two_mode_criteria(cat, arms, phi1, phi2);
      if (c.covariance.value < 0.0) ++negative;
      if (phi2 == 0.0) x1.push_back(c.x1_variance.value);
      if (phi1 == 0.0) x2.push_back(c.x2_variance.value);
    }
  }
  const double share = negative / 4096.0;
  const bool local = arcs_around_quarter_turns(x1) && arcs_around_quarter_turns(x2);
  return {share >= 0.9 && local,
          format("minor negative on %.1f%% of the grid; single-mode negativity confined to arcs around pi/2, 3pi/2: %s",
                 100 * share, local ? "yes" : "no")};
}

ArmDescriptor random_arm(testing::Random& rng, int n) {
  return {0, rng.uniform(0.1, 1.0), rng.complex_in_disk(4.0),
          DetectorConfig(n, rng.uniform(0.1, 1.0), rng.uniform(0.0, 0.5))};
}

Outcome dark_count_decomposition() {
  testing::Random rng(8001);
  double worst = 0.0;
  int status_mismatch = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto mixture = rng.coherent_mixture(1, rng.integer(1, 4), 3.0);
    const int n = 2 * rng.integer(2, 4);
    const auto arm = random_arm(rng, n);
    const int order = trial % 2 ? 4 : 2;
    const auto reference = moment_matrix(mixture, arm, order);
    const int powers[1] = {1};
    const double mean = pi_moment(mixture, std::vector<ArmDescriptor>{arm}, powers);
    const MatrixVariant variants[3] = {{static_cast<double>(n), -1.0}, {-mean, 1.0},
                                       {rng.uniform(-n, n), rng.uniform(0.2, 2.0) * (trial % 3 ? 1 : -1)}};
    for (const auto& v : variants) {
      const auto m = moment_matrix(mixture, arm, order, v);
      const auto t = congruence_transform(v.x, v.y, order / 2 + 1);
      const Eigen::MatrixXd predicted = t * reference.entries() * t.transpose();
      worst = std::max(worst, (m.entries() - predicted).cwiseAbs().maxCoeff());
      if (m.is_positive_semidefinite() != reference.is_positive_semidefinite()) ++status_mismatch;
    }
  }
  return {worst < 1e-9 && status_mismatch == 0,
          format("max entry deviation %.2e over 150 matrices, PSD status mismatches %d", worst, status_mismatch)};
}

Outcome mode_mismatch_noise() {
  testing::Random rng(9001);
  double lowest = INFINITY, ratio_error = 0.0, matched = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = rng.uniform(0.05, 1.5);
    const Complex t = std::polar(std::cos(theta), rng.uniform(0.0, 2 * kPi));
    const Complex r = std::polar(std::sin(theta), rng.uniform(0.0, 2 * kPi));
    const Complex beta = rng.complex_in_disk(5.0) + 0.1;
    const double width = rng.uniform(0.5, 2.0);
    const double response = trial % 2 ? rng.uniform(0.5, 4.0) : 0.0;
    const auto setup = gaussian_spectral_setup(rng.uniform(-1, 1), width, rng.uniform(-1, 1), rng.uniform(0.5, 2.0), t,
                                               r, beta, rng.uniform(-1, 1), response);
    const double noise = mode_mismatch_parameters(setup).noise_rate;
    lowest = std::min(lowest, noise);
    const double s = rng.uniform(0.1, 10.0);
    auto scaled = setup;
    scaled.beta *= s;
    if (noise > 0.0) ratio_error = std::max(ratio_error, std::abs(mode_mismatch_parameters(scaled).noise_rate / noise / (s * s) - 1.0));
    const double centre = rng.uniform(-1, 1);
    const auto aligned = gaussian_spectral_setup(centre, width, centre, width, t, r, beta, rng.uniform(-1, 1), response);
    matched = std::max(matched, mode_mismatch_parameters(aligned).noise_rate);
  }
  return {lowest >= 0.0 && ratio_error < 1e-10 && matched < 1e-12,
          format("min noise %.3e, quadratic scaling error %.2e, perfect-overlap noise %.2e", lowest, ratio_error,
                 matched)};
}

struct RandomScheme {
  std::string name;
  SchemeArms arms;
  std::size_t modes = 1;
};

RandomScheme random_scheme(testing::Random& rng, int kind, int n) {
  const DetectorConfig d(n, rng.uniform(0.1, 1.0), rng.uniform(0.0, 0.3));
  const Complex beta = rng.complex_in_disk(5.0);
  const double theta = rng.uniform(0.2, 1.3);
  switch (kind) {
    case 0:
      return {"direct", SchemeArms({{ArmDescriptor{0, 1.0, 0.0, d}, ArmRole::single, 0.0}})};
    case 1:
      return {"unbalanced4",
              SchemeArms({{unbalanced_arm(BeamSplitter(std::cos(theta), std::sin(theta)), {beta}, d), ArmRole::single, 0.0}})};
    case 2:
      return {"four_port", four_port_arms(BeamSplitter(std::cos(theta), std::sin(theta)), {beta}, d, d)};
    case 3:
      return {"eight", eight_port_arms({beta}, d)};
    default:
      return {"two_mode", two_mode_arms({beta}, {rng.complex_in_disk(5.0)}, d), 2};
  }
}

State random_classical(testing::Random& rng, std::size_t modes, double max_photons, bool saturating) {
  const auto amplitude = [&] {
    const double photons = saturating ? rng.uniform(0.5, 1.0) : std::pow(rng.uniform(0.0, 1.0), 2);
    return std::polar(std::sqrt(max_photons * photons), rng.uniform(0.0, 2 * kPi));
  };
  const auto point = [&] {
    std::vector<Complex> a(modes);
    for (auto& v : a) v = amplitude();
    return coherent(std::move(a));
  };
  const int components = rng.integer(1, 3);
  if (components == 1) return point();
  std::vector<Mixture::Component> list;
  for (int c = 0; c < components; ++c) list.push_back({rng.uniform(0.1, 1.0), point()});
  return Mixture::of(std::move(list));
}

Outcome no_fake_nonclassicality() {
  testing::Random rng(10001);
  double lowest_criterion = INFINITY;
  int not_psd = 0;
  std::string worst_case;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::vector<int>{1, 2, 4, 8}[static_cast<std::size_t>(rng.integer(0, 3))];
    const auto scheme = random_scheme(rng, trial % 5, n);
    const auto state = random_classical(rng, scheme.modes, 10.0 * n, trial % 4 == 3);
    const auto arms = scheme.arms.descriptors();
    const StateMoments source(state, arms);
    const auto record = [&](double value, const char* what) {
      if (value < lowest_criterion) {
        lowest_criterion = value;
        worst_case = format("%s %s", scheme.name.c_str(), what);
      }
    };
    std::vector<ClickForm> forms;
    for (std::size_t a = 0; a < arms.size(); ++a) {
      record(variance_value(source, a), "variance");
      if (n >= 4) record(fourth_order_value(source, a), "fourth order");
      for (std::size_t b = a + 1; b < arms.size(); ++b) record(cross_correlation_value(source, a, b), "cross correlation");
      for (int order = 2; order <= std::min(n, 4); order += 2) {
        if (!moment_matrix(state, arms[a], order).is_positive_semidefinite(1e-9)) ++not_psd;
      }
    }
    if (scheme.arms.find(ArmRole::plus)) {
      for (std::size_t mode = 0; mode < scheme.modes; ++mode) {
        forms.push_back(difference_form(scheme.arms, mode));
        forms.push_back(sum_form(scheme.arms, mode));
      }
    }
    if (scheme.arms.find(ArmRole::p_plus)) forms.push_back(difference_form(scheme.arms, 0, Quadrature::p));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      record(normal_covariance(source, forms[i], forms[i]), "form variance");
      for (std::size_t j = i + 1; j < forms.size(); ++j) record(covariance_minor(source, forms[i], forms[j]), "covariance minor");
    }
  }
  return {lowest_criterion >= -1e-9 && not_psd == 0,
          format("lowest criterion %.3e (%s), non-PSD moment matrices %d, 25 of 100 cases at 5N-10N mean photons",
                 lowest_criterion, worst_case.c_str(), not_psd)};
}

Outcome cross_oracle() {
  testing::Random rng(11001);
  double expectation_error = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t modes = trial % 3 == 2 ? 2 : 1;
    const auto state = rng.superposition(modes, rng.integer(1, 3), 1.5);
    FactorProduct product;
    const int factors = rng.integer(1, 3);
    for (int f = 0; f < factors; ++f) {
      product.factors.push_back({static_cast<std::size_t>(rng.integer(0, static_cast<int>(modes) - 1)),
                                 rng.uniform(0.0, 1.0), rng.complex_in_disk(3.0)});
    }
    const auto dense = testing::dense_state(state, modes == 1 ? 40 : 28);
    expectation_error = std::max(expectation_error,
                                 std::abs(expectation(state, product) - testing::dense_expectation(dense, product)));
  }
  double moment_error = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int kind = trial % 5;
    const int n = rng.integer(1, kind >= 3 ? 4 : 8);
    const auto scheme = random_scheme(rng, kind, n);
    const State state = trial % 2 ? State(rng.superposition(scheme.modes, rng.integer(1, 3), 1.5))
                                  : State(rng.coherent_mixture(scheme.modes, rng.integer(1, 3), 2.0));
    const auto arms = scheme.arms.descriptors();
    const auto distribution = joint_click_statistics(state, arms);
    std::vector<int> powers(arms.size());
    for (auto& m : powers) m = rng.integer(0, std::min(n, 2));
    const double direct = pi_moment(state, arms, powers);
    moment_error = std::max(moment_error, std::abs(moments_from_statistics(distribution, powers) - direct) /
                                              std::max(1.0, std::abs(direct)));
  }
  return {expectation_error < 1e-8 && moment_error < 1e-8,
          format("closed form vs truncated Fock %.2e; moments from statistics vs direct %.2e", expectation_error,
                 moment_error)};
}

Outcome sampling() {
  const auto even = make_cat(1.0, Parity::even);
  const auto arm = unbalanced(8, 0.5, kPi / 2);
  const double exact = variance_at(even, arm);
  const auto distribution = click_statistics(even, arm);
  const auto histogram = sample(distribution, 1000000, 20261016);
  const auto statistic = [](const ClickDistribution& c) { return variance_value(StatisticsMoments(c)); };
  const auto estimate = estimate_statistic(histogram, statistic, {200, 99});
  const double deviation = std::abs(estimate.value - exact) / estimate.standard_error;
  const auto render = [&](std::uint64_t seed) {
    std::ostringstream out;
    io::write_histogram_csv(out, sample(distribution, 100000, seed));
    const auto e = estimate_statistic(sample(distribution, 100000, seed), statistic, {50, seed});
    out << format("%.17g %.17g", e.value, e.standard_error);
    return out.str();
  };
  const bool deterministic = render(5) == render(5) && render(5) != render(6);
  return {deviation < 5.0 && deterministic,
          format("estimate %.6f +- %.6f vs exact %.6f (%.2f SE); seeded output reproducible: %s", estimate.value,
                 estimate.standard_error, exact, deviation, deterministic ? "yes" : "no")};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"click statistics", figure2_statistics},
      {"unbalanced variance", figure4_variance},
      {"fourth order vs second order", figure5_orders},
      {"balanced four-port", figure6_balanced},
      {"thermal local oscillator", figure7_thermal},
      {"eight-port", figure8_eight_port},
      {"two-mode", figure9_two_mode},
      {"dark-count decomposition", dark_count_decomposition},
      {"mode-mismatch noise", mode_mismatch_noise},
      {"no fake nonclassicality", no_fake_nonclassicality},
      {"cross-oracle", cross_oracle},
      {"sampling", sampling},
  };
  return list;
}

}  // namespace
}  // namespace clickhd::acceptance

int main(int argc, char** argv) {
  using clickhd::acceptance::criteria;
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion 1-12]\n");
      return 2;
    }
  }
  if (selected < 0 || selected > static_cast<int>(criteria().size())) {
    std::fprintf(stderr, "criterion must be between 1 and %zu\n", criteria().size());
    return 2;
  }
  bool all_passed = true;
  for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) {
    if (selected != 0 && i != selected) continue;
    const auto& c = criteria()[static_cast<std::size_t>(i - 1)];
    clickhd::acceptance::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", outcome.pass ? "PASS" : "FAIL", i, c.name, outcome.detail.c_str());
    all_passed = all_passed && outcome.pass;
  }
  return all_passed ? 0 : 1;
}
