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

#include "clickhd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Applies `op` to the index of `mode` in a (levels)^modes tensor.
void apply_on_mode(std::vector<Complex>& tensor, const Eigen::MatrixXcd& op, std::size_t mode,
                   std::size_t modes, std::size_t levels) {
  const std::size_t stride = power(levels, modes - 1 - mode);
  const std::size_t outer = power(levels, mode);
  Eigen::VectorXcd slice(static_cast<Eigen::Index>(levels));
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < stride; ++i) {
      const std::size_t base = o * levels * stride + i;
      for (std::size_t n = 0; n < levels; ++n) slice(static_cast<Eigen::Index>(n)) = tensor[base + n * stride];
      const Eigen::VectorXcd out = op * slice;
      for (std::size_t n = 0; n < levels; ++n) tensor[base + n * stride] = out(static_cast<Eigen::Index>(n));
    }
  }
}

}  // namespace

FockVector::FockVector(std::size_t modes, int truncation, std::vector<Complex> amplitudes)
    : modes_(modes), truncation_(truncation), amplitudes_(std::move(amplitudes)) {
  if (modes == 0) throw InvalidArgument("Fock vector needs at least one mode");
  if (truncation < 0) throw InvalidArgument("Fock truncation must be >= 0");
  if (amplitudes_.size() != power(levels(), modes)) {
    throw InvalidArgument("Fock vector size does not match (truncation + 1)^modes");
  }
  double norm = 0.0;
  for (Complex a : amplitudes_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "Fock vector is not normalized at truncation " << truncation << " (norm " << norm << ")";
    throw InvalidArgument(msg.str());
  }
}

FockVector FockVector::number_state(std::vector<int> occupations, int truncation) {
  const std::size_t levels = static_cast<std::size_t>(truncation) + 1;
  std::vector<Complex> amplitudes(power(levels, occupations.size()));
  std::size_t flat = 0;
  for (int n : occupations) {
    if (n < 0 || n > truncation) throw InvalidArgument("occupation outside the truncated basis");
    flat = flat * levels + static_cast<std::size_t>(n);
  }
  amplitudes.at(flat) = 1.0;
  return FockVector(occupations.size(), truncation, std::move(amplitudes));
}

Complex FockVector::amplitude(std::span<const int> occupations) const {
  if (occupations.size() != modes_) throw InvalidArgument("occupation list has the wrong length");
  std::size_t flat = 0;
  for (int n : occupations) {
    if (n < 0 || n > truncation_) return {};
    flat = flat * levels() + static_cast<std::size_t>(n);
  }
  return amplitudes_[flat];
}

double FockVector::boundary_amplitude() const {
  double largest = 0.0;
  const std::size_t d = levels();
  for (std::size_t flat = 0; flat < amplitudes_.size(); ++flat) {
    std::size_t rest = flat;
    bool edge = false;
    for (std::size_t m = 0; m < modes_; ++m) {
      if (rest % d == d - 1) edge = true;
      rest /= d;
    }
    if (edge) largest = std::max(largest, std::abs(amplitudes_[flat]));
  }
  return largest;
}

std::vector<double> FockVector::photon_number_distribution(std::size_t mode) const {
  if (mode >= modes_) throw InvalidArgument("mode outside the Fock vector");
  const std::size_t d = levels();
  const std::size_t stride = power(d, modes_ - 1 - mode);
  std::vector<double> weights(d, 0.0);
  for (std::size_t flat = 0; flat < amplitudes_.size(); ++flat) {
    weights[(flat / stride) % d] += std::norm(amplitudes_[flat]);
  }
  return weights;
}

FockVector to_fock(const CoherentSuperposition& state, int truncation) {
  if (truncation < 0) throw InvalidArgument("Fock truncation must be >= 0");
  const std::size_t d = static_cast<std::size_t>(truncation) + 1;
  const std::size_t modes = state.modes();
  std::vector<Complex> amplitudes(power(d, modes));
  std::vector<Complex> per_mode(modes * d);
  for (const auto& term : state.terms()) {
    for (std::size_t m = 0; m < modes; ++m) {
      const Complex alpha = term.amplitudes[m];
      Complex c = std::exp(-0.5 * std::norm(alpha));
      for (std::size_t n = 0; n < d; ++n) {
        per_mode[m * d + n] = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
      }
    }
    for (std::size_t flat = 0; flat < amplitudes.size(); ++flat) {
      Complex a = term.coefficient;
      std::size_t rest = flat;
      for (std::size_t m = modes; m-- > 0;) {
        a *= per_mode[m * d + rest % d];
        rest /= d;
      }
      amplitudes[flat] += a;
    }
  }
  return FockVector(modes, truncation, std::move(amplitudes));
}

Eigen::MatrixXcd normally_ordered_exponential(double total_lambda, Complex v, Complex u, double w,
                                              int truncation) {
  const int d = truncation + 1;
  Eigen::MatrixXcd creation = Eigen::MatrixXcd::Zero(d, d);  // <n|e^{v a^dagger}|k>
  Eigen::MatrixXcd annihilation = Eigen::MatrixXcd::Zero(d, d);  // <k|e^{u a}|n>
  for (int n = 0; n < d; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double magnitude =
          std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0)) - std::lgamma(n - k + 1.0));
      creation(n, k) = numeric::ipow(v, n - k) * magnitude;
      annihilation(k, n) = numeric::ipow(u, n - k) * magnitude;
    }
  }
  Eigen::VectorXcd diagonal(d);
  for (int k = 0; k < d; ++k) diagonal(k) = numeric::ipow(1.0 - total_lambda, k);
  return std::exp(-w) * creation * diagonal.asDiagonal() * annihilation;
}

double fock_expectation(const FockVector& state, const FactorProduct& product,
                        std::vector<std::string>* warnings) {
  const std::size_t modes = state.modes();
  std::vector<double> total_lambda(modes, 0.0);
  std::vector<double> offset(modes, 0.0);
  std::vector<Complex> v(modes), u(modes);
  std::vector<bool> touched(modes, false);
  for (const auto& f : product.factors) {
    if (f.mode >= modes) throw InvalidArgument("factor refers to a mode outside the state");
    total_lambda[f.mode] += f.lambda;
    v[f.mode] += f.lambda * f.gamma;
    u[f.mode] += f.lambda * std::conj(f.gamma);
    offset[f.mode] += f.lambda * std::norm(f.gamma);
    touched[f.mode] = true;
  }
  if (warnings) {
    const double edge = state.boundary_amplitude();
    if (edge > 1e-8) {
      std::ostringstream msg;
      msg << "Fock truncation " << state.truncation() << " may be insufficient: boundary amplitude " << edge;
      warnings->push_back(msg.str());
    }
    for (std::size_t m = 0; m < modes; ++m) {
      if (total_lambda[m] > 1.0) {
        std::ostringstream msg;
        msg << "aggregate exponent " << total_lambda[m] << " > 1 on mode " << m;
        warnings->push_back(msg.str());
      }
    }
  }
  std::vector<Complex> transformed = state.amplitudes();
  for (std::size_t m = 0; m < modes; ++m) {
    if (!touched[m]) continue;
    const auto op = normally_ordered_exponential(total_lambda[m], v[m], u[m], offset[m], state.truncation());
    apply_on_mode(transformed, op, m, modes, state.levels());
  }
  Complex sum{};
  double scale = 0.0;
  const auto& amplitudes = state.amplitudes();
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const Complex c = std::conj(amplitudes[i]) * transformed[i];
    sum += c;
    scale += std::abs(c);
  }
  return product.prefactor * hermitian_real_part(sum, scale, "fock_expectation");
}

}  // namespace clickhd
