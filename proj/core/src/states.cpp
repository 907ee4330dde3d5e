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

#include "clickhd/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clickhd/errors.hpp"

namespace clickhd {
namespace {

constexpr double kOverlapFloor = 1e-300;
constexpr double kImaginaryTolerance = 1e-10;

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex raw_norm(const std::vector<CoherentTerm>& terms) {
  Complex sum{};
  for (const auto& bra : terms) {
    for (const auto& ket : terms) {
      Complex w = std::conj(bra.coefficient) * ket.coefficient;
      for (std::size_t m = 0; m < bra.amplitudes.size(); ++m) w *= overlap(bra.amplitudes[m], ket.amplitudes[m]);
      sum += w;
    }
  }
  return sum;
}

}  // namespace

Complex overlap(Complex a, Complex b) {
  const Complex exponent = -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b;
  const Complex value = std::exp(exponent);
  if (std::abs(value) < kOverlapFloor) return {};
  return value;
}

CoherentSuperposition CoherentSuperposition::normalized(std::size_t modes, std::vector<CoherentTerm> terms) {
  if (modes == 0) throw InvalidArgument("coherent superposition needs at least one mode");
  if (terms.empty()) throw InvalidArgument("coherent superposition needs at least one term");
  for (const auto& term : terms) {
    if (term.amplitudes.size() != modes) {
      throw InvalidArgument("term has " + std::to_string(term.amplitudes.size()) + " amplitudes, expected " +
                            std::to_string(modes));
    }
    if (!is_finite(term.coefficient)) throw InvalidArgument("non-finite term coefficient");
    for (Complex a : term.amplitudes) {
      if (!is_finite(a)) throw InvalidArgument("non-finite coherent amplitude");
    }
  }
  const double norm = raw_norm(terms).real();
  if (!(norm > 1e-24)) throw DegenerateState("coherent superposition has vanishing norm");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& term : terms) term.coefficient *= scale;
  return CoherentSuperposition(modes, std::move(terms));
}

double CoherentSuperposition::norm() const { return raw_norm(terms_).real(); }

CoherentSuperposition CoherentSuperposition::scaled(double factor) const {
  auto terms = terms_;
  for (auto& term : terms) {
    for (auto& a : term.amplitudes) a *= factor;
  }
  return normalized(modes_, std::move(terms));
}

CoherentSuperposition vacuum(std::size_t modes) {
  return CoherentSuperposition::normalized(modes, {{1.0, std::vector<Complex>(modes)}});
}

CoherentSuperposition coherent(Complex alpha) { return coherent(std::vector<Complex>{alpha}); }

CoherentSuperposition coherent(std::vector<Complex> amplitudes) {
  const std::size_t modes = amplitudes.size();
  return CoherentSuperposition::normalized(modes, {{1.0, std::move(amplitudes)}});
}

CoherentSuperposition make_cat(Complex alpha, Parity parity) {
  const double sign = parity == Parity::even ? 1.0 : -1.0;
  const double norm2 = 2.0 * (1.0 + sign * std::exp(-2.0 * std::norm(alpha)));
  if (norm2 < 1e-24) throw DegenerateState("odd cat state at alpha = 0 has vanishing norm");
  const double c = 1.0 / std::sqrt(norm2);
  return CoherentSuperposition::normalized(1, {{c, {alpha}}, {sign * c, {-alpha}}});
}

CoherentSuperposition make_two_mode_cat(Complex alpha, Parity parity) {
  const double sign = parity == Parity::even ? 1.0 : -1.0;
  const double norm2 = 2.0 * (1.0 + sign * std::exp(-4.0 * std::norm(alpha)));
  if (norm2 < 1e-24) throw DegenerateState("odd two-mode cat state at alpha = 0 has vanishing norm");
  const double c = 1.0 / std::sqrt(norm2);
  return CoherentSuperposition::normalized(2, {{c, {alpha, alpha}}, {sign * c, {-alpha, -alpha}}});
}

Mixture Mixture::of(std::vector<Component> components) {
  if (components.empty()) throw InvalidArgument("mixture needs at least one component");
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) throw InvalidArgument("mixture weights must be >= 0");
    if (c.state.modes() != components.front().state.modes()) {
      throw InvalidArgument("mixture components differ in mode count");
    }
    total += c.weight;
  }
  if (!(total > 0.0)) throw InvalidArgument("mixture weights sum to zero");
  for (auto& c : components) c.weight /= total;
  return Mixture(std::move(components));
}

std::vector<TermPair> term_pairs(const CoherentSuperposition& state) {
  std::vector<TermPair> pairs;
  const auto& terms = state.terms();
  pairs.reserve(terms.size() * terms.size());
  for (const auto& bra : terms) {
    for (const auto& ket : terms) {
      Complex w = std::conj(bra.coefficient) * ket.coefficient;
      for (std::size_t m = 0; m < state.modes(); ++m) w *= overlap(bra.amplitudes[m], ket.amplitudes[m]);
      if (w != Complex{}) pairs.push_back({w, &bra, &ket});
    }
  }
  return pairs;
}

double hermitian_real_part(Complex sum, double scale, const char* what) {
  if (std::abs(sum.imag()) > kImaginaryTolerance * std::max(1.0, scale)) {
    throw EvaluationError(std::string(what) + ": imaginary residue " + std::to_string(sum.imag()) +
                          " exceeds tolerance");
  }
  return sum.real();
}

double expectation(const CoherentSuperposition& state, const FactorProduct& product) {
  for (const auto& f : product.factors) {
    if (f.mode >= state.modes()) throw InvalidArgument("factor refers to a mode outside the state");
    if (!std::isfinite(f.lambda)) throw InvalidArgument("factor exponent must be finite");
  }
  Complex sum{};
  double scale = 0.0;
  for (const auto& pair : term_pairs(state)) {
    Complex exponent{};
    for (const auto& f : product.factors) {
      const Complex bra = std::conj(pair.bra->amplitudes[f.mode] - f.gamma);
      const Complex ket = pair.ket->amplitudes[f.mode] - f.gamma;
      exponent -= f.lambda * bra * ket;
    }
    const Complex contribution = pair.weight * std::exp(exponent);
    sum += contribution;
    scale += std::abs(contribution);
  }
  return product.prefactor * hermitian_real_part(sum, scale, "expectation");
}

double expectation(const Mixture& state, const FactorProduct& product) {
  double total = 0.0;
  for (const auto& c : state.components()) total += c.weight * expectation(c.state, product);
  return total;
}

}  // namespace clickhd
