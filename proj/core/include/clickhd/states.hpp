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
#include <utility>
#include <vector>

#include "clickhd/numeric.hpp"

namespace clickhd {

enum class Parity { even, odd };

/// One coherent-state product |a_1, ..., a_M> with its complex weight.
struct CoherentTerm {
  Complex coefficient;
  std::vector<Complex> amplitudes;
};

/// <a|b> for single-mode coherent states. Values below 1e-300 in
/// magnitude are returned as exactly zero.
Complex overlap(Complex a, Complex b);

/// A normalized pure state written as a finite sum of multimode coherent
/// states. Immutable once built; all constructors normalize.
class CoherentSuperposition {
 public:
  /// Normalizes `terms`. Throws InvalidArgument on an empty list, on
  /// non-finite entries or on amplitude lists of the wrong length, and
  /// DegenerateState when the norm vanishes.
  static CoherentSuperposition normalized(std::size_t modes, std::vector<CoherentTerm> terms);

  std::size_t modes() const { return modes_; }
  const std::vector<CoherentTerm>& terms() const { return terms_; }

  /// <psi|psi> recomputed from the overlap sum.
  double norm() const;

  /// Multiplies every amplitude by `factor` and renormalizes. Intensities
  /// scale with factor^2.
  CoherentSuperposition scaled(double factor) const;

 private:
  CoherentSuperposition(std::size_t modes, std::vector<CoherentTerm> terms)
      : modes_(modes), terms_(std::move(terms)) {}

  std::size_t modes_;
  std::vector<CoherentTerm> terms_;
};

CoherentSuperposition vacuum(std::size_t modes = 1);
CoherentSuperposition coherent(Complex alpha);
CoherentSuperposition coherent(std::vector<Complex> amplitudes);

/// (|alpha> +- |-alpha>) / sqrt(2[1 +- exp(-2|alpha|^2)]).
CoherentSuperposition make_cat(Complex alpha, Parity parity);

/// (|alpha, alpha> +- |-alpha, -alpha>) / sqrt(2[1 +- exp(-4|alpha|^2)]).
CoherentSuperposition make_two_mode_cat(Complex alpha, Parity parity);

/// Classical mixture of coherent superpositions. Weights are nonnegative
/// and renormalized to sum to one; all components share a mode count.
class Mixture {
 public:
  struct Component {
    double weight;
    CoherentSuperposition state;
  };

  static Mixture of(std::vector<Component> components);

  std::size_t modes() const { return components_.front().state.modes(); }
  const std::vector<Component>& components() const { return components_; }

 private:
  explicit Mixture(std::vector<Component> components) : components_(std::move(components)) {}
  std::vector<Component> components_;
};

/// Normally ordered factor exp(-lambda (a_m - gamma)^dagger (a_m - gamma)).
struct ExpFactor {
  std::size_t mode = 0;
  double lambda = 0.0;
  Complex gamma{};
};

/// prefactor * :prod_f exp(-lambda_f n_{m_f}(gamma_f)):. The empty product
/// is the identity.
struct FactorProduct {
  std::vector<ExpFactor> factors;
  double prefactor = 1.0;
};

/// Weight c_i^* c_j prod_m <a_im|a_jm> of one bra/ket term pair.
struct TermPair {
  Complex weight;
  const CoherentTerm* bra;
  const CoherentTerm* ket;
};

/// All term pairs with non-zero weight. The pointers refer into `state`.
std::vector<TermPair> term_pairs(const CoherentSuperposition& state);

/// <: prod_f exp(-lambda_f n(gamma_f)) :> by substituting a^dagger -> a_i^*,
/// a -> a_j in each term pair. Throws EvaluationError when the imaginary
/// residue exceeds 1e-10 relative to the magnitude of the pair sum.
double expectation(const CoherentSuperposition& state, const FactorProduct& product);
double expectation(const Mixture& state, const FactorProduct& product);

/// Sum of complex pair contributions, checked and reduced to its real part.
double hermitian_real_part(Complex sum, double scale, const char* what);

}  // namespace clickhd
