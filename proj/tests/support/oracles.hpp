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

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "clickhd/click_engine.hpp"
#include "clickhd/states.hpp"

namespace clickhd::testing {

/// Dense state on at most two modes, psi(n1, n2) stored column-major in a
/// dim x dim matrix (a dim x 1 column for one mode).
struct DenseState {
  std::size_t modes = 1;
  int dim = 0;
  Eigen::MatrixXcd psi;
};

/// Expands coherent terms in the number basis and renormalizes.
DenseState dense_state(const CoherentSuperposition& state, int dim);

/// exp(g a^dagger - g^* a) built with a matrix exponential on dim + pad
/// levels, cropped to dim.
Eigen::MatrixXcd displacement_matrix(Complex gamma, int dim, int pad = 100);

/// D(gamma) (1 - lambda)^n D(gamma)^dagger, cropped after the product.
Eigen::MatrixXcd no_click_matrix(double lambda, Complex gamma, int dim, int pad = 100);

/// prefactor <psi| :prod exp(-lambda n(gamma)): |psi> by dense linear algebra.
double dense_expectation(const DenseState& state, const FactorProduct& product);

/// Direct detection with efficiency eta behind N diodes, computed from the
/// photon-number distribution.
std::vector<double> clicks_from_photon_numbers(const std::vector<double>& photons, int n, double eta);

std::vector<double> binomial_pmf(int n, double p);
std::vector<double> poisson_pmf(double mean, int n_max);

/// |<n|psi>|^2 of a single-mode dense state.
std::vector<double> photon_distribution(const DenseState& state);

/// Thermal average of <:exp(-lambda n(gamma')):> by a plain 2-D trapezoid
/// over the Gaussian kernel.
double thermal_average_trapezoid(const CoherentSuperposition& state, double lambda, Complex gamma, double nbar,
                                 int points = 241);

/// Seeded generators for property suites.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_in_disk(double radius);

  CoherentSuperposition superposition(std::size_t modes, int terms, double radius);
  Mixture coherent_mixture(std::size_t modes, int components, double radius);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace clickhd::testing
