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
#include <string>
#include <variant>
#include <vector>

#include "clickhd/fock.hpp"
#include "clickhd/states.hpp"

namespace clickhd {

/// Any state the engine can evaluate. Coherent superpositions and their
/// mixtures use closed forms; Fock vectors go through the truncated-basis
/// oracle.
using State = std::variant<CoherentSuperposition, Mixture, FockVector>;

std::size_t mode_count(const State& state);

double expectation(const State& state, const FactorProduct& product,
                   std::vector<std::string>* warnings = nullptr);

/// True for a single coherent state or a mixture of single coherent states,
/// i.e. states with a nonnegative P function.
bool is_classical(const State& state);

}  // namespace clickhd
