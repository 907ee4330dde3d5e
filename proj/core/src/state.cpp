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

#include "clickhd/state.hpp"

#include <type_traits>

namespace clickhd {

std::size_t mode_count(const State& state) {
  return std::visit([](const auto& s) { return s.modes(); }, state);
}

double expectation(const State& state, const FactorProduct& product, std::vector<std::string>* warnings) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockVector>) {
          return fock_expectation(s, product, warnings);
        } else {
          return expectation(s, product);
        }
      },
      state);
}

bool is_classical(const State& state) {
  if (const auto* pure = std::get_if<CoherentSuperposition>(&state)) return pure->terms().size() == 1;
  if (const auto* mixed = std::get_if<Mixture>(&state)) {
    for (const auto& c : mixed->components()) {
      if (c.state.terms().size() != 1) return false;
    }
    return true;
  }
  return false;
}

}  // namespace clickhd
