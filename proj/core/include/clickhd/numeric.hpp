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

#include <cmath>
#include <complex>

namespace clickhd {

using Complex = std::complex<double>;

namespace numeric {

/// log C(n, k) via lgamma. Callers guarantee 0 <= k <= n.
inline double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// C(n, k) as a double; exact product form up to n = 60, log-space beyond.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 60) {
    k = k < n - k ? k : n - k;
    double result = 1.0;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return std::round(result);
  }
  return std::exp(log_binomial(n, k));
}

/// exp(z) - 1 without cancellation for small |z|.
inline Complex expm1(Complex z) {
  const double a = z.real();
  const double b = z.imag();
  const double half_sin = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

template <class T>
T ipow(T base, int exponent) {
  T result{1.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace numeric
}  // namespace clickhd
