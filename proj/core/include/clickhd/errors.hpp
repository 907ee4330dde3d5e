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

#include <stdexcept>
#include <string>

namespace clickhd {

/// Base class of every exception thrown by clickhd.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range parameter,
/// mismatched sizes, malformed input file).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A requested state has vanishing norm, e.g. the odd cat at alpha = 0.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// A numerical result violated a consistency bound that only an
/// implementation defect can produce (imaginary residue of a Hermitian
/// expectation, probabilities well below zero).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace clickhd
