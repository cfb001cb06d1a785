// Copyright 2026 The discord-dynamics Authors
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

namespace discord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed a documented invariant (non-Hermitian matrix, negative
/// Bell-diagonal eigenvalue, malformed config field, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter fell outside its admissible interval.
class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A 4x4 matrix that was required to have X shape does not.
class StructuralError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The requested channel combination has no closed form here.
class UnsupportedScenario : public Error {
 public:
  using Error::Error;
};

/// A Kraus set violates completeness.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace discord
