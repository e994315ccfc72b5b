// Copyright 2026 The corrwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corrwork {

/// Failure categories raised by the library. The numeric values are part of
/// the C API (see corrwork.h) and must not be reordered.
enum class ErrorCode {
  domain = 1,
  not_hermitian,
  not_orthonormal,
  not_normalized,
  unknown_species,
  zero_volume,
  not_a_piston,
  no_root,
  path_not_monotone,
  singularity,
  not_a_projector_pair,
  orthogonality_violation,
  invalid_step,
  invalid_argument,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::not_orthonormal: return "NotOrthonormal";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::unknown_species: return "UnknownSpecies";
    case ErrorCode::zero_volume: return "ZeroVolume";
    case ErrorCode::not_a_piston: return "NotAPiston";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::path_not_monotone: return "PathNotMonotone";
    case ErrorCode::singularity: return "Singularity";
    case ErrorCode::not_a_projector_pair: return "NotAProjectorPair";
    case ErrorCode::orthogonality_violation: return "OrthogonalityViolation";
    case ErrorCode::invalid_step: return "InvalidStep";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corrwork
