// Copyright 2026 The fgsep Authors
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

namespace fgsep {

enum class ErrorKind {
  NotHermitian,
  NotPsd,
  NotNormalized,
  NotPermutation,
  NotOrthonormal,
  NotUnbiased,
  NotPrime,
  NotAPartition,
  IntersectingPairs,
  ShapeMismatch,
  DimensionMismatch,
  InvalidPovm,
  InvalidMum,
  InvalidState,
  RangeError,
  NoSignChange,
  NumericalFailure,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fgsep
