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

#include "fgsep/error.hpp"

namespace fgsep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPsd: return "NotPSD";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NotUnbiased: return "NotUnbiased";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::IntersectingPairs: return "IntersectingPairs";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidPovm: return "InvalidPovm";
    case ErrorKind::InvalidMum: return "InvalidMum";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fgsep
