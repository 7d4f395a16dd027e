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

// Dense complex linear algebra shared by every other module. Matrices are
// Eigen::MatrixXcd; dimensions in this library stay below ~100, so all
// routines favour robustness over speed.

#include <complex>

#include <Eigen/Dense>

namespace fgsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for Hermiticity, positivity and normalization checks.
inline constexpr double kTolerance = 1e-10;

/// Split of a product space H_A (x) H_B; `b == 1` marks a single system.
struct BipartiteDims {
  int a = 1;
  int b = 1;

  int total() const noexcept { return a * b; }
  bool operator==(const BipartiteDims&) const = default;
};

enum class Subsystem { A, B };

struct Eigensystem {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // orthonormal columns, matching `values`
};

/// Throws ShapeMismatch for non-square or empty input and NumericalFailure
/// for non-finite entries.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

double hermiticity_residual(const ComplexMatrix& m);

/// Kronecker product, first factor major.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// |v><v|
ComplexMatrix outer(const ComplexVector& v);

Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double tol = kTolerance);

/// Largest singular value, as sqrt of the top eigenvalue of a^dagger a.
double spectral_norm(const ComplexMatrix& a);

/// Positive square root. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything more negative is NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol = kTolerance);

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep);

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem which);

}  // namespace fgsep
