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

#include "fgsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "fgsep/error.hpp"

namespace fgsep {

namespace {

void require_dims(const ComplexMatrix& m, BipartiteDims dims, const char* what) {
  require_square_finite(m, what);
  if (dims.a < 1 || dims.b < 1 || dims.total() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": matrix of dim " + std::to_string(m.rows()) +
                    " does not split as " + std::to_string(dims.a) + "x" + std::to_string(dims.b));
  }
}

}  // namespace

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": expected a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::NumericalFailure, std::string(what) + ": non-finite entry");
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix outer(const ComplexVector& v) {
  return v * v.adjoint();
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
  require_square_finite(h, "hermitian_eigensystem");
  const double residual = hermiticity_residual(h);
  if (residual > tol) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eigensystem: |h - h^dagger|_max = " + std::to_string(residual));
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "hermitian_eigensystem: solver did not converge");
  }
  Eigensystem result{solver.eigenvalues(), solver.eigenvectors()};

  // Reconstruction and orthonormality are re-checked rather than trusted.
  const double scale = std::max(1.0, max_abs(sym));
  const ComplexMatrix rebuilt =
      result.vectors * result.values.cast<Complex>().asDiagonal() * result.vectors.adjoint();
  const ComplexMatrix gram = result.vectors.adjoint() * result.vectors;
  const auto n = sym.rows();
  if (max_abs(rebuilt - sym) > 1e-10 * scale ||
      max_abs(gram - ComplexMatrix::Identity(n, n)) > 1e-10) {
    throw Error(ErrorKind::NumericalFailure, "hermitian_eigensystem: reconstruction residual too large");
  }
  return result;
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (!a.allFinite()) throw Error(ErrorKind::NumericalFailure, "spectral_norm: non-finite entry");
  const ComplexMatrix gram = a.adjoint() * a;
  const ComplexMatrix sym = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "spectral_norm: solver did not converge");
  }
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol) {
  const Eigensystem eig = hermitian_eigensystem(p, tol);
  if (eig.values(0) < -tol) {
    throw Error(ErrorKind::NotPsd, "psd_sqrt: minimum eigenvalue " + std::to_string(eig.values(0)));
  }
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix root = eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (root + root.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep) {
  require_dims(m, dims, "partial_trace");
  const int da = dims.a;
  const int db = dims.b;
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem which) {
  require_dims(m, dims, "partial_transpose");
  const int da = dims.a;
  const int db = dims.b;
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k)
      for (int j = 0; j < da; ++j)
        for (int l = 0; l < db; ++l) {
          // element <i k| m |j l>
          const Complex v = m(i * db + k, j * db + l);
          if (which == Subsystem::A) {
            out(j * db + k, i * db + l) = v;
          } else {
            out(i * db + l, j * db + k) = v;
          }
        }
  return out;
}

}  // namespace fgsep
