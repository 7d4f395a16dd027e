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

#include "fgsep/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fgsep/error.hpp"

namespace fgsep {

Ket::Ket(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0 || !amplitudes_.allFinite()) {
    throw Error(ErrorKind::NotNormalized, "ket must be non-empty and finite");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized, "ket norm is " + std::to_string(norm));
  }
}

Ket Ket::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::NotNormalized, "cannot normalize a zero or non-finite vector");
  }
  return Ket(v / norm);
}

Ket Ket::basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error(ErrorKind::RangeError, "basis ket index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return Ket(std::move(v));
}

StateResiduals state_residuals(const ComplexMatrix& m) {
  StateResiduals r;
  r.hermiticity = hermiticity_residual(m);
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  r.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, BipartiteDims dims, double tol)
    : matrix_(std::move(matrix)), dims_(dims) {
  require_square_finite(matrix_, "DensityMatrix");
  if (dims_.a < 1 || dims_.b < 1 || dims_.total() != matrix_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "DensityMatrix: dims do not match matrix size");
  }
  const StateResiduals r = state_residuals(matrix_);
  if (r.hermiticity > tol) {
    throw Error(ErrorKind::InvalidState, "not Hermitian, residual " + std::to_string(r.hermiticity));
  }
  if (r.min_eigenvalue < -tol) {
    throw Error(ErrorKind::InvalidState, "not PSD, min eigenvalue " + std::to_string(r.min_eigenvalue));
  }
  if (r.trace_error > tol) {
    throw Error(ErrorKind::InvalidState, "trace differs from 1 by " + std::to_string(r.trace_error));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, BipartiteDims{static_cast<int>(matrix.rows()), 1}) {}

DensityMatrix pure_state(const Ket& k) {
  return pure_state(k, BipartiteDims{k.dim(), 1});
}

DensityMatrix pure_state(const Ket& k, BipartiteDims dims) {
  return DensityMatrix(outer(k.amplitudes()), dims);
}

Ket paired_entangled(std::span<const Ket> basis_a, std::span<const Ket> basis_b,
                     std::span<const int> pairing) {
  const auto d = basis_a.size();
  if (d == 0 || basis_b.size() != d || pairing.size() != d) {
    throw Error(ErrorKind::DimensionMismatch, "paired_entangled: bases and pairing must have equal length");
  }
  for (const auto& k : basis_a)
    if (k.dim() != static_cast<int>(d)) throw Error(ErrorKind::DimensionMismatch, "paired_entangled: ket dim != basis size");
  for (const auto& k : basis_b)
    if (k.dim() != static_cast<int>(d)) throw Error(ErrorKind::DimensionMismatch, "paired_entangled: ket dim != basis size");

  std::vector<bool> seen(d, false);
  for (int p : pairing) {
    if (p < 0 || static_cast<std::size_t>(p) >= d || seen[p]) {
      throw Error(ErrorKind::NotPermutation, "paired_entangled: pairing is not a bijection");
    }
    seen[p] = true;
  }

  const int n = static_cast<int>(d);
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (std::size_t i = 0; i < d; ++i) {
    psi += tensor_product(basis_a[i].amplitudes(), basis_b[pairing[i]].amplitudes());
  }
  psi /= std::sqrt(static_cast<double>(d));
  // Orthonormality of the inputs is what makes this unit norm; a bad basis
  // surfaces here as NotNormalized.
  return Ket(std::move(psi));
}

DensityMatrix werner_mixture(const DensityMatrix& sep, const Ket& psi, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(ErrorKind::RangeError, "werner_mixture: s must lie in [0, 1]");
  }
  if (psi.dim() != sep.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "werner_mixture: psi and sep dims differ");
  }
  return DensityMatrix((1.0 - s) * sep.matrix() + s * outer(psi.amplitudes()), sep.dims());
}

DensityMatrix completely_mixed(int d) {
  return completely_mixed(BipartiteDims{d, 1});
}

DensityMatrix completely_mixed(BipartiteDims dims) {
  const int n = dims.total();
  if (dims.a < 1 || dims.b < 1) throw Error(ErrorKind::RangeError, "completely_mixed: d must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), dims);
}

DensityMatrix classically_correlated(int d) {
  if (d < 1) throw Error(ErrorKind::RangeError, "classically_correlated: d must be >= 1");
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) m(i * d + i, i * d + i) = 1.0 / d;
  return DensityMatrix(std::move(m), BipartiteDims{d, d});
}

DensityMatrix classically_correlated_qutrit() {
  return classically_correlated(3);
}

Ket random_ket(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return Ket::normalized(v);
}

SeparableSample random_separable_sample(int d_a, int d_b, int n_terms, std::uint64_t seed) {
  if (n_terms < 1) throw Error(ErrorKind::RangeError, "random_separable: n_terms must be >= 1");
  if (d_a < 1 || d_b < 1) throw Error(ErrorKind::RangeError, "random_separable: dims must be >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> weights(n_terms);
  for (auto& w : weights) w = expo(rng);
  double total = 0.0;
  for (double w : weights) total += w;

  std::vector<ProductTerm> terms;
  terms.reserve(n_terms);
  ComplexMatrix rho = ComplexMatrix::Zero(d_a * d_b, d_a * d_b);
  for (int n = 0; n < n_terms; ++n) {
    Ket a = random_ket(d_a, rng);
    Ket b = random_ket(d_b, rng);
    const double q = weights[n] / total;
    rho += q * outer(tensor_product(a.amplitudes(), b.amplitudes()));
    terms.push_back(ProductTerm{q, std::move(a), std::move(b)});
  }
  rho = 0.5 * (rho + rho.adjoint());
  return SeparableSample{DensityMatrix(std::move(rho), BipartiteDims{d_a, d_b}), std::move(terms)};
}

DensityMatrix random_separable(int d_a, int d_b, int n_terms, std::uint64_t seed) {
  return random_separable_sample(d_a, d_b, n_terms, seed).state;
}

}  // namespace fgsep
