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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fgsep/linalg.hpp"

namespace fgsep {

/// Unit-norm state vector.
class Ket {
 public:
  /// Throws NotNormalized unless |amplitudes| = 1 within `tol`.
  explicit Ket(ComplexVector amplitudes, double tol = kTolerance);

  /// Rescales a nonzero vector to unit norm.
  static Ket normalized(const ComplexVector& v);
  static Ket basis(int dim, int index);

  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

using Basis = std::vector<Ket>;

/// A validated density matrix together with its bipartite split.
class DensityMatrix {
 public:
  /// Throws InvalidState if the matrix is not Hermitian, PSD and of unit
  /// trace within `tol`; DimensionMismatch if `dims` does not fit.
  DensityMatrix(ComplexMatrix matrix, BipartiteDims dims, double tol = kTolerance);
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  BipartiteDims dims() const noexcept { return dims_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  BipartiteDims dims_;
};

/// Errors found while validating a candidate density matrix; empty when valid.
struct StateResiduals {
  double hermiticity = 0.0;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
};
StateResiduals state_residuals(const ComplexMatrix& m);

DensityMatrix pure_state(const Ket& k);
DensityMatrix pure_state(const Ket& k, BipartiteDims dims);

/// (1/sqrt d) sum_i basis_a[i] (x) basis_b[pairing[i]].
Ket paired_entangled(std::span<const Ket> basis_a, std::span<const Ket> basis_b,
                     std::span<const int> pairing);

/// (1 - s) sep + s |psi><psi|
DensityMatrix werner_mixture(const DensityMatrix& sep, const Ket& psi, double s);

DensityMatrix completely_mixed(int d);
DensityMatrix completely_mixed(BipartiteDims dims);

/// (1/d) sum_i |ii><ii| on a d x d system.
DensityMatrix classically_correlated(int d);
DensityMatrix classically_correlated_qutrit();

/// Haar-random pure state: a normalized vector of standard complex Gaussians.
Ket random_ket(int d, std::mt19937_64& rng);

struct ProductTerm {
  double weight;
  Ket a;
  Ket b;
};

/// A separable state that remembers the mixture it was drawn from.
struct SeparableSample {
  DensityMatrix state;
  std::vector<ProductTerm> terms;
};

/// sum_n q(n) |a_n><a_n| (x) |b_n><b_n| with Haar-random factors and
/// flat-Dirichlet weights; deterministic in `seed`.
SeparableSample random_separable_sample(int d_a, int d_b, int n_terms, std::uint64_t seed);
DensityMatrix random_separable(int d_a, int d_b, int n_terms, std::uint64_t seed);

}  // namespace fgsep
