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

#include <span>
#include <string>
#include <vector>

#include "fgsep/linalg.hpp"
#include "fgsep/states.hpp"

namespace fgsep {

/// Positive operator-valued measure: PSD elements summing to the identity.
class Povm {
 public:
  /// Validates every element and completeness within `tol`; throws
  /// InvalidPovm otherwise. Empty `labels` default to "0", "1", ...
  explicit Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels = {},
                double tol = kTolerance);

  int dim() const noexcept { return static_cast<int>(elements_.front().rows()); }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const ComplexMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<ComplexMatrix> elements_;
  std::vector<std::string> labels_;
};

struct PovmResiduals {
  double hermiticity = 0.0;     // worst |M - M^dagger|_max
  double min_eigenvalue = 0.0;  // smallest eigenvalue over all elements
  double completeness = 0.0;    // |sum M - I|_max
};
PovmResiduals povm_residuals(std::span<const ComplexMatrix> elements);

struct MubResiduals {
  double orthonormality = 0.0;  // worst |<e_i|e_j> - delta_ij|
  double unbiasedness = 0.0;    // worst ||<e_i|f_j>|^2 - 1/d|
};
MubResiduals mub_residuals(std::span<const Basis> bases);

/// Orthonormal bases that are pairwise unbiased.
class MubSet {
 public:
  /// Throws NotOrthonormal or NotUnbiased when a residual exceeds `tol`.
  explicit MubSet(std::vector<Basis> bases, double tol = kTolerance);

  int dim() const noexcept { return bases_.front().front().dim(); }
  std::size_t size() const noexcept { return bases_.size(); }
  const std::vector<Basis>& bases() const noexcept { return bases_; }
  const Basis& basis(std::size_t i) const { return bases_.at(i); }

 private:
  std::vector<Basis> bases_;
};

/// Residuals of the mutually-unbiased-measurement conditions for a stated
/// efficiency kappa: unit traces, cross-POVM overlaps 1/d, and same-POVM
/// overlaps kappa on the diagonal and (1 - kappa)/(d - 1) off it.
struct MumResiduals {
  double completeness = 0.0;
  double trace_one = 0.0;
  double cross_overlap = 0.0;
  double same_overlap = 0.0;
  bool kappa_in_range = false;  // 1/d < kappa <= 1

  double worst() const noexcept;
};
MumResiduals mum_residuals(std::span<const Povm> povms, double kappa);

class MumSet {
 public:
  /// Throws InvalidMum unless every condition holds within `tol`.
  MumSet(std::vector<Povm> povms, double kappa, double tol = kTolerance);

  int dim() const noexcept { return povms_.front().dim(); }
  std::size_t size() const noexcept { return povms_.size(); }
  double kappa() const noexcept { return kappa_; }
  const std::vector<Povm>& povms() const noexcept { return povms_; }
  const Povm& povm(std::size_t i) const { return povms_.at(i); }

 private:
  std::vector<Povm> povms_;
  double kappa_;
};

struct PauliPair {
  ComplexMatrix z;  // clock: diag(1, w, ..., w^(d-1)), w = exp(2 pi i / d)
  ComplexMatrix x;  // shift: |j> -> |j + 1 mod d>
};

/// exp(2 pi i k / d)
Complex root_of_unity(int d, int k);

PauliPair generalized_pauli(int d);

bool is_prime(int n) noexcept;

/// d + 1 mutually unbiased bases for prime d: the eigenbases of Z, X and
/// Z X^m for m = 1..d-1, in that order. Kets within a basis follow the
/// eigenvalue order w^0, w^1, ... (for d = 2 the Z X eigenvalues are
/// i, -i), and each ket's first nonzero amplitude is real positive.
MubSet prime_mub_set(int d);

/// Rank-one projective measurement |e_i><e_i|.
Povm basis_to_povm(const Basis& basis);

/// Depolarized bases P_i = mu |e_i><e_i| + (1 - mu) I / d. The efficiency is
/// kappa = mu^2 + (1 - mu^2) / d; mu must lie in (0, 1].
MumSet smooth_mum(const MubSet& mubs, double mu);

/// Outcome probabilities Tr(M_i rho). Float noise within 1e-10 of [0, 1]
/// is clamped; anything further out is NumericalFailure.
std::vector<double> measure(const Povm& povm, const DensityMatrix& rho);

struct MaxProbability {
  double value = 0.0;
  std::vector<std::size_t> argmax;  // every index within 1e-9 of the max
};
MaxProbability max_probability(const Povm& povm, const DensityMatrix& rho);
MaxProbability max_of(std::span<const double> probabilities);

}  // namespace fgsep
