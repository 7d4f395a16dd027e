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

// Random generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "fgsep/composer.hpp"
#include "fgsep/linalg.hpp"
#include "fgsep/measurements.hpp"
#include "fgsep/states.hpp"

namespace fgsep::testing {

inline ComplexMatrix random_gaussian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

/// Haar-distributed unitary via QR with the phase correction on R's diagonal.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(n, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline ComplexMatrix random_psd(int n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(n, rng);
  return g * g.adjoint();
}

inline DensityMatrix random_mixed_state(BipartiteDims dims, std::mt19937_64& rng) {
  ComplexMatrix m = random_psd(dims.total(), rng);
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(m, dims);
}

/// M_i = S^(-1/2) A_i S^(-1/2) for random PSD A_i with S = sum A_i.
inline Povm random_povm(int dim, int outcomes, std::mt19937_64& rng) {
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < outcomes; ++i) {
    raw.push_back(random_psd(dim, rng));
    sum += raw.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sum);
  const ComplexMatrix inv_root = eig.eigenvectors() *
                                 eig.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                 eig.eigenvectors().adjoint();
  std::vector<ComplexMatrix> elements;
  for (auto& a : raw) {
    ComplexMatrix m = inv_root * a * inv_root;
    elements.push_back(0.5 * (m + m.adjoint()));
  }
  // Absorb the rounding residue of the completeness relation into the last element.
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (const auto& m : elements) total += m;
  elements.back() += ComplexMatrix::Identity(dim, dim) - total;
  return Povm(std::move(elements));
}

/// Greedy random partition of the m x n grid into partial matchings.
inline std::vector<std::vector<OutcomePair>> random_matching_partition(int m, int n, std::mt19937_64& rng) {
  std::vector<OutcomePair> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::vector<OutcomePair>> subsets;
  for (const auto& p : pairs) {
    std::vector<std::size_t> order(subsets.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    bool placed = false;
    for (std::size_t k : order) {
      const bool clash = std::any_of(subsets[k].begin(), subsets[k].end(), [&](const OutcomePair& q) {
        return q.first == p.first || q.second == p.second;
      });
      if (!clash) {
        subsets[k].push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) subsets.push_back({p});
  }
  return subsets;
}

/// Projection onto a single product ket |a> (x) |b>.
inline DensityMatrix product_state(const Ket& a, const Ket& b) {
  return DensityMatrix(outer(tensor_product(a.amplitudes(), b.amplitudes())), BipartiteDims{a.dim(), b.dim()});
}

/// Qutrit kets as printed: w = exp(2 pi i / 3), w* = w^2.
inline Complex omega3(int k) {
  const double angle = 2.0 * std::numbers::pi * (((k % 3) + 3) % 3) / 3.0;
  return {std::cos(angle), std::sin(angle)};
}

/// |<u|v>| for equal-dimension kets.
inline double overlap_abs(const ComplexVector& u, const ComplexVector& v) {
  return std::abs(u.dot(v));
}

}  // namespace fgsep::testing
