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

#include "fgsep/composer.hpp"

#include <string>

#include "fgsep/error.hpp"

namespace fgsep {

PartitionFamily make_partition(int m, int n, std::vector<std::vector<OutcomePair>> subsets,
                               bool enforce) {
  if (m < 1 || n < 1) throw Error(ErrorKind::NotAPartition, "shape must be positive");
  std::vector<int> seen(static_cast<std::size_t>(m) * n, 0);
  bool compliant = true;
  for (const auto& subset : subsets) {
    if (subset.empty()) throw Error(ErrorKind::NotAPartition, "empty subset");
    std::vector<bool> row_used(m, false);
    std::vector<bool> col_used(n, false);
    for (const auto& [i, j] : subset) {
      if (i < 0 || i >= m || j < 0 || j >= n) {
        throw Error(ErrorKind::NotAPartition,
                    "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
      }
      if (seen[i * n + j]++ > 0) {
        throw Error(ErrorKind::NotAPartition,
                    "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") appears twice");
      }
      if (row_used[i] || col_used[j]) compliant = false;
      row_used[i] = true;
      col_used[j] = true;
    }
  }
  for (int c : seen)
    if (c == 0) throw Error(ErrorKind::NotAPartition, "subsets do not cover the outcome grid");
  if (enforce && !compliant) {
    throw Error(ErrorKind::IntersectingPairs, "a subset repeats a local outcome index");
  }
  PartitionFamily family;
  family.rows_ = m;
  family.cols_ = n;
  family.subsets_ = std::move(subsets);
  family.compliant_ = compliant;
  return family;
}

PartitionFamily cyclic_partition(int d) {
  if (d < 2) throw Error(ErrorKind::RangeError, "cyclic_partition: d must be >= 2");
  std::vector<std::vector<OutcomePair>> subsets(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) subsets[k].emplace_back(i, ((k - i) % d + d) % d);
  return make_partition(d, d, std::move(subsets));
}

Povm compose_povm(const Povm& p, const Povm& q, const PartitionFamily& family,
                  std::vector<std::string> labels) {
  if (static_cast<int>(p.size()) != family.rows() || static_cast<int>(q.size()) != family.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "partition shape " + std::to_string(family.rows()) + "x" +
                                              std::to_string(family.cols()) + " vs POVM sizes " +
                                              std::to_string(p.size()) + "x" + std::to_string(q.size()));
  }
  const int n = p.dim() * q.dim();
  std::vector<ComplexMatrix> elements;
  elements.reserve(family.size());
  for (const auto& subset : family.subsets()) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (const auto& [i, j] : subset) m += tensor_product(p.element(i), q.element(j));
    elements.push_back(std::move(m));
  }
  return Povm(std::move(elements), std::move(labels));
}

std::vector<std::string> omega_labels(int d) {
  std::vector<std::string> labels;
  for (int k = 0; k < d; ++k) labels.push_back("ω^" + std::to_string(k));
  return labels;
}

ComposedMeasurement compose_cyclic(std::string id, const Povm& a, const Povm& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "cyclic composition needs equal outcome counts");
  const int d = static_cast<int>(a.size());
  return ComposedMeasurement{std::move(id), compose_povm(a, b, cyclic_partition(d), omega_labels(d)),
                             BipartiteDims{a.dim(), b.dim()}};
}

std::vector<ComposedMeasurement> mub_cyclic_suite(int d) {
  const MubSet mubs = prime_mub_set(d);
  std::vector<std::string> names{"Z", "X"};
  for (int m = 1; m < d; ++m) names.push_back(m == 1 ? "ZX" : "ZX^" + std::to_string(m));

  // Basis 0 is Z and basis 1 is X; the first two measurements swap them
  // between the parties, the rest pair each Z X^m basis with itself.
  std::vector<ComposedMeasurement> suite;
  const Povm z = basis_to_povm(mubs.basis(0));
  const Povm x = basis_to_povm(mubs.basis(1));
  suite.push_back(compose_cyclic("Z⊗X", z, x));
  suite.push_back(compose_cyclic("X⊗Z", x, z));
  for (int m = 1; m < d; ++m) {
    const Povm local = basis_to_povm(mubs.basis(m + 1));
    suite.push_back(compose_cyclic(names[m + 1] + "⊗" + names[m + 1], local, local));
  }
  return suite;
}

std::vector<ComposedMeasurement> qutrit_suite() {
  auto suite = mub_cyclic_suite(3);
  suite[3].id = "ZX²⊗ZX²";
  return suite;
}

std::vector<ComposedMeasurement> compose_mum_suite(const MumSet& a, const MumSet& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "MUM sets differ in size");
  std::vector<ComposedMeasurement> suite;
  for (std::size_t t = 0; t < a.size(); ++t) {
    suite.push_back(compose_cyclic("M" + std::to_string(t), a.povm(t), b.povm(t)));
  }
  return suite;
}

}  // namespace fgsep
