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

// Total-system measurements assembled from local ones. A partition family
// splits the outcome grid of two local POVMs into subsets; each subset k
// yields the element M_k = sum_{(i,j) in subset k} P_i (x) Q_j.

#include <string>
#include <utility>
#include <vector>

#include "fgsep/linalg.hpp"
#include "fgsep/measurements.hpp"

namespace fgsep {

using OutcomePair = std::pair<int, int>;

class PartitionFamily {
 public:
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<std::vector<OutcomePair>>& subsets() const noexcept { return subsets_; }
  std::size_t size() const noexcept { return subsets_.size(); }

  /// False when some subset repeats a row or column index. Only families
  /// built with enforcement off can be non-compliant.
  bool compliant() const noexcept { return compliant_; }

 private:
  friend PartitionFamily make_partition(int, int, std::vector<std::vector<OutcomePair>>, bool);
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<OutcomePair>> subsets_;
  bool compliant_ = true;
};

/// Builds a partition of {0..m-1} x {0..n-1}. Always throws NotAPartition if
/// the subsets miss or repeat a pair; with `enforce` on, also throws
/// IntersectingPairs when a subset shares a row or column index.
PartitionFamily make_partition(int m, int n, std::vector<std::vector<OutcomePair>> subsets,
                               bool enforce = true);

/// Subset k = {(i, k - i mod d) : i = 0..d-1}.
PartitionFamily cyclic_partition(int d);

/// Element k sums P_i (x) Q_j over subset k. `labels` defaults to "k".
Povm compose_povm(const Povm& p, const Povm& q, const PartitionFamily& family,
                  std::vector<std::string> labels = {});

/// A composed measurement tagged with its name and the product-space split.
struct ComposedMeasurement {
  std::string id;
  Povm povm;
  BipartiteDims dims;
};

/// "w^0", "w^1", ... rendered with the Greek omega.
std::vector<std::string> omega_labels(int d);

/// Cyclic composition of two local POVMs with d outcomes each.
ComposedMeasurement compose_cyclic(std::string id, const Povm& a, const Povm& b);

/// For prime d: the d + 1 measurements Z(x)X, X(x)Z and Z X^m (x) Z X^m for
/// m = 1..d-1, each the cyclic composition of the matching eigenbases.
std::vector<ComposedMeasurement> mub_cyclic_suite(int d);

/// The cyclic suite for d = 3: Z(x)X, X(x)Z, ZX(x)ZX, ZX^2(x)ZX^2.
std::vector<ComposedMeasurement> qutrit_suite();

/// Cyclic compositions of the t-th POVM of `a` with the t-th POVM of `b`.
std::vector<ComposedMeasurement> compose_mum_suite(const MumSet& a, const MumSet& b);

}  // namespace fgsep
