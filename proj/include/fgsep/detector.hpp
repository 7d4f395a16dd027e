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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fgsep/bounds.hpp"
#include "fgsep/composer.hpp"
#include "fgsep/states.hpp"

namespace fgsep {

/// Margins at or below this are not counted as a violation.
inline constexpr double kViolationMargin = 1e-9;
/// PPT min eigenvalues below -kPptTolerance certify entanglement.
inline constexpr double kPptTolerance = 1e-10;

/// A separability test can only ever certify entanglement.
enum class Verdict { Entangled, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct MeasurementResult {
  std::string id;
  double p_max = 0.0;
  std::vector<std::string> argmax;
};

struct DetectionReport {
  std::vector<MeasurementResult> per_measurement;
  double sum_pmax = 0.0;
  BoundValue bound;
  bool violated = false;
  double margin = 0.0;  // sum_pmax - bound.value

  Verdict verdict() const noexcept { return violated ? Verdict::Entangled : Verdict::Inconclusive; }
};

DetectionReport evaluate(const DensityMatrix& state, std::span<const ComposedMeasurement> suite,
                         const BoundValue& bound);

using StateFamily = std::function<DensityMatrix(double)>;

struct ThresholdResult {
  double s_star = 0.0;
  double s_low = 0.0;
  double s_high = 0.0;
  BoundValue bound;
  int iterations = 0;
};

/// Bisects [0, 1] for the point where the detection verdict flips. Throws
/// NoSignChange when both endpoints give the same verdict.
ThresholdResult threshold_bisect(const StateFamily& family, std::span<const ComposedMeasurement> suite,
                                 const BoundValue& bound, double tol = 1e-8);

struct Transition {
  double s_low = 0.0;
  double s_high = 0.0;
  int iterations = 0;

  double midpoint() const noexcept { return 0.5 * (s_low + s_high); }
};

/// Bisection for a predicate that differs at `lo` and `hi`.
Transition find_transition(const std::function<bool(double)>& predicate, double lo, double hi,
                           double tol);

struct PptResult {
  double min_eigenvalue = 0.0;
  bool entangled_certified = false;
};

/// Minimum eigenvalue of the partial transpose over subsystem B.
PptResult ppt_check(const DensityMatrix& state);

/// Bisects [0, 1] for the sign change of the partial-transpose minimum
/// eigenvalue along `family`.
Transition ppt_threshold(const StateFamily& family, double tol = 1e-8);

/// Keeps the measurements whose maximal probability on `target` exceeds the
/// uniform value 1/(number of outcomes).
std::vector<ComposedMeasurement> select_informative(std::span<const ComposedMeasurement> suite,
                                                    const DensityMatrix& target);

struct SeesawOptions {
  int restarts = 64;
  int max_iterations = 500;
  double convergence = 1e-12;
  std::uint64_t seed = 0;
};

struct SeesawResult {
  double best_sum = 0.0;
  Ket witness_a;
  Ket witness_b;
  int restarts = 0;

  DensityMatrix witness_state() const;
};

/// Alternating maximization of sum_t p_max over pure product states. The
/// result is a lower bound on the true product-state maximum.
SeesawResult seesaw_max_product(std::span<const ComposedMeasurement> suite, const SeesawOptions& options = {});

}  // namespace fgsep
