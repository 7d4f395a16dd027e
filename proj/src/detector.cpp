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

#include "fgsep/detector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fgsep/error.hpp"

namespace fgsep {

namespace {

void require_suite_matches(const DensityMatrix& state, std::span<const ComposedMeasurement> suite) {
  for (const auto& m : suite) {
    if (m.povm.dim() != state.dim() || m.dims != state.dims()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "measurement " + m.id + " does not act on a " + std::to_string(state.dims().a) + "x" +
                      std::to_string(state.dims().b) + " system");
    }
  }
}

// <ab| M |ab> for every element, without building the product state.
std::vector<double> product_probabilities(const Povm& povm, const ComplexVector& ab) {
  std::vector<double> p;
  p.reserve(povm.size());
  for (const auto& m : povm.elements()) p.push_back(ab.dot(m * ab).real());
  return p;
}

std::size_t first_argmax(const std::vector<double>& p) {
  return static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
}

double objective(std::span<const ComposedMeasurement> suite, const ComplexVector& ab,
                 std::vector<std::size_t>* choice) {
  double sum = 0.0;
  if (choice) choice->clear();
  for (const auto& m : suite) {
    const auto p = product_probabilities(m.povm, ab);
    const std::size_t k = first_argmax(p);
    sum += p[k];
    if (choice) choice->push_back(k);
  }
  return sum;
}

// Top eigenvector of the operator the chosen elements induce on one factor
// when the other is held fixed.
ComplexVector best_factor(std::span<const ComposedMeasurement> suite, const std::vector<std::size_t>& choice,
                          const ComplexVector& fixed, Subsystem free, BipartiteDims dims) {
  const int free_dim = free == Subsystem::A ? dims.a : dims.b;
  const ComplexMatrix id = ComplexMatrix::Identity(free_dim, free_dim);
  const ComplexMatrix embed = free == Subsystem::A ? tensor_product(id, ComplexMatrix(fixed))
                                                   : tensor_product(ComplexMatrix(fixed), id);
  ComplexMatrix effective = ComplexMatrix::Zero(free_dim, free_dim);
  for (std::size_t t = 0; t < suite.size(); ++t) {
    effective += embed.adjoint() * suite[t].povm.element(choice[t]) * embed;
  }
  effective = 0.5 * (effective + effective.adjoint());
  const Eigensystem eig = hermitian_eigensystem(effective, 1e-8);
  return eig.vectors.col(free_dim - 1);
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Entangled ? "entangled" : "inconclusive";
}

DetectionReport evaluate(const DensityMatrix& state, std::span<const ComposedMeasurement> suite,
                         const BoundValue& bound) {
  require_suite_matches(state, suite);
  DetectionReport report;
  report.bound = bound;
  for (const auto& m : suite) {
    const MaxProbability mp = max_probability(m.povm, state);
    MeasurementResult r{m.id, mp.value, {}};
    for (std::size_t i : mp.argmax) r.argmax.push_back(m.povm.labels()[i]);
    report.sum_pmax += mp.value;
    report.per_measurement.push_back(std::move(r));
  }
  report.margin = report.sum_pmax - bound.value;
  report.violated = report.margin > kViolationMargin;
  return report;
}

Transition find_transition(const std::function<bool(double)>& predicate, double lo, double hi, double tol) {
  const bool at_lo = predicate(lo);
  if (at_lo == predicate(hi)) {
    throw Error(ErrorKind::NoSignChange, "predicate takes the same value at both ends of [" +
                                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  Transition t{lo, hi, 0};
  while (t.s_high - t.s_low > tol) {
    const double mid = t.midpoint();
    if (predicate(mid) == at_lo) {
      t.s_low = mid;
    } else {
      t.s_high = mid;
    }
    ++t.iterations;
  }
  return t;
}

ThresholdResult threshold_bisect(const StateFamily& family, std::span<const ComposedMeasurement> suite,
                                 const BoundValue& bound, double tol) {
  auto detects = [&](double s) { return evaluate(family(s), suite, bound).violated; };
  const Transition t = find_transition(detects, 0.0, 1.0, tol);
  return ThresholdResult{t.midpoint(), t.s_low, t.s_high, bound, t.iterations};
}

PptResult ppt_check(const DensityMatrix& state) {
  if (state.dims().a < 2 || state.dims().b < 2)
    throw Error(ErrorKind::DimensionMismatch, "ppt_check needs a bipartite state with both factors of dimension >= 2");
  const ComplexMatrix pt = partial_transpose(state.matrix(), state.dims(), Subsystem::B);
  const Eigensystem eig = hermitian_eigensystem(pt);
  const double min_eig = eig.values(0);
  return PptResult{min_eig, min_eig < -kPptTolerance};
}

Transition ppt_threshold(const StateFamily& family, double tol) {
  // Bisect on the sign of the eigenvalue itself, not on the certification
  // window, so the crossing point is located exactly.
  auto negative = [&](double s) { return ppt_check(family(s)).min_eigenvalue < 0.0; };
  return find_transition(negative, 0.0, 1.0, tol);
}

std::vector<ComposedMeasurement> select_informative(std::span<const ComposedMeasurement> suite,
                                                    const DensityMatrix& target) {
  require_suite_matches(target, suite);
  std::vector<ComposedMeasurement> kept;
  for (const auto& m : suite) {
    const double uniform = 1.0 / static_cast<double>(m.povm.size());
    if (max_probability(m.povm, target).value > uniform + kViolationMargin) kept.push_back(m);
  }
  return kept;
}

DensityMatrix SeesawResult::witness_state() const {
  return DensityMatrix(outer(tensor_product(witness_a.amplitudes(), witness_b.amplitudes())),
                       BipartiteDims{witness_a.dim(), witness_b.dim()});
}

SeesawResult seesaw_max_product(std::span<const ComposedMeasurement> suite, const SeesawOptions& options) {
  if (suite.empty()) throw Error(ErrorKind::RangeError, "seesaw_max_product: empty suite");
  const BipartiteDims dims = suite.front().dims;
  for (const auto& m : suite)
    if (m.dims != dims) throw Error(ErrorKind::DimensionMismatch, "seesaw_max_product: mixed dimensions in suite");
  if (options.restarts < 1) throw Error(ErrorKind::RangeError, "seesaw_max_product: restarts must be >= 1");

  std::mt19937_64 rng(options.seed);
  SeesawResult best{-1.0, Ket::basis(dims.a, 0), Ket::basis(dims.b, 0), options.restarts};
  std::vector<std::size_t> choice;

  for (int r = 0; r < options.restarts; ++r) {
    ComplexVector a = random_ket(dims.a, rng).amplitudes();
    ComplexVector b = random_ket(dims.b, rng).amplitudes();
    double current = objective(suite, tensor_product(a, b), &choice);
    for (int it = 0; it < options.max_iterations; ++it) {
      a = best_factor(suite, choice, b, Subsystem::A, dims);
      objective(suite, tensor_product(a, b), &choice);
      b = best_factor(suite, choice, a, Subsystem::B, dims);
      const double next = objective(suite, tensor_product(a, b), &choice);
      const bool converged = next - current < options.convergence;
      current = next;
      if (converged) break;
    }
    if (current > best.best_sum) {
      best.best_sum = current;
      best.witness_a = Ket::normalized(a);
      best.witness_b = Ket::normalized(b);
    }
  }
  return best;
}

}  // namespace fgsep
