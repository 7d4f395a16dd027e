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

#include "fgsep/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fgsep/error.hpp"

namespace fgsep {

namespace {

void require_nd(int n, int d, const char* what) {
  if (n < 1 || d < 2) {
    throw Error(ErrorKind::RangeError, std::string(what) + ": need N >= 1 and d >= 2");
  }
}

}  // namespace

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Fngef: return "fngef";
    case BoundKind::Fnmim6: return "fnmim6";
    case BoundKind::Fngpq: return "fngpq";
    case BoundKind::Qutrit3: return "qutrit3";
    case BoundKind::ImaiGeneric: return "imai_generic";
  }
  return "unknown";
}

BoundKind parse_bound_kind(std::string_view name) {
  for (auto kind : {BoundKind::Fngef, BoundKind::Fnmim6, BoundKind::Fngpq, BoundKind::Qutrit3,
                    BoundKind::ImaiGeneric}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorKind::ParseError, "unknown bound '" + std::string(name) + "'");
}

double bound_fngef(int n, int d) {
  require_nd(n, d, "bound_fngef");
  return (static_cast<double>(n) / d) * (1.0 + (d - 1) / std::sqrt(static_cast<double>(n)));
}

double bound_fnmim6(int n, int d) {
  require_nd(n, d, "bound_fnmim6");
  return 1.0 + std::sqrt(static_cast<double>(n) * (n - 1) / d);
}

double bound_fngpq(int n, int d, double kappa) {
  require_nd(n, d, "bound_fngpq");
  if (!(kappa > 1.0 / d && kappa <= 1.0)) {
    throw Error(ErrorKind::RangeError, "bound_fngpq: kappa must lie in (1/d, 1]");
  }
  return (static_cast<double>(n) / d) * (1.0 + std::sqrt((d - 1) * (kappa * d - 1.0) / n));
}

double bound_qutrit_three() {
  return 1.0 + (2.0 / std::sqrt(3.0)) * std::cos(std::numbers::pi / 18.0);
}

double bound_imai_generic(std::span<const Povm> povms, std::span<const std::size_t> selection) {
  if (povms.size() != selection.size()) {
    throw Error(ErrorKind::DimensionMismatch, "bound_imai_generic: one selection per POVM required");
  }
  if (povms.empty()) return 1.0;
  const int dim = povms.front().dim();
  std::vector<ComplexMatrix> roots;
  for (std::size_t t = 0; t < povms.size(); ++t) {
    if (povms[t].dim() != dim) throw Error(ErrorKind::DimensionMismatch, "bound_imai_generic: POVMs on different spaces");
    if (selection[t] >= povms[t].size()) throw Error(ErrorKind::RangeError, "bound_imai_generic: selection out of range");
    roots.push_back(psd_sqrt(povms[t].element(selection[t])));
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < roots.size(); ++s)
    for (std::size_t t = 0; t < roots.size(); ++t) {
      if (s == t) continue;
      const double norm = spectral_norm(roots[s] * roots[t]);
      sum += norm * norm;
    }
  return 1.0 + std::sqrt(sum);
}

BoundValue make_bound(BoundKind kind, int n, int d, std::optional<double> kappa) {
  BoundValue b{kind, 0.0, n, d, kappa};
  switch (kind) {
    case BoundKind::Fngef: b.value = bound_fngef(n, d); break;
    case BoundKind::Fnmim6: b.value = bound_fnmim6(n, d); break;
    case BoundKind::Fngpq:
      if (!kappa) throw Error(ErrorKind::RangeError, "fngpq bound needs kappa");
      b.value = bound_fngpq(n, d, *kappa);
      break;
    case BoundKind::Qutrit3:
      if (n != 3 || d != 3) throw Error(ErrorKind::RangeError, "qutrit3 bound applies only to N = 3, d = 3");
      b.value = bound_qutrit_three();
      break;
    case BoundKind::ImaiGeneric:
      throw Error(ErrorKind::RangeError, "imai_generic depends on the POVM elements; use bound_imai_generic");
  }
  return b;
}

BoundValue best_bound(const BoundContext& context) {
  std::vector<int> dims{context.d_a};
  if (context.d_b != 0 && context.d_b != context.d_a) dims.push_back(context.d_b);

  std::vector<BoundValue> candidates;
  const bool rank_one = !context.kappa || *context.kappa == 1.0;
  for (int d : dims) {
    if (rank_one) {
      candidates.push_back(make_bound(BoundKind::Fngef, context.n, d));
      candidates.push_back(make_bound(BoundKind::Fnmim6, context.n, d));
    } else {
      candidates.push_back(make_bound(BoundKind::Fngpq, context.n, d, context.kappa));
    }
  }
  if (context.qutrit_three_applicable && context.n == 3 && context.d_a == 3 &&
      (context.d_b == 0 || context.d_b == 3) && rank_one) {
    candidates.push_back(make_bound(BoundKind::Qutrit3, 3, 3));
  }
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const BoundValue& x, const BoundValue& y) { return x.value < y.value; });
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::min(a, b);
}

}  // namespace fgsep
