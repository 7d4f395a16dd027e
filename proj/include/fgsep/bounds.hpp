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

// Upper bounds on sum_t p_max(M^(t) | rho) that every separable state
// obeys. A measured sum above the bound certifies entanglement.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fgsep/measurements.hpp"

namespace fgsep {

enum class BoundKind {
  Fngef,        // N MUBs: (N/d)(1 + (d - 1)/sqrt N)
  Fnmim6,       // N MUBs via pairwise overlaps: 1 + sqrt((N^2 - N)/d)
  Fngpq,        // N MUMs of efficiency kappa
  Qutrit3,      // any three of the four qutrit MUBs
  ImaiGeneric,  // spectral-norm overlap bound for arbitrary POVMs
};

std::string_view to_string(BoundKind kind) noexcept;
/// Throws ParseError for unknown names.
BoundKind parse_bound_kind(std::string_view name);

struct BoundValue {
  BoundKind kind = BoundKind::Fngef;
  double value = 0.0;
  int n = 0;
  int d = 0;
  std::optional<double> kappa;

  std::string name() const { return std::string(to_string(kind)); }
};

double bound_fngef(int n, int d);
double bound_fnmim6(int n, int d);
/// Requires 1/d < kappa <= 1; equals bound_fngef at kappa = 1.
double bound_fngpq(int n, int d, double kappa);
/// 1 + (2/sqrt 3) cos(pi/18). Valid only for three of the four qutrit MUBs
/// produced by prime_mub_set(3).
double bound_qutrit_three();

/// 1 + sqrt(sum_{s != t} || sqrt(M_s) sqrt(M_t) ||^2) over ordered pairs,
/// where M_t = povms[t].element(selection[t]).
double bound_imai_generic(std::span<const Povm> povms, std::span<const std::size_t> selection);

BoundValue make_bound(BoundKind kind, int n, int d, std::optional<double> kappa = std::nullopt);

struct BoundContext {
  int n = 0;
  int d_a = 0;
  int d_b = 0;  // 0 means same as d_a
  std::optional<double> kappa;  // unset for rank-one MUBs
  bool qutrit_three_applicable = false;
};

/// Smallest applicable bound over both subsystems.
BoundValue best_bound(const BoundContext& context);

/// |a - b| / min(a, b)
double relative_gap(double a, double b);

}  // namespace fgsep
