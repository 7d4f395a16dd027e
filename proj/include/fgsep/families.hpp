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

// Named one-parameter state families (1 - s) sep + s |psi><psi| on two
// d-dimensional systems, d prime.

#include <string_view>

#include "fgsep/detector.hpp"
#include "fgsep/states.hpp"

namespace fgsep {

/// (1/sqrt d) sum_i |z_i> (x) |x_(-i mod d)>, where |z_i> and |x_j> are the
/// Z and X eigenkets with eigenvalue w^i, w^j. A common eigenstate of
/// Z(x)X, X(x)Z and ZX(x)ZX.
Ket zx_entangled(int d);

/// (1/sqrt d) sum_i |ii>
Ket diagonal_entangled(int d);

StateFamily werner_family(DensityMatrix sep, Ket psi);

/// Looks up a family by the CLI names: psi in {mqtr, mqtr1, phi+},
/// sep in {mixed, zz}. Throws ParseError for unknown names.
Ket named_target(int d, std::string_view psi);
DensityMatrix named_separable(int d, std::string_view sep);

}  // namespace fgsep
