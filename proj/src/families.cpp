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

#include "fgsep/families.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "fgsep/error.hpp"
#include "fgsep/measurements.hpp"

namespace fgsep {

Ket zx_entangled(int d) {
  const MubSet mubs = prime_mub_set(d);
  std::vector<int> pairing(d);
  for (int i = 0; i < d; ++i) pairing[i] = (d - i) % d;
  return paired_entangled(mubs.basis(0), mubs.basis(1), pairing);
}

Ket diagonal_entangled(int d) {
  if (d < 1) throw Error(ErrorKind::RangeError, "diagonal_entangled: d must be >= 1");
  Basis standard;
  for (int i = 0; i < d; ++i) standard.push_back(Ket::basis(d, i));
  std::vector<int> identity(d);
  std::iota(identity.begin(), identity.end(), 0);
  return paired_entangled(standard, standard, identity);
}

StateFamily werner_family(DensityMatrix sep, Ket psi) {
  if (sep.dim() != psi.dim()) throw Error(ErrorKind::DimensionMismatch, "werner_family: dims differ");
  return [sep = std::move(sep), psi = std::move(psi)](double s) { return werner_mixture(sep, psi, s); };
}

Ket named_target(int d, std::string_view psi) {
  if (psi == "mqtr") return zx_entangled(d);
  if (psi == "mqtr1" || psi == "phi+") return diagonal_entangled(d);
  throw Error(ErrorKind::ParseError, "unknown target state '" + std::string(psi) + "'");
}

DensityMatrix named_separable(int d, std::string_view sep) {
  if (sep == "mixed") return completely_mixed(BipartiteDims{d, d});
  if (sep == "zz") return classically_correlated(d);
  throw Error(ErrorKind::ParseError, "unknown separable state '" + std::string(sep) + "'");
}

}  // namespace fgsep
