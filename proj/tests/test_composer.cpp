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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fgsep/composer.hpp"
#include "fgsep/error.hpp"
#include "fgsep/families.hpp"
#include "support.hpp"

using namespace fgsep;
using Subsets = std::vector<std::vector<OutcomePair>>;

namespace {

ErrorKind kind_of_failure(int m, int n, Subsets subsets, bool enforce = true) {
  try {
    make_partition(m, n, std::move(subsets), enforce);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

// |z_i x_j><z_i x_j| built from explicit kets.
ComplexMatrix zx_projector(int i, int j) {
  ComplexVector z = ComplexVector::Zero(3);
  z(i) = 1.0;
  ComplexVector x(3);
  for (int k = 0; k < 3; ++k) x(k) = testing::omega3(-j * k) / std::sqrt(3.0);
  return outer(tensor_product(z, x));
}

}  // namespace

TEST_CASE("make_partition") {
  SUBCASE("sigma_z (x) sigma_z grouping") {
    const PartitionFamily f = make_partition(2, 2, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
    CHECK(f.size() == 2);
    CHECK(f.compliant());
  }
  SUBCASE("intersecting pairs") {
    const Subsets bad{{{0, 0}, {1, 0}, {1, 1}}, {{0, 1}}};
    CHECK(kind_of_failure(2, 2, bad) == ErrorKind::IntersectingPairs);
    const PartitionFamily loose = make_partition(2, 2, bad, false);
    CHECK_FALSE(loose.compliant());
  }
  SUBCASE("not a partition") {
    CHECK(kind_of_failure(2, 2, {{{0, 0}, {1, 1}}, {{0, 1}}}) == ErrorKind::NotAPartition);
    CHECK(kind_of_failure(2, 2, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{0, 0}}}) == ErrorKind::NotAPartition);
    CHECK(kind_of_failure(2, 2, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{2, 0}}}) == ErrorKind::NotAPartition);
    CHECK(kind_of_failure(2, 2, {{{0, 0}, {1, 1}}, {{0, 1}}}, false) == ErrorKind::NotAPartition);
  }
  SUBCASE("cyclic qutrit") {
    const PartitionFamily f = cyclic_partition(3);
    CHECK(f.size() == 3);
    for (const auto& s : f.subsets()) CHECK(s.size() == 3);
    CHECK(f.compliant());
  }
  SUBCASE("random matchings of non-square grids are accepted") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + trial % 4;
      const int n = 1 + (trial / 4) % 5;
      const PartitionFamily f = make_partition(m, n, testing::random_matching_partition(m, n, rng));
      CHECK(f.compliant());
      for (const auto& s : f.subsets()) CHECK(static_cast<int>(s.size()) <= std::min(m, n));
    }
  }
}

TEST_CASE("cyclic_partition") {
  const PartitionFamily two = cyclic_partition(2);
  CHECK(two.subsets() == Subsets{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  const PartitionFamily three = cyclic_partition(3);
  CHECK(three.subsets()[0] == std::vector<OutcomePair>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(three.subsets()[1] == std::vector<OutcomePair>{{0, 1}, {1, 0}, {2, 2}});
  CHECK(three.subsets()[2] == std::vector<OutcomePair>{{0, 2}, {1, 1}, {2, 0}});
  for (int d = 2; d <= 9; ++d) CHECK(cyclic_partition(d).compliant());
}

TEST_CASE("compose_povm") {
  const MubSet m = prime_mub_set(3);
  SUBCASE("Z with X reproduces the three printed projectors") {
    const Povm c = compose_povm(basis_to_povm(m.basis(0)), basis_to_povm(m.basis(1)), cyclic_partition(3));
    const ComplexMatrix lambda0 = zx_projector(0, 0) + zx_projector(1, 2) + zx_projector(2, 1);
    const ComplexMatrix lambda1 = zx_projector(0, 1) + zx_projector(1, 0) + zx_projector(2, 2);
    const ComplexMatrix lambda2 = zx_projector(0, 2) + zx_projector(1, 1) + zx_projector(2, 0);
    CHECK(max_abs(c.element(0) - lambda0) < 1e-14);
    CHECK(max_abs(c.element(1) - lambda1) < 1e-14);
    CHECK(max_abs(c.element(2) - lambda2) < 1e-14);
    for (const auto& e : c.elements()) CHECK(e.trace().real() == doctest::Approx(3.0));
  }
  SUBCASE("trivial one-outcome composition") {
    const Povm id(std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2)});
    const Povm c = compose_povm(id, id, make_partition(1, 1, {{{0, 0}}}));
    REQUIRE(c.size() == 1);
    CHECK(max_abs(c.element(0) - ComplexMatrix::Identity(4, 4)) == 0.0);
  }
  SUBCASE("smoothed MUMs") {
    const MumSet s = smooth_mum(m, 0.5);
    const Povm c = compose_povm(s.povm(0), s.povm(1), cyclic_partition(3));
    CHECK(c.size() == 3);
    ComplexMatrix total = ComplexMatrix::Zero(9, 9);
    for (const auto& e : c.elements()) total += e;
    CHECK(max_abs(total - ComplexMatrix::Identity(9, 9)) <= 1e-12);
  }
  SUBCASE("shape mismatch") {
    try {
      compose_povm(basis_to_povm(m.basis(0)), basis_to_povm(prime_mub_set(2).basis(0)), cyclic_partition(3));
      FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }
  }
}

TEST_CASE("qutrit_suite") {
  const auto suite = qutrit_suite();
  REQUIRE(suite.size() == 4);
  CHECK(suite[0].id == "Z⊗X");
  CHECK(suite[1].id == "X⊗Z");
  CHECK(suite[2].id == "ZX⊗ZX");
  CHECK(suite[3].id == "ZX²⊗ZX²");
  const DensityMatrix psi = pure_state(zx_entangled(3), {3, 3});
  const auto labels = std::vector<std::string>{"ω^0", "ω^1", "ω^2"};
  for (const auto& m : suite) CHECK(m.povm.labels() == labels);

  CHECK(max_probability(suite[0].povm, psi).value == doctest::Approx(1.0));
  CHECK(max_probability(suite[1].povm, psi).value == doctest::Approx(1.0));
  const MaxProbability third = max_probability(suite[2].povm, psi);
  CHECK(third.value == doctest::Approx(1.0));
  REQUIRE(third.argmax.size() == 1);
  CHECK(suite[2].povm.labels()[third.argmax[0]] == "ω^1");
  for (double p : measure(suite[3].povm, psi)) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // The composed projectors are the spectral projectors of the tensor operators.
  const PauliPair p = generalized_pauli(3);
  const ComplexMatrix zx = p.z * p.x;
  const std::array<ComplexMatrix, 4> ops = {tensor_product(p.z, p.x), tensor_product(p.x, p.z),
                                            tensor_product(zx, zx),
                                            tensor_product(ComplexMatrix(zx * p.x), ComplexMatrix(zx * p.x))};
  for (std::size_t t = 0; t < 4; ++t) {
    ComplexMatrix rebuilt = ComplexMatrix::Zero(9, 9);
    for (int k = 0; k < 3; ++k) rebuilt += testing::omega3(k) * suite[t].povm.element(static_cast<std::size_t>(k));
    CHECK(max_abs(rebuilt - ops[t]) < 1e-13);
  }
}

TEST_CASE("product states never beat the weaker local measurement") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int da = 2 + trial % 3;
    const int db = 2 + (trial / 3) % 3;
    const int m = 2 + trial % 4;
    const int n = 2 + (trial / 2) % 4;
    const Povm p = testing::random_povm(da, m, rng);
    const Povm q = testing::random_povm(db, n, rng);
    const PartitionFamily f = make_partition(m, n, testing::random_matching_partition(m, n, rng));
    const Povm composed = compose_povm(p, q, f);
    const DensityMatrix ra = testing::random_mixed_state({da, 1}, rng);
    const DensityMatrix rb = testing::random_mixed_state({db, 1}, rng);
    const DensityMatrix prod(tensor_product(ra.matrix(), rb.matrix()), {da, db});
    const double local = std::min(max_probability(p, ra).value, max_probability(q, rb).value);
    CHECK(max_probability(composed, prod).value <= local + 1e-10);
  }
}

TEST_CASE("separable mixtures stay below their decomposition") {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const Povm p = testing::random_povm(d, d, rng);
    const Povm q = testing::random_povm(d, d, rng);
    const Povm composed = compose_povm(p, q, cyclic_partition(d));
    const SeparableSample s = random_separable_sample(d, d, 1 + static_cast<int>(seed % 5), seed);
    double averaged = 0.0;
    double worst_term = 0.0;
    for (const auto& t : s.terms) {
      const double local = std::min(max_probability(p, pure_state(t.a)).value, max_probability(q, pure_state(t.b)).value);
      averaged += t.weight * local;
      worst_term = std::max(worst_term, local);
    }
    const double composite = max_probability(composed, s.state).value;
    CHECK(composite <= averaged + 1e-10);
    CHECK(composite <= worst_term + 1e-10);
  }
}

TEST_CASE("intersecting partition counterexample") {
  const Povm z = basis_to_povm(prime_mub_set(2).basis(0));
  const PartitionFamily loose = make_partition(2, 2, {{{0, 0}, {1, 0}, {1, 1}}, {{0, 1}}}, false);
  const Povm composed = compose_povm(z, z, loose);
  const auto probs = measure(composed, completely_mixed(BipartiteDims{2, 2}));
  CHECK(probs[0] == doctest::Approx(0.75));
  CHECK(probs[0] > max_probability(z, completely_mixed(2)).value);
}

TEST_CASE("entangled states escape the product constraint") {
  const Povm z = basis_to_povm(prime_mub_set(2).basis(0));
  const Povm composed = compose_povm(z, z, cyclic_partition(2));
  const DensityMatrix bell = pure_state(diagonal_entangled(2), {2, 2});
  CHECK(max_probability(composed, bell).value == doctest::Approx(1.0));
  CHECK(max_probability(z, pure_state(Ket::basis(2, 0))).value == doctest::Approx(1.0));
  CHECK(max_probability(z, completely_mixed(2)).value == doctest::Approx(0.5));
}
