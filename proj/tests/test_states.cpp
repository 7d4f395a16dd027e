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

#include <vector>

#include "fgsep/composer.hpp"
#include "fgsep/error.hpp"
#include "fgsep/families.hpp"
#include "fgsep/states.hpp"
#include "support.hpp"

using namespace fgsep;
using fgsep::testing::omega3;

namespace {

// |Psi> = (1/3) sum_ij w^(ij) |ij>, written out from z_i (x) x_(-i).
ComplexVector psi_oracle() {
  ComplexVector v(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(i * 3 + j) = omega3(i * j) / 3.0;
  return v;
}

ComplexVector phi_oracle(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

double min_pt_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigensystem(partial_transpose(rho.matrix(), rho.dims(), Subsystem::B)).values(0);
}

void check_valid(const DensityMatrix& rho) {
  const StateResiduals r = state_residuals(rho.matrix());
  CHECK(r.hermiticity <= 1e-10);
  CHECK(r.min_eigenvalue >= -1e-10);
  CHECK(r.trace_error <= 1e-10);
}

}  // namespace

TEST_CASE("Ket validation") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(Ket{v}, Error);
  try {
    (void)Ket(v);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalized);
  }
  CHECK(Ket::normalized(v).amplitudes().norm() == doctest::Approx(1.0));
  CHECK(Ket::basis(3, 2).amplitudes()(2) == Complex(1.0));
}

TEST_CASE("DensityMatrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS((DensityMatrix(m, {2, 1})), Error);  // trace 2
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS((DensityMatrix(neg, {2, 1})), Error);
  ComplexMatrix nh(2, 2);
  nh << 0.5, 0.1, 0.0, 0.5;
  CHECK_THROWS_AS((DensityMatrix(nh, {2, 1})), Error);
  try {
    DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, {3, 1});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("pure_state") {
  const DensityMatrix zero = pure_state(Ket::basis(2, 0));
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  CHECK(max_abs(zero.matrix() - expect) == 0.0);

  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(max_abs(pure_state(Ket(plus)).matrix() - ComplexMatrix::Constant(2, 2, 0.5)) < 1e-15);

  const DensityMatrix psi = pure_state(Ket(psi_oracle()), {3, 3});
  CHECK(max_abs(psi.matrix() * psi.matrix() - psi.matrix()) < 1e-14);
  for (auto keep : {Subsystem::A, Subsystem::B})
    CHECK(max_abs(partial_trace(psi.matrix(), {3, 3}, keep) - ComplexMatrix::Identity(3, 3) / 3.0) < 1e-14);
}

TEST_CASE("paired_entangled") {
  const MubSet mubs = prime_mub_set(3);
  const Basis& z = mubs.basis(0);
  const Basis& x = mubs.basis(1);

  SUBCASE("standard bases, identity pairing gives Phi") {
    const std::vector<int> id{0, 1, 2};
    const Ket phi = paired_entangled(z, z, id);
    CHECK((phi.amplitudes() - phi_oracle(3)).norm() < 1e-14);
  }
  SUBCASE("Z with X, pairing i -> -i gives Psi") {
    const std::vector<int> pairing{0, 2, 1};
    const Ket psi = paired_entangled(z, x, pairing);
    CHECK((psi.amplitudes() - psi_oracle()).norm() < 1e-14);
    CHECK((zx_entangled(3).amplitudes() - psi_oracle()).norm() < 1e-14);
  }
  SUBCASE("qubit Bell state") {
    const MubSet q = prime_mub_set(2);
    const std::vector<int> id{0, 1};
    CHECK((paired_entangled(q.basis(0), q.basis(0), id).amplitudes() - phi_oracle(2)).norm() < 1e-15);
  }
  SUBCASE("errors") {
    const std::vector<int> dup{0, 0, 1};
    try {
      paired_entangled(z, x, dup);
      FAIL("expected NotPermutation");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPermutation);
    }
    const std::vector<int> short_pairing{0, 1};
    CHECK_THROWS_AS(paired_entangled(z, x, short_pairing), Error);
    const MubSet q = prime_mub_set(2);
    const std::vector<int> id{0, 1, 2};
    try {
      paired_entangled(z, q.basis(0), id);
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }
  SUBCASE("maximal entanglement for every pairing and basis choice") {
    std::vector<int> perm{0, 1, 2, 3, 4};
    const MubSet m5 = prime_mub_set(5);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto a = static_cast<std::size_t>(trial % 6);
      const auto b = static_cast<std::size_t>((trial * 7 + 1) % 6);
      const DensityMatrix rho = pure_state(paired_entangled(m5.basis(a), m5.basis(b), perm), {5, 5});
      check_valid(rho);
      for (auto keep : {Subsystem::A, Subsystem::B})
        CHECK(max_abs(partial_trace(rho.matrix(), {5, 5}, keep) - ComplexMatrix::Identity(5, 5) / 5.0) <= 1e-10);
    }
  }
}

TEST_CASE("werner_mixture") {
  const DensityMatrix sep = completely_mixed(BipartiteDims{3, 3});
  const Ket psi = zx_entangled(3);
  CHECK(max_abs(werner_mixture(sep, psi, 0.0).matrix() - sep.matrix()) == 0.0);
  CHECK(max_abs(werner_mixture(sep, psi, 1.0).matrix() - pure_state(psi, {3, 3}).matrix()) < 1e-15);
  CHECK(werner_mixture(sep, psi, 0.3).dims() == BipartiteDims{3, 3});

  // PPT boundary at s = 1/(d+1).
  CHECK(std::abs(min_pt_eigenvalue(werner_mixture(sep, psi, 0.25))) < 1e-12);
  CHECK(min_pt_eigenvalue(werner_mixture(sep, psi, 0.24)) > 0.0);
  CHECK(min_pt_eigenvalue(werner_mixture(sep, psi, 0.26)) < 0.0);

  for (double s : {-0.01, 1.01}) {
    try {
      werner_mixture(sep, psi, s);
      FAIL("expected RangeError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RangeError);
    }
  }
  CHECK_THROWS_AS(werner_mixture(completely_mixed(BipartiteDims{2, 2}), psi, 0.5), Error);

  SUBCASE("affine in s") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix base = testing::random_mixed_state({3, 3}, rng);
      const double s1 = u(rng);
      const double s2 = u(rng);
      const ComplexMatrix mid = werner_mixture(base, psi, 0.5 * (s1 + s2)).matrix();
      const ComplexMatrix avg =
          0.5 * (werner_mixture(base, psi, s1).matrix() + werner_mixture(base, psi, s2).matrix());
      CHECK(max_abs(mid - avg) <= 1e-14);
    }
  }
}

TEST_CASE("completely_mixed") {
  CHECK(max_abs(completely_mixed(2).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) == 0.0);
  const DensityMatrix nine = completely_mixed(BipartiteDims{3, 3});
  CHECK(nine.dims() == BipartiteDims{3, 3});
  CHECK(max_abs(nine.matrix() - ComplexMatrix::Identity(9, 9) / 9.0) == 0.0);
  CHECK(std::abs(nine.matrix().trace() - Complex(1.0)) < 1e-15);
}

TEST_CASE("classically_correlated_qutrit") {
  const DensityMatrix rho = classically_correlated_qutrit();
  check_valid(rho);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
  CHECK(min_pt_eigenvalue(rho) >= -1e-12);
  for (int i = 0; i < 3; ++i) CHECK(rho.matrix()(i * 4, i * 4).real() == doctest::Approx(1.0 / 3.0));
  for (const auto& m : qutrit_suite()) {
    for (double p : measure(m.povm, rho)) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("random_separable") {
  SUBCASE("one term is a pure product") {
    const SeparableSample s = random_separable_sample(3, 3, 1, 99);
    const ComplexMatrix m = s.state.matrix();
    CHECK(max_abs(m * m - m) < 1e-12);
    CHECK(s.terms.size() == 1);
    CHECK(s.terms[0].weight == doctest::Approx(1.0));
    const ComplexVector v = tensor_product(s.terms[0].a.amplitudes(), s.terms[0].b.amplitudes());
    CHECK(max_abs(m - outer(v)) < 1e-12);
  }
  SUBCASE("deterministic given the seed") {
    CHECK(max_abs(random_separable(3, 3, 5, 7).matrix() - random_separable(3, 3, 5, 7).matrix()) == 0.0);
    CHECK(max_abs(random_separable(3, 3, 5, 7).matrix() - random_separable(3, 3, 5, 8).matrix()) > 1e-3);
  }
  SUBCASE("valid, PPT, and equal to its recorded decomposition") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int da = 2 + static_cast<int>(seed % 3);
      const int db = 2 + static_cast<int>((seed / 3) % 3);
      const SeparableSample s = random_separable_sample(da, db, 1 + static_cast<int>(seed % 6), seed);
      check_valid(s.state);
      CHECK(min_pt_eigenvalue(s.state) >= -1e-10);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(da * db, da * db);
      double total = 0.0;
      for (const auto& t : s.terms) {
        CHECK(t.weight >= 0.0);
        total += t.weight;
        rebuilt += t.weight * outer(tensor_product(t.a.amplitudes(), t.b.amplitudes()));
      }
      CHECK(total == doctest::Approx(1.0));
      CHECK(max_abs(rebuilt - s.state.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("random_ket is normalized and seed-reproducible") {
  std::mt19937_64 a(4), b(4);
  for (int i = 0; i < 10; ++i) {
    const Ket ka = random_ket(7, a);
    const Ket kb = random_ket(7, b);
    CHECK(ka.amplitudes().norm() == doctest::Approx(1.0));
    CHECK((ka.amplitudes() - kb.amplitudes()).norm() == 0.0);
  }
}
