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

#include "fgsep/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fgsep/error.hpp"

namespace fgsep {

namespace {

constexpr double kClampWindow = 1e-10;
constexpr double kArgmaxWindow = 1e-9;

// Fixes the global phase so the first amplitude with modulus above noise is
// real positive.
ComplexVector fix_phase(ComplexVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

// Eigenbasis of the shift operator X, ordered by eigenvalue w^k.
Basis shift_eigenbasis(int d) {
  Basis basis;
  for (int k = 0; k < d; ++k) {
    ComplexVector v(d);
    for (int j = 0; j < d; ++j) v(j) = root_of_unity(d, -j * k);
    basis.push_back(Ket::normalized(fix_phase(v)));
  }
  return basis;
}

// Eigenbasis of Z X^m (m coprime to d). Z X^m |j> = w^(j+m) |j+m>, so an
// eigenvector with eigenvalue lambda obeys c_j = c_(j-m) w^j / lambda; the
// recursion walks every residue because m is invertible mod d.
Basis clock_shift_eigenbasis(int d, int m) {
  Basis basis;
  for (int k = 0; k < d; ++k) {
    // For odd d, (Z X^m)^d = 1 and the eigenvalues are w^k. For d = 2 it
    // equals -1, giving i and -i.
    const Complex lambda = d == 2 ? Complex(0.0, k == 0 ? 1.0 : -1.0) : root_of_unity(d, k);
    ComplexVector c = ComplexVector::Zero(d);
    c(0) = 1.0;
    int j = 0;
    for (int step = 1; step < d; ++step) {
      const int next = (j + m) % d;
      c(next) = c(j) * root_of_unity(d, next) / lambda;
      j = next;
    }
    basis.push_back(Ket::normalized(fix_phase(c)));
  }
  return basis;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels, double tol)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) throw Error(ErrorKind::InvalidPovm, "POVM has no elements");
  const auto n = elements_.front().rows();
  for (const auto& m : elements_) {
    require_square_finite(m, "Povm element");
    if (m.rows() != n) throw Error(ErrorKind::InvalidPovm, "POVM elements differ in dimension");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < elements_.size(); ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != elements_.size()) {
    throw Error(ErrorKind::InvalidPovm, "label count differs from element count");
  }
  const PovmResiduals r = povm_residuals(elements_);
  if (r.hermiticity > tol) throw Error(ErrorKind::InvalidPovm, "element not Hermitian, residual " + std::to_string(r.hermiticity));
  if (r.min_eigenvalue < -tol) throw Error(ErrorKind::InvalidPovm, "element not PSD, min eigenvalue " + std::to_string(r.min_eigenvalue));
  if (r.completeness > tol) throw Error(ErrorKind::InvalidPovm, "elements do not sum to identity, residual " + std::to_string(r.completeness));
}

PovmResiduals povm_residuals(std::span<const ComplexMatrix> elements) {
  PovmResiduals r;
  if (elements.empty()) return r;
  const auto n = elements.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  double min_eig = std::numeric_limits<double>::infinity();
  for (const auto& m : elements) {
    r.hermiticity = std::max(r.hermiticity, hermiticity_residual(m));
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, solver.eigenvalues().minCoeff());
    sum += m;
  }
  r.min_eigenvalue = min_eig;
  r.completeness = max_abs(sum - ComplexMatrix::Identity(n, n));
  return r;
}

MubResiduals mub_residuals(std::span<const Basis> bases) {
  MubResiduals r;
  for (const auto& basis : bases) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex ip = basis[i].amplitudes().dot(basis[j].amplitudes());
        const double expected = i == j ? 1.0 : 0.0;
        r.orthonormality = std::max(r.orthonormality, std::abs(ip - expected));
      }
  }
  for (std::size_t s = 0; s < bases.size(); ++s)
    for (std::size_t t = s + 1; t < bases.size(); ++t)
      for (const auto& e : bases[s])
        for (const auto& f : bases[t]) {
          const double d = static_cast<double>(e.dim());
          const double overlap = std::norm(e.amplitudes().dot(f.amplitudes()));
          r.unbiasedness = std::max(r.unbiasedness, std::abs(overlap - 1.0 / d));
        }
  return r;
}

MubSet::MubSet(std::vector<Basis> bases, double tol) : bases_(std::move(bases)) {
  if (bases_.empty() || bases_.front().empty()) throw Error(ErrorKind::NotOrthonormal, "empty MUB set");
  const int d = bases_.front().front().dim();
  for (const auto& basis : bases_) {
    if (static_cast<int>(basis.size()) != d) throw Error(ErrorKind::NotOrthonormal, "basis size differs from dimension");
    for (const auto& k : basis)
      if (k.dim() != d) throw Error(ErrorKind::DimensionMismatch, "MUB kets differ in dimension");
  }
  const MubResiduals r = mub_residuals(bases_);
  if (r.orthonormality > tol) throw Error(ErrorKind::NotOrthonormal, "residual " + std::to_string(r.orthonormality));
  if (r.unbiasedness > tol) throw Error(ErrorKind::NotUnbiased, "residual " + std::to_string(r.unbiasedness));
}

double MumResiduals::worst() const noexcept {
  return std::max({completeness, trace_one, cross_overlap, same_overlap});
}

MumResiduals mum_residuals(std::span<const Povm> povms, double kappa) {
  MumResiduals r;
  if (povms.empty()) return r;
  const int d = povms.front().dim();
  r.kappa_in_range = kappa > 1.0 / d && kappa <= 1.0 + 1e-12;
  const double off_diagonal = d > 1 ? (1.0 - kappa) / (d - 1) : 0.0;
  for (std::size_t s = 0; s < povms.size(); ++s) {
    r.completeness = std::max(r.completeness, povm_residuals(povms[s].elements()).completeness);
    const auto& ps = povms[s].elements();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      r.trace_one = std::max(r.trace_one, std::abs(ps[i].trace() - Complex(1.0)));
      for (std::size_t j = 0; j < ps.size(); ++j) {
        const double expected = i == j ? kappa : off_diagonal;
        r.same_overlap = std::max(r.same_overlap, std::abs(trace_product(ps[i], ps[j]) - Complex(expected)));
      }
    }
    for (std::size_t t = s + 1; t < povms.size(); ++t)
      for (const auto& p : ps)
        for (const auto& q : povms[t].elements())
          r.cross_overlap = std::max(r.cross_overlap, std::abs(trace_product(p, q) - Complex(1.0 / d)));
  }
  return r;
}

MumSet::MumSet(std::vector<Povm> povms, double kappa, double tol)
    : povms_(std::move(povms)), kappa_(kappa) {
  if (povms_.empty()) throw Error(ErrorKind::InvalidMum, "empty MUM set");
  const int d = povms_.front().dim();
  for (const auto& p : povms_) {
    if (p.dim() != d || static_cast<int>(p.size()) != d) {
      throw Error(ErrorKind::InvalidMum, "every MUM POVM needs d elements of dimension d");
    }
  }
  const MumResiduals r = mum_residuals(povms_, kappa_);
  if (!r.kappa_in_range) throw Error(ErrorKind::InvalidMum, "kappa outside (1/d, 1]");
  if (r.worst() > tol) throw Error(ErrorKind::InvalidMum, "condition residual " + std::to_string(r.worst()));
}

Complex root_of_unity(int d, int k) {
  const int r = ((k % d) + d) % d;
  const double angle = 2.0 * std::numbers::pi * r / d;
  return {std::cos(angle), std::sin(angle)};
}

PauliPair generalized_pauli(int d) {
  if (d < 2) throw Error(ErrorKind::RangeError, "generalized_pauli: d must be >= 2");
  PauliPair p{ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)};
  for (int j = 0; j < d; ++j) {
    p.z(j, j) = root_of_unity(d, j);
    p.x((j + 1) % d, j) = 1.0;
  }
  return p;
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

MubSet prime_mub_set(int d) {
  if (!is_prime(d)) throw Error(ErrorKind::NotPrime, std::to_string(d) + " is not prime");
  std::vector<Basis> bases;
  Basis standard;
  for (int i = 0; i < d; ++i) standard.push_back(Ket::basis(d, i));
  bases.push_back(std::move(standard));
  bases.push_back(shift_eigenbasis(d));
  for (int m = 1; m < d; ++m) bases.push_back(clock_shift_eigenbasis(d, m));
  return MubSet(std::move(bases));
}

Povm basis_to_povm(const Basis& basis) {
  if (basis.empty()) throw Error(ErrorKind::NotOrthonormal, "empty basis");
  const int d = basis.front().dim();
  if (static_cast<int>(basis.size()) != d) throw Error(ErrorKind::NotOrthonormal, "basis size differs from dimension");
  for (const auto& k : basis)
    if (k.dim() != d) throw Error(ErrorKind::NotOrthonormal, "kets differ in dimension");
  const Basis one[] = {basis};
  const MubResiduals r = mub_residuals(one);
  if (r.orthonormality > kTolerance) {
    throw Error(ErrorKind::NotOrthonormal, "residual " + std::to_string(r.orthonormality));
  }
  std::vector<ComplexMatrix> elements;
  for (const auto& k : basis) elements.push_back(outer(k.amplitudes()));
  return Povm(std::move(elements));
}

MumSet smooth_mum(const MubSet& mubs, double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw Error(ErrorKind::RangeError, "smooth_mum: mu must lie in (0, 1]");
  const int d = mubs.dim();
  const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  std::vector<Povm> povms;
  for (const auto& basis : mubs.bases()) {
    std::vector<ComplexMatrix> elements;
    for (const auto& k : basis) elements.push_back(mu * outer(k.amplitudes()) + (1.0 - mu) * mixed);
    povms.emplace_back(std::move(elements));
  }
  const double kappa = mu * mu + (1.0 - mu * mu) / d;
  return MumSet(std::move(povms), kappa);
}

std::vector<double> measure(const Povm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "measure: POVM dim " + std::to_string(povm.dim()) +
                                                  " vs state dim " + std::to_string(rho.dim()));
  }
  std::vector<double> p;
  p.reserve(povm.size());
  for (const auto& m : povm.elements()) {
    const Complex v = trace_product(m, rho.matrix());
    if (std::abs(v.imag()) > kClampWindow) {
      throw Error(ErrorKind::NumericalFailure, "measure: probability has imaginary part " + std::to_string(v.imag()));
    }
    double x = v.real();
    if (x < -kClampWindow || x > 1.0 + kClampWindow) {
      throw Error(ErrorKind::NumericalFailure, "measure: probability " + std::to_string(x) + " outside [0, 1]");
    }
    p.push_back(std::clamp(x, 0.0, 1.0));
  }
  return p;
}

MaxProbability max_of(std::span<const double> probabilities) {
  MaxProbability out;
  if (probabilities.empty()) return out;
  out.value = *std::max_element(probabilities.begin(), probabilities.end());
  for (std::size_t i = 0; i < probabilities.size(); ++i)
    if (probabilities[i] >= out.value - kArgmaxWindow) out.argmax.push_back(i);
  return out;
}

MaxProbability max_probability(const Povm& povm, const DensityMatrix& rho) {
  const auto p = measure(povm, rho);
  return max_of(p);
}

}  // namespace fgsep
