// Copyright 2026 The piswitch Authors
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


#include "piswitch/dicke.hpp"

#include <cmath>
#include <string>

#include "piswitch/errors.hpp"

namespace piswitch {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rational falling_factorial(const Rational& x, long k) {
  if (k < 0) throw DomainError("falling_factorial: negative length");
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational generalized_binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational f = falling_factorial(x, k);
  BigInt fact = 1;
  for (long i = 2; i <= k; ++i) fact *= i;
  return f / Rational(fact);
}

BigInt double_factorial_odd(long m) {
  if (m < 0) throw DomainError("double_factorial_odd: negative argument");
  BigInt r = 1;
  for (long i = 1; i <= 2 * m - 1; i += 2) r *= i;
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const BigInt& z) { return z.convert_to<double>(); }

namespace {

void require_size(int n_qubits, Eigen::Index got, const char* what) {
  if (n_qubits < 1) throw DomainError(std::string(what) + ": n_qubits must be >= 1");
  if (got != n_qubits + 1) {
    throw DomainError(std::string(what) + ": expected dimension " + std::to_string(n_qubits + 1) +
                      ", got " + std::to_string(got));
  }
}

}  // namespace

DickeState::DickeState(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  require_size(n_qubits_, amplitudes_.size(), "DickeState");
  const double nrm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(nrm2) || std::abs(nrm2 - 1.0) > 1e-12) {
    throw DomainError("DickeState: squared norm " + std::to_string(nrm2) + " differs from 1");
  }
}

DickeState DickeState::basis(int n_qubits, int weight) {
  if (weight < 0 || weight > n_qubits) throw DomainError("DickeState::basis: weight out of range");
  CVector v = CVector::Zero(n_qubits + 1);
  v(weight) = 1.0;
  return DickeState(n_qubits, std::move(v));
}

cplx DickeState::inner(const DickeState& other) const {
  if (other.n_qubits_ != n_qubits_) throw DomainError("DickeState::inner: size mismatch");
  return amplitudes_.dot(other.amplitudes_);
}

DickeOperator::DickeOperator(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  require_size(n_qubits_, matrix_.rows(), "DickeOperator");
  require_size(n_qubits_, matrix_.cols(), "DickeOperator");
}

DickeOperator DickeOperator::identity(int n_qubits) {
  return DickeOperator(n_qubits, CMatrix::Identity(n_qubits + 1, n_qubits + 1));
}

double DickeOperator::unitarity_defect() const {
  const CMatrix d = matrix_.adjoint() * matrix_ - CMatrix::Identity(matrix_.rows(), matrix_.cols());
  return d.operatorNorm();
}

DickeOperator DickeOperator::adjoint() const { return DickeOperator(n_qubits_, matrix_.adjoint()); }

DickeOperator DickeOperator::operator*(const DickeOperator& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw DomainError("DickeOperator: size mismatch");
  return DickeOperator(n_qubits_, matrix_ * rhs.matrix_);
}

DickeState DickeOperator::apply(const DickeState& state) const {
  if (state.n_qubits() != n_qubits_) throw DomainError("DickeOperator::apply: size mismatch");
  return DickeState(n_qubits_, matrix_ * state.amplitudes());
}

BigInt krawtchouk(const KrawtchoukQuery& q) {
  if (q.n < 0 || q.k < 0 || q.k > q.n || q.z < 0 || q.z > q.n) {
    throw DomainError("krawtchouk: require 0 <= k, z <= N (N=" + std::to_string(q.n) +
                      ", k=" + std::to_string(q.k) + ", z=" + std::to_string(q.z) + ")");
  }
  BigInt s = 0;
  for (long j = 0; j <= q.k; ++j) {
    BigInt term = binomial(q.z, j) * binomial(q.n - q.z, q.k - j);
    if (j % 2) s -= term; else s += term;
  }
  return s;
}

Rational dicke_diagonal_overlap(long n, long w, long k) {
  if (w < 0 || w > n || k < 0 || k > n) throw DomainError("dicke_diagonal_overlap: require 0 <= w, k <= N");
  return Rational(krawtchouk({n, w, k})) / Rational(binomial(n, w));
}

CollectiveKind parse_collective_kind(std::string_view name) {
  if (name == "Jx") return CollectiveKind::Jx;
  if (name == "Jy") return CollectiveKind::Jy;
  if (name == "Jz") return CollectiveKind::Jz;
  if (name == "Jz2") return CollectiveKind::Jz2;
  if (name == "weight") return CollectiveKind::Weight;
  if (name == "weight2") return CollectiveKind::Weight2;
  throw DomainError("unknown collective operator '" + std::string(name) + "'");
}

RVector jz_diagonal(int n_qubits) {
  RVector d(n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) d(w) = 0.5 * n_qubits - w;
  return d;
}

namespace {

// J+ |D_w> = sqrt(w (N - w + 1)) |D_{w-1}>.
CMatrix raising(int n) {
  CMatrix jp = CMatrix::Zero(n + 1, n + 1);
  for (int w = 1; w <= n; ++w) jp(w - 1, w) = std::sqrt(double(w) * double(n - w + 1));
  return jp;
}

}  // namespace

DickeOperator collective_operator(int n_qubits, CollectiveKind kind) {
  if (n_qubits < 1) throw DomainError("collective_operator: N must be >= 1");
  const int d = n_qubits + 1;
  CMatrix m = CMatrix::Zero(d, d);
  switch (kind) {
    case CollectiveKind::Jx: {
      const CMatrix jp = raising(n_qubits);
      m = 0.5 * (jp + jp.adjoint());
      break;
    }
    case CollectiveKind::Jy: {
      const CMatrix jp = raising(n_qubits);
      m = (jp - jp.adjoint()) / cplx(0.0, 2.0);
      break;
    }
    case CollectiveKind::Jz:
    case CollectiveKind::Jz2: {
      const RVector jz = jz_diagonal(n_qubits);
      for (int w = 0; w < d; ++w) m(w, w) = kind == CollectiveKind::Jz ? jz(w) : jz(w) * jz(w);
      break;
    }
    case CollectiveKind::Weight:
    case CollectiveKind::Weight2:
      for (int w = 0; w < d; ++w) m(w, w) = kind == CollectiveKind::Weight ? w : double(w) * w;
      break;
  }
  return DickeOperator(n_qubits, std::move(m));
}

SpinRotations::SpinRotations(int n_qubits)
    : n_qubits_(n_qubits),
      jz_(jz_diagonal(n_qubits)),
      jy_(collective_operator(n_qubits, CollectiveKind::Jy).matrix()) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(jy_);
  jy_vectors_ = es.eigenvectors();
  jy_values_ = es.eigenvalues();
}

CVector SpinRotations::rz_diagonal(double theta) const {
  CVector d(n_qubits_ + 1);
  for (int w = 0; w <= n_qubits_; ++w) d(w) = std::polar(1.0, theta * jz_(w));
  return d;
}

CMatrix SpinRotations::ry(double xi) const {
  CVector ph(n_qubits_ + 1);
  for (int i = 0; i <= n_qubits_; ++i) ph(i) = std::polar(1.0, xi * jy_values_(i));
  return jy_vectors_ * ph.asDiagonal() * jy_vectors_.adjoint();
}

CMatrix SpinRotations::rotation(double theta, double xi, double gamma) const {
  return rz_diagonal(theta).asDiagonal() * ry(xi) * rz_diagonal(gamma).asDiagonal();
}

DickeOperator global_rotation(int n_qubits, double theta, double xi, double gamma) {
  if (!std::isfinite(theta) || !std::isfinite(xi) || !std::isfinite(gamma)) {
    throw DomainError("global_rotation: non-finite angle");
  }
  return DickeOperator(n_qubits, SpinRotations(n_qubits).rotation(theta, xi, gamma));
}

DickeOperator transversal_z_rotation(int n_qubits, double theta) {
  CMatrix m = CMatrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) m(w, w) = std::polar(1.0, theta * w);
  return DickeOperator(n_qubits, std::move(m));
}

DickeOperator transversal_x(int n_qubits) {
  CMatrix m = CMatrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) m(n_qubits - w, w) = 1.0;
  return DickeOperator(n_qubits, std::move(m));
}

DickeOperator transversal_z(int n_qubits) {
  CMatrix m = CMatrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) m(w, w) = (w % 2) ? -1.0 : 1.0;
  return DickeOperator(n_qubits, std::move(m));
}

}  // namespace piswitch
