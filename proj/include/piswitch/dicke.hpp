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

#pragma once

// Linear algebra on the symmetric (Dicke) subspace of N qubits.
//
// The canonical basis is ordered by Hamming weight w = 0..N, so index w holds
// |D^N_w>. The collective spin is the J = N/2 representation with
// Jz |D^N_w> = (N/2 - w) |D^N_w>; the weight operator is N/2 - Jz.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "piswitch/exact.hpp"

namespace piswitch {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

class DickeState {
 public:
  // Validates length N+1 and unit norm (1e-12).
  DickeState(int n_qubits, CVector amplitudes);

  static DickeState basis(int n_qubits, int weight);

  int n_qubits() const { return n_qubits_; }
  const CVector& amplitudes() const { return amplitudes_; }
  cplx amplitude(int weight) const { return amplitudes_(weight); }
  cplx inner(const DickeState& other) const;  // <this|other>

 private:
  int n_qubits_;
  CVector amplitudes_;
};

class DickeOperator {
 public:
  DickeOperator(int n_qubits, CMatrix matrix);

  static DickeOperator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const CMatrix& matrix() const { return matrix_; }

  // ||U^dagger U - I|| (spectral norm).
  double unitarity_defect() const;
  bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

  DickeOperator adjoint() const;
  DickeOperator operator*(const DickeOperator& rhs) const;
  // Result is not renormalized; a non-unitary operator throws if the image is
  // not unit norm.
  DickeState apply(const DickeState& state) const;

 private:
  int n_qubits_;
  CMatrix matrix_;
};

struct KrawtchoukQuery {
  long n;  // N
  long k;  // degree index
  long z;  // argument
};

// K^N_k(z) = sum_j C(z,j) C(N-z,k-j) (-1)^j. Throws DomainError unless
// 0 <= k,z <= N.
BigInt krawtchouk(const KrawtchoukQuery& q);

// <D^N_w| Z^{(x)k} (x) I^{(x)N-k} |D^N_w> = K^N_w(k) / C(N,w).
Rational dicke_diagonal_overlap(long n, long w, long k);

enum class CollectiveKind { Jx, Jy, Jz, Jz2, Weight, Weight2 };

// Throws DomainError for an unrecognised name ("Jx", "Jy", "Jz", "Jz2",
// "weight", "weight2").
CollectiveKind parse_collective_kind(std::string_view name);

DickeOperator collective_operator(int n_qubits, CollectiveKind kind);

// Diagonal of Jz in the weight basis: N/2 - w.
RVector jz_diagonal(int n_qubits);

// Precomputed spectral data for e^{i a Jz} and e^{i a Jy} on one Dicke space.
// Holds no mutable state; share freely between threads.
class SpinRotations {
 public:
  explicit SpinRotations(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const RVector& jz() const { return jz_; }
  const CMatrix& jy() const { return jy_; }

  // e^{i theta Jz} as its diagonal.
  CVector rz_diagonal(double theta) const;
  CMatrix ry(double xi) const;
  // R_z(theta) R_y(xi) R_z(gamma) = e^{i theta Jz} e^{i xi Jy} e^{i gamma Jz}.
  CMatrix rotation(double theta, double xi, double gamma) const;

 private:
  int n_qubits_;
  RVector jz_;
  CMatrix jy_;
  CMatrix jy_vectors_;
  RVector jy_values_;
};

DickeOperator global_rotation(int n_qubits, double theta, double xi, double gamma);

// Z(theta)^{(x)N}: phase e^{i theta w} on |D^N_w>.
DickeOperator transversal_z_rotation(int n_qubits, double theta);

// X^{(x)N} maps |D^N_w> to |D^N_{N-w}> (amplitude reversal).
DickeOperator transversal_x(int n_qubits);

// Z^{(x)N}: sign (-1)^w.
DickeOperator transversal_z(int n_qubits);

}  // namespace piswitch
