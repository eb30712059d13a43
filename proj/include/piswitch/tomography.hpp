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

// Superoperators on Dicke density matrices, the logical Hadamard built from a
// state-preparation sequence, and process fidelity on the logical qubit.
//
// Vectorization is row-stacking: vec(rho)[i * d + j] = rho(i, j), so
// vec(A rho B) = (A (x) B^T) vec(rho) and rho -> U rho U^dagger is U (x) U^*.

#include <vector>

#include "piswitch/codes.hpp"
#include "piswitch/dicke.hpp"
#include "piswitch/gpg.hpp"
#include "piswitch/prep.hpp"
#include "piswitch/transversal.hpp"

namespace piswitch {

CVector vec_rows(const CMatrix& rho);
CMatrix unvec_rows(const CVector& v, int dim);

class Superoperator {
 public:
  // Throws DomainError unless matrix is (N+1)^2 square.
  Superoperator(int n_qubits, CMatrix matrix);
  static Superoperator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return n_qubits_ + 1; }
  const CMatrix& matrix() const { return matrix_; }

  DensityMatrix apply(const DensityMatrix& rho) const;
  // (A * B)(rho) = A(B(rho)).
  Superoperator operator*(const Superoperator& rhs) const;
  Superoperator scaled(double s) const { return Superoperator(n_qubits_, s * matrix_); }

 private:
  int n_qubits_;
  CMatrix matrix_;
};

// Throws DomainError if U is not unitary to 1e-10.
Superoperator superop_of_unitary(const DickeOperator& u);
// Diagonal: entry (n, m) is gpg_coefficient(n, m, {phi, C, N}).
Superoperator superop_of_noisy_lgpg(double phi, double cooperativity, int n_qubits);

// Superoperators of apply_sequence_noisy and apply_sequence_noisy_reverse.
Superoperator superop_of_sequence(const PulseSequence& seq, double cooperativity, int n_qubits);
Superoperator superop_of_sequence_reverse(const PulseSequence& seq, double cooperativity, int n_qubits);

struct HadamardEigenvectors {
  DickeState plus;   // eigenvalue +1
  DickeState minus;  // eigenvalue -1
};

// |lambda_+-> = ((1 +- sqrt2)|0_L> + |1_L>) / sqrt(2 (2 +- sqrt2)).
HadamardEigenvectors hadamard_eigenvectors(const PiCode& code);
// I - 2 |lambda_-><lambda_-|: logical H on the codespace.
DickeOperator ideal_logical_hadamard(const PiCode& code);
// W e^{i pi |D_N><D_N|} W^dagger for W the sequence unitary.
DickeOperator hadamard_from_sequence(const PulseSequence& seq, int n_qubits);

// F_ph = 1 - 1.8 N / sqrt(C), clamped to [0, 1]; 1 for C = infinity.
double phase_gate_fidelity(int n_qubits, double cooperativity);

// Infidelity of W|D_N> against |lambda_->.
double hadamard_prep_infidelity(const PiCode& code, const PulseSequence& seq);

// Noisy channel E_fwd o E_ph o E_rev with E_ph = F_ph C_{N-1}(Z) . C_{N-1}(Z)^dagger.
// Throws PreconditionError if the sequence prepares |lambda_-> from |D_N>
// with ideal infidelity above 1e-6.
Superoperator logical_hadamard_channel(const PiCode& code, const PulseSequence& prep_seq, double cooperativity);

// E_L(2x'+y', 2x+y) = <x'_L| E(|x_L><y_L|) |y'_L>.
Eigen::Matrix4cd project_logical(const Superoperator& e, const PiCode& code);

// (1/8) sum_{U in I,X,Y,Z} Tr[T U^dagger T^dagger E(U)].
double process_fidelity(const Eigen::Matrix4cd& e_logical, const Gate2x2& target);
// The same quantity for T = H written out as 16 entries of E_L.
double hadamard_process_fidelity_expanded(const Eigen::Matrix4cd& e_logical);

struct HadamardScanRow {
  double cooperativity = 0.0;
  double process_infidelity = 0.0;
  double phase_gate_fidelity = 1.0;
  PulseSequence sequence;       // |D_N> -> |lambda_-> sequence used at this C
  double prep_infidelity = 0.0; // its ideal infidelity, <= 1e-6
};

// Ideal |D_N> -> |lambda_-> optimum, improved for this C as in the scan.
HadamardScanRow hadamard_sequence_for(const PiCode& code, int pulses, double cooperativity, const PrepOptions& options);

struct HadamardScan {
  PrepResult prep;  // ideal |D_N> -> |lambda_-> optimum
  std::vector<HadamardScanRow> rows;
  PowerLawFit fit;
};

// 1 - F_pro against H on every grid point (sorted ascending; infinite C is
// allowed and left out of the fit). options.start is overridden with |D_N>.
// ReuseIdeal uses one ideal optimum everywhere. NoisyReoptimize also tries,
// per C, a noisy-mode optimum re-polished to ideal infidelity <= 1e-6 and
// keeps whichever channel is better.
HadamardScan scan_hadamard_vs_C(const PiCode& code, int pulses, const std::vector<double>& c_grid,
                                const PrepOptions& options, ScanMode mode = ScanMode::NoisyReoptimize);

}  // namespace piswitch
