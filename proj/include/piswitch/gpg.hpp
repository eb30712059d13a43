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

// Linear geometric phase gates: the cavity-loss channel on Dicke density
// matrices, the three-pulse CZ identity, and the even-odd weight-sector
// model used for the stabilizer-code side.

#include <string>
#include <vector>

#include "piswitch/codes.hpp"
#include "piswitch/dicke.hpp"

namespace piswitch {

using DensityMatrix = CMatrix;

// cooperativity may be +infinity (noise-free limit).
struct NoisyGpgParams {
  double phi = 0.0;
  double cooperativity = 1.0;
  int n_qubits = 1;
};

// f_{n,m}(phi): decay exp(-(m-n)^2 (|phi|/2) sqrt(2(1+2^-N)/C)
//   - (m+n) (|phi|/2) / sqrt(2C(1+2^-N))) times coherent e^{-i(n^2-m^2)phi}.
cplx gpg_coefficient(int n, int m, const NoisyGpgParams& p);

// rho_{nm} -> f_{n,m} rho_{nm}. Trace non-increasing. Throws DomainError for
// C <= 0 or a non-Hermitian rho.
DensityMatrix noisy_lgpg(const DensityMatrix& rho, const NoisyGpgParams& p);

// 1 - F_pro of one pulse against e^{-i phi w^2} on the full 2^N register,
// weight sectors weighted by C(N,n) C(N,m) / 4^N.
double lgpg_process_infidelity(int n_qubits, double phi, double cooperativity);

// e^{i pi/2 (wA+wB)^2} e^{-i pi/2 wA^2} e^{-i pi/2 wB^2}, evaluated exactly.
cplx cz_three_pulse_phase(long w_a, long w_b);

// Code described by its amplitude on each Hamming-weight sector. Logical 0
// lives on even weights and logical 1 on odd weights, so every operator that
// is a function of the weight acts on the sectors exactly.
struct EvenOddModel {
  int n_qubits = 0;
  CVector amp0;  // length n+1, even weights only
  CVector amp1;  // length n+1, odd weights only
  std::string label;

  // Throws PreconditionError naming the model if the parity structure or
  // normalization (1e-12) fails.
  void validate() const;
  CVector logical(int bit) const { return bit ? amp1 : amp0; }
  // Embeds a logical 2-vector into sector space.
  CVector encode(const Eigen::Vector2cd& psi) const;
  // Logical components <0|v>, <1|v>.
  Eigen::Vector2cd decode(const CVector& v) const;
  // U on the codespace, identity on its complement.
  CMatrix logical_operator(const Eigen::Matrix2cd& u) const;
};

EvenOddModel repetition_model(int n);  // n odd
EvenOddModel steane_model();
// CSS code with X-type stabilizer generators given as bit rows; |0_L> is the
// uniform superposition over their span, |1_L> the logical-X coset.
EvenOddModel css_model(int n, const std::vector<std::vector<int>>& x_stabilizers,
                       const std::vector<int>& logical_x);
// Throws PreconditionError if the code is not even-odd.
EvenOddModel model_from_pi_code(const PiCode& code);

// Coefficients over (w_A, w_B).
struct WeightSectorState {
  int n_a = 0;
  int n_b = 0;
  CMatrix coeff;  // (n_a+1) x (n_b+1)

  static WeightSectorState product(const CVector& a, const CVector& b);
  double norm() const { return coeff.norm(); }
};

struct CzVerification {
  std::string code_a;
  std::string code_b;
  Eigen::Matrix4cd logical;  // rows/cols indexed 2*a + b
  double residual = 0.0;     // vs diag(1,1,1,-1)
  bool ok = false;
};

// Diagonal multiplication by cz_three_pulse_phase(w_A, w_B).
WeightSectorState apply_three_pulse_cz(const WeightSectorState& s);

CzVerification logical_cz(const EvenOddModel& a, const EvenOddModel& b);
// Throws PreconditionError if code_b is not even-odd.
CzVerification logical_cz(const EvenOddModel& a, const PiCode& code_b);

}  // namespace piswitch
