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

// Logical-level simulation of the two code-switching circuits between an
// even-odd stabilizer code A and a PI code B, plus the gate-cost ledger.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "piswitch/codes.hpp"
#include "piswitch/gpg.hpp"
#include "piswitch/prep.hpp"
#include "piswitch/tomography.hpp"

namespace piswitch {

enum class SwitchCircuit {
  // CNOT(A->B) CNOT(B->A), Z(omega) on B, CNOT(B->A) CNOT(A->B); B starts and ends in |0_B>.
  TwoCnotSwap,
  // CZ, H_A H_B, CZ, Z(omega) on B, CZ, H_A H_B, CZ; B starts and ends in |+_B>.
  CzHadamardVariant,
};

std::string to_string(SwitchCircuit c);
// "swap" or "cz"; throws DomainError otherwise.
SwitchCircuit parse_switch_circuit(const std::string& name);

struct SwitchPlan {
  EvenOddModel stabilizer_model;
  PiCode pi_code;
  double omega = 0.0;
  double omega_prime = 0.0;  // logical Z angle induced by Z(omega)^{(x)N_B}
  SwitchCircuit circuit = SwitchCircuit::TwoCnotSwap;
};

// Fills omega_prime; throws NotALogicalGateError if Z(omega)^{(x)N} is not
// logical on the code.
SwitchPlan make_switch_plan(EvenOddModel a, PiCode b, double omega, SwitchCircuit circuit);

struct SwitchOutcome {
  Eigen::Vector2cd output;       // A's logical state, normalized
  Eigen::Vector2cd expected;     // Z(omega') input
  double residual = 0.0;         // global-phase-minimized distance output vs expected
  double ancilla_return = 0.0;   // |<psi_out_A, ancilla_B | final>|^2
};

SwitchOutcome simulate_switch(const SwitchPlan& plan, const Eigen::Vector2cd& input_logical);

struct NoisySwitchOptions {
  int pulses = 10;
  PrepOptions prep;
};

struct NoisySwitchOutcome {
  Eigen::Matrix4cd logical;         // E_L on A with B projected onto |+_B>
  double process_fidelity = 0.0;    // vs Z(omega')
  double plus_prep_infidelity = 0.0;
  double hadamard_infidelity = 0.0; // 1 - F_pro of one noisy H_B
};

// CzHadamardVariant only (PreconditionError otherwise). |+_B> comes from the
// noisy preparation sequence, each H_B from logical_hadamard_channel, each CZ
// from three noisy GPG pulses on (w_A + w_B), w_A and w_B. A-side Hadamards
// and the transversal rotation are noise-free.
NoisySwitchOutcome simulate_switch_noisy(const SwitchPlan& plan, double cooperativity, const NoisySwitchOptions& options);

struct CostRow {
  int distance = 0;
  std::string code_a;
  std::string code_b_stabilizer;
  std::string code_b_pi;
  long n_tri = 0;
  long n_pi = 0;
  long lower_bound = 0;  // 8 (N_tri - 1)
  long upper_bound = 0;  // 7 N_PI + 6
};

std::vector<CostRow> gate_cost_table();
long roundtrip_cost(long n_b);  // 14 N_B + 13

}  // namespace piswitch
