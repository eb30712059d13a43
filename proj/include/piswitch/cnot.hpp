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

// Logical CNOTs between an even-odd stabilizer code (A, weight-sector model)
// and a PI code (B, Dicke space) built from displacements and conditional
// mode rotations.

#include <string>

#include "piswitch/codes.hpp"
#include "piswitch/gpg.hpp"
#include "piswitch/mode.hpp"

namespace piswitch {

struct CnotVerification {
  std::string direction;  // "pi-control" or "stab-control"
  std::string code_a;
  std::string code_b;
  // Logical matrix, index 2*control + target.
  Eigen::Matrix4cd logical;
  double residual = 0.0;             // vs ideal CNOT
  double literal_residual = 0.0;     // composition exactly as first proposed
  double leakage = 0.0;              // max ||(1-P) G |in>|| over logical inputs
  double involution_residual = 0.0;  // ||M^2 - I||
  double min_vacuum_fidelity = 1.0;
  int cutoff_used = 0;
  // Construction data.
  int q = 0;
  int s = 0;
  double alpha = 0.0;
  double alpha_correction = 0.0;
  int s_power = 0;                   // power of S_A applied as control-phase fix
  std::string target_frame;          // "standard" or "i|1>"
  bool ok = false;
};

// Smallest q >= 2 with logical-0 weights = 0 and logical-1 weights = s (mod
// q), s != 0, 2s != 0 (mod q). Throws PreconditionError if none exists.
std::pair<int, int> control_modulus(const PiCode& code);

// PI code B controls an X on the stabilizer code A (n_A odd). Tolerance 1e-6.
CnotVerification cnot_pi_control(const PiCode& code_b, const EvenOddModel& code_a, const NlGpgOptions& opt = {});

// Stabilizer code A controls a logical X on the PI code B.
CnotVerification cnot_stabilizer_control(const EvenOddModel& code_a, const PiCode& code_b,
                                         const NlGpgOptions& opt = {});

}  // namespace piswitch
