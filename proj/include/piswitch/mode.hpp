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

// Truncated bosonic mode coupled to spin registers.

#include <vector>

#include "piswitch/dicke.hpp"

namespace piswitch {

// Truncated D(alpha) on Fock levels 0..M-1: the exponential of the truncated
// generator alpha a^dag - alpha^* a, hence exactly unitary on the cutoff
// space. Throws TruncationError when ||D(alpha) D(-alpha) - I|| on the lowest
// ceil(0.9 M) levels exceeds 1e-8. State-level truncation is guarded by
// JointState::check_health.
CMatrix displacement(int cutoff, cplx alpha);
// Same without the health check; returns the defect through *defect.
CMatrix displacement_unchecked(int cutoff, cplx alpha, double* defect = nullptr);
// <m|D(alpha)|n> of the untruncated operator for m, n < M (associated
// Laguerre form). Not unitary on the cutoff space.
CMatrix displacement_analytic(int cutoff, cplx alpha);

// Spin register with diagonal coupling to one mode. Rows index spin basis
// states (a product of an "A" factor of size dim_a and a "B" factor of size
// dim_b, row = ia * dim_b + ib); columns index photon number.
class JointState {
 public:
  JointState(int dim_a, int dim_b, int cutoff);
  // spin amplitudes (length dim_a*dim_b) with the mode in vacuum
  static JointState with_vacuum(int dim_a, int dim_b, int cutoff, const CVector& spin);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int cutoff() const { return static_cast<int>(psi_.cols()); }
  const CMatrix& amplitudes() const { return psi_; }

  // Mode operations run check_health() afterwards unless checked is false.
  void displace(cplx alpha, bool checked = true);
  // e^{i theta g_r n} on row r, photon number n.
  void conditional_rotation(const RVector& generator, double theta, bool checked = true);
  // Applies u (dim_b x dim_b) to the B factor of every row block.
  void apply_b(const CMatrix& u);
  // Applies u (dim_a x dim_a) to the A factor.
  void apply_a(const CMatrix& u);
  // Multiplies each row by a phase.
  void apply_diagonal(const CVector& phases);

  double norm() const { return psi_.norm(); }
  // Probability in the top 10% of Fock levels.
  double tail_mass() const;
  // Throws TruncationError if tail_mass() > 1e-8.
  void check_health() const;
  // Weight of the vacuum column.
  double vacuum_population() const;
  // Spin amplitudes conditioned on zero photons.
  CVector vacuum_component() const { return psi_.col(0); }

 private:
  int dim_a_;
  int dim_b_;
  CMatrix psi_;
};

struct NlGpgOptions {
  int cutoff = 64;
  bool adaptive = true;    // double the cutoff on truncation failure
  int max_cutoff = 1024;
  bool enforce_health = true;
};

struct NlGpgResult {
  CVector spin_phases;           // diagonal of the induced spin operator
  double residual = 0.0;         // max |u_w - e^{-2i chi sin(theta g_w + phi)}|
  double min_vacuum_fidelity = 1.0;
  int cutoff_used = 0;
};

// D(-beta) R D(-alpha) R^dagger D(beta) R D(alpha) R^dagger with
// R = e^{i theta g a^dagger a}, alpha = sqrt(chi) e^{i phi}, beta = sqrt(chi),
// acting on the diagonal spin generator g. Throws ClosureError if any branch
// leaves the mode with vacuum fidelity below 1 - 1e-8.
NlGpgResult nonlinear_gpg_generic(const RVector& generator, double theta, double phi, double chi,
                                  const NlGpgOptions& opt = {});
// Generator is the weight operator on N qubits.
NlGpgResult nonlinear_gpg(int n_qubits, double theta, double phi, double chi, const NlGpgOptions& opt = {});

// e^{i theta w a^dagger a} for weights 0..N on a cutoff-M mode, as a
// (N+1)M diagonal (row-major in (w, n)).
CVector conditional_rotation(int n_qubits, double theta, int cutoff);

struct CommutantRecord {
  double theta = 0.0;
  double x_residual = 0.0;  // single qubit
  double y_residual = 0.0;
  double register_residual = 0.0;  // 3-qubit brute force, all single-qubit X/Y errors
};

// R(theta Jz) P_k = e^{i theta Z_k} P_k R(theta Jz) for P = X, Y.
CommutantRecord spin_ft_commutant(double theta);

struct BoseCommutantRecord {
  double theta = 0.0;
  double lowering_residual = 0.0;  // R a - e^{-i theta w} a R
  double raising_residual = 0.0;   // R a^dag - e^{i theta w} a^dag R
  double commutator_norm = 0.0;    // ||[R, a]||, zero iff a error stays on the mode
};

BoseCommutantRecord bose_ft_commutant(double theta, int n_qubits = 3, int cutoff = 16);

}  // namespace piswitch
