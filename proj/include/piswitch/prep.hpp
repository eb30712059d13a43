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

// Pulse-sequence state preparation on the Dicke space:
//   |Psi> = prod_p R(theta_p, xi_p, gamma_p) U(phi_p) |start>,
// with U(phi) = e^{i phi Jz^2} and pulses applied in index order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "piswitch/dicke.hpp"
#include "piswitch/gpg.hpp"

namespace piswitch {

struct Pulse {
  double theta = 0.0;
  double xi = 0.0;
  double gamma = 0.0;
  double phi = 0.0;
};

class PulseSequence {
 public:
  PulseSequence() = default;
  // Throws DomainError if empty or non-finite.
  explicit PulseSequence(std::vector<Pulse> pulses);

  int size() const { return static_cast<int>(pulses_.size()); }
  const std::vector<Pulse>& pulses() const { return pulses_; }
  const Pulse& operator[](int p) const { return pulses_[p]; }

  std::vector<double> flatten() const;  // (theta, xi, gamma, phi) per pulse
  static PulseSequence unflatten(const std::vector<double>& x);
  // Sum of |phi_p|; the noisy channel's decay is proportional to it.
  double total_gpg_angle() const;

 private:
  std::vector<Pulse> pulses_;
};

// phi -> phi - k pi into [-pi/2, pi/2]. For odd N the ideal and noisy pulses
// are unchanged up to global phase, so this never changes the prepared state.
PulseSequence canonicalize_phases(const PulseSequence& seq, int n_qubits);

DickeState apply_sequence_ideal(const PulseSequence& seq, const DickeState& start);
// Inverse unitary of apply_sequence_ideal.
DickeState apply_sequence_ideal_inverse(const PulseSequence& seq, const DickeState& state);
// The sequence as a unitary on the Dicke space.
CMatrix sequence_unitary(const PulseSequence& seq, int n_qubits);

// One noisy pulse: noisy_lgpg(-phi) then the noise-free e^{i N phi Jz}, so the
// C = infinity limit equals U(phi) up to global phase.
DensityMatrix noisy_gpg_step(const DensityMatrix& rho, double phi, double cooperativity, int n_qubits);

// Noisy pulses interleaved with exact rotations R rho R^dagger.
DensityMatrix apply_sequence_noisy(const PulseSequence& seq, const DensityMatrix& rho0, double cooperativity);
// Reverse map: pulses in reverse order, each R^dagger conjugation followed by
// the noisy pulse with -phi. Reuses the forward parameters.
DensityMatrix apply_sequence_noisy_reverse(const PulseSequence& seq, const DensityMatrix& rho0, double cooperativity);

enum class PrepMode { Ideal, Noisy };
enum class GradientMethod { Adjoint, CentralDifference };

std::string to_string(GradientMethod g);

struct PrepOptions {
  int restarts = 8;
  std::uint64_t seed = 1;
  int max_iters = 3000;
  double tol = 1e-13;                 // stop once the cost is below this
  GradientMethod gradient = GradientMethod::Adjoint;
  double fd_step = 1e-6;
  std::optional<PulseSequence> warm_start;  // used as the first restart
  std::optional<DickeState> start;          // default |D_0>
  int threads = 0;                          // 0: hardware concurrency
};

struct PrepResult {
  PulseSequence sequence;
  double infidelity = 1.0;
  bool noisy = false;
  double cooperativity = 0.0;  // when noisy
  int restarts_used = 0;
  std::uint64_t seed = 0;
  std::string gradient_method;
  bool flagged = false;        // optimizer stopped on an error
  std::string flag_reason;
};

// Cost 1 - |<target|Psi>|^2 (ideal) or 1 - <target|rho|target> (noisy).
double prep_cost(const PulseSequence& seq, const DickeState& target, PrepMode mode, double cooperativity,
                 const DickeState& start);
// Gradient of prep_cost w.r.t. flatten(), by a forward/backward sweep
// (Adjoint) or central differences. For noisy mode the |phi| kink at phi = 0
// uses the zero subgradient.
std::vector<double> prep_gradient(const PulseSequence& seq, const DickeState& target, PrepMode mode,
                                  double cooperativity, const DickeState& start, GradientMethod method,
                                  double fd_step = 1e-6);

// Multistart local search (GSL vector BFGS). Deterministic given the options.
PrepResult optimize_preparation(const DickeState& target, int pulses, PrepMode mode, double cooperativity,
                                const PrepOptions& options);

struct PowerLawFit {
  double prefactor = 0.0;  // y = prefactor * C^exponent
  double exponent = 0.0;
  double r2 = 0.0;
};

// Least squares on (log C, log y). Needs >= 2 points with y > 0.
PowerLawFit fit_power_law(const std::vector<double>& c, const std::vector<double>& y);

enum class ScanMode { ReuseIdeal, NoisyReoptimize };

struct ScanRow {
  double cooperativity = 0.0;
  double infidelity = 0.0;
  PulseSequence sequence;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  PowerLawFit fit;
  PrepResult ideal;
};

// Needs >= 4 grid points spanning >= 3 decades. NoisyReoptimize warm-starts
// every point from the ideal optimum and keeps the better of the two.
ScanResult scan_infidelity_vs_C(const DickeState& target, int pulses, const std::vector<double>& c_grid,
                                const PrepOptions& options, ScanMode mode = ScanMode::NoisyReoptimize);

}  // namespace piswitch
