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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "piswitch/codes.hpp"

namespace piswitch {

struct LogicalAction {
  cplx phase_on_0;
  cplx phase_on_1;
  bool is_diagonal = true;
  double equivalent_z_angle = 0.0;  // arg(phase_on_1 / phase_on_0) in [0, 2pi)
};

// Z(theta)^{(x)N} restricted to the codespace. Throws NotALogicalGateError
// when e^{i theta w} is not constant (1e-9) on a codeword's weight support.
LogicalAction transversal_z_logical_action(const PiCode& code, double theta);

struct LogicalXRecord {
  std::string operator_name;  // "X" (X^{(x)N}) or "ZX" (Z^{(x)N} X^{(x)N})
  cplx image_of_0;            // op|0> = image_of_0 |1>
  cplx image_of_1;            // op|1> = image_of_1 |0>
  double residual = 0.0;
  bool ok = false;
};

// Tries X^{(x)N}, then Z^{(x)N} X^{(x)N}; reports the first that swaps the
// codewords (1e-12), else the X^{(x)N} residual.
LogicalXRecord logical_x_action(const PiCode& code);

// k with k g = 1 (mod 2b) when g is odd, else k g = 1 (mod b). Requires
// gcd(b, g) = 1.
long coprime_multiplier(long b, long g);

class Gate2x2 {
 public:
  explicit Gate2x2(const Eigen::Matrix2cd& m);  // unitary to 1e-12
  const Eigen::Matrix2cd& matrix() const { return m_; }
  Gate2x2 operator*(const Gate2x2& rhs) const { return Gate2x2(m_ * rhs.m_); }
  Gate2x2 adjoint() const { return Gate2x2(m_.adjoint()); }

 private:
  Eigen::Matrix2cd m_;
};

Gate2x2 gate_identity();
Gate2x2 gate_h();
Gate2x2 gate_z(double theta);  // diag(1, e^{i theta})
Gate2x2 gate_s();
Gate2x2 gate_t();
Gate2x2 gate_f();  // H Z(-pi/2)
Gate2x2 gate_phi();
Gate2x2 gate_phi_star();
Gate2x2 tau60();
// T F^dagger Z(gamma) F Z T^dagger.
Gate2x2 tau60_tilde(double gamma);
// 2 arccos((2 + phi) / sqrt(5 phi + 7)), phi the golden ratio.
double super_golden_angle();

// min over lambda of ||e^{i lambda} U - V||_2, via the eigenphases of V^dagger U.
double phase_min_distance(const Gate2x2& u, const Gate2x2& v);
// Same for any square unitaries of equal size.
double phase_min_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

struct RationalApprox {
  long numerator = 0;    // g
  long denominator = 1;  // b
  double distance = 0.0;
};

struct SuperGoldenSearch {
  std::optional<RationalApprox> best;          // smallest denominator under epsilon
  std::vector<RationalApprox> convergents;     // visited, in order
};

// Walks the continued-fraction convergents of theta*/pi until the induced
// distance drops below epsilon, then scans all smaller denominators so the
// reported fraction has the smallest denominator. best is empty when nothing
// with denominator <= max_denominator works.
SuperGoldenSearch search_super_golden_rational(double epsilon, long max_denominator);

}  // namespace piswitch
