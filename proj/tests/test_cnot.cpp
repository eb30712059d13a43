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

#include <doctest.h>

#include "piswitch/cnot.hpp"
#include "piswitch/codes.hpp"
#include "piswitch/gpg.hpp"

using namespace piswitch;

namespace {

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

// Largest entry of |M - e^{i a} ref| after fitting the global phase.
double phase_fit(const Eigen::Matrix4cd& m, const Eigen::Matrix4cd& ref) {
  const cplx tr = (ref.adjoint() * m).trace();
  const cplx ph = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1);
  return (m - ph * ref).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("cnot") {
  TEST_CASE("control modulus") {
    CHECK(control_modulus(build_pi7()) == std::pair<int, int>{5, 2});
    CHECK(control_modulus(build_pi11()) == std::pair<int, int>{4, 3});
  }

  TEST_CASE("PI register as control") {
    for (const PiCode& code : {build_pi7(), build_pi11()}) {
      CAPTURE(code.label());
      const CnotVerification v = cnot_pi_control(code, steane_model());
      CHECK(v.ok);
      CHECK(v.residual <= 1e-6);
      CHECK(phase_fit(v.logical, cnot_matrix()) <= 1e-6);
      CHECK(v.leakage <= 1e-6);
      CHECK(v.involution_residual <= 1e-6);
      CHECK(v.min_vacuum_fidelity >= 1 - 1e-8);
    }
  }

  TEST_CASE("stabilizer register as control") {
    for (const PiCode& code : {build_pi7(), build_pi11()}) {
      CAPTURE(code.label());
      const CnotVerification v = cnot_stabilizer_control(steane_model(), code);
      CHECK(v.ok);
      CHECK(v.residual <= 1e-6);
      CHECK(phase_fit(v.logical, cnot_matrix()) <= 1e-6);
      CHECK(v.leakage <= 1e-6);
      CHECK(v.involution_residual <= 1e-6);
      CHECK(v.min_vacuum_fidelity >= 1 - 1e-8);
      // Control |0_A> leaves B alone.
      CHECK(std::abs(std::abs(v.logical(0, 0)) - 1.0) <= 1e-6);
      CHECK(std::abs(std::abs(v.logical(1, 1)) - 1.0) <= 1e-6);
    }
  }

  TEST_CASE("repetition code as the stabilizer side") {
    CHECK(cnot_pi_control(build_pi7(), repetition_model(3)).ok);
    CHECK(cnot_stabilizer_control(repetition_model(5), build_pi7()).ok);
  }
}
