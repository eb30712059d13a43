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

#include <cmath>
#include <numeric>

#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/transversal.hpp"

using namespace piswitch;

namespace {

double angle_error(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

// Relative phase of Z(theta)^{(x)N} between the codewords, straight from the
// weight supports: every support weight w picks up e^{i theta w}.
double support_angle(const PiCode& code, double theta) {
  cplx p0 = 0, p1 = 0;
  for (int w = 0; w <= code.n_qubits; ++w) {
    p0 += std::norm(code.logical0.amplitude(w)) * std::polar(1.0, theta * w);
    p1 += std::norm(code.logical1.amplitude(w)) * std::polar(1.0, theta * w);
  }
  return std::arg(p1 / p0);
}

}  // namespace

TEST_SUITE("transversal") {
  TEST_CASE("known logical angles") {
    CHECK(angle_error(transversal_z_logical_action(build_pi11(), 3 * kPi / 4).equivalent_z_angle, kPi / 4) <= 1e-12);
    CHECK(angle_error(transversal_z_logical_action(build_pi7(), 2 * kPi / 5).equivalent_z_angle, 4 * kPi / 5) <= 1e-12);
    const LogicalAction a = transversal_z_logical_action(build_pi11(), 3 * kPi / 4);
    CHECK(a.is_diagonal);
  }

  TEST_CASE("coprime family gives Z(pi u / b) for odd g") {
    for (long b = 1; b <= 7; ++b)
      for (long g = 1; g <= 2 * b - 1; g += 2) {
        if (std::gcd(b, g) != 1) continue;
        const PiCode code = build_bg(b, g);
        const long k = coprime_multiplier(b, g);
        for (long u = 0; u < b; ++u) {
          CAPTURE(b);
          CAPTURE(g);
          CAPTURE(u);
          const double omega = u * k * kPi / b;
          const LogicalAction a = transversal_z_logical_action(code, omega);
          CHECK(a.is_diagonal);
          CHECK(angle_error(a.equivalent_z_angle, kPi * u / b) <= 1e-12);
          CHECK(angle_error(a.equivalent_z_angle, support_angle(code, omega)) <= 1e-12);
        }
      }
  }

  TEST_CASE("even g lands on Z(pi u / b + u pi)") {
    // With b odd and g even, k g = 1 mod b forces k g odd times b plus one.
    for (long b = 3; b <= 7; b += 2)
      for (long g = 2; g <= 2 * b - 1; g += 2) {
        if (std::gcd(b, g) != 1) continue;
        const long k = coprime_multiplier(b, g);
        for (long u = 0; u < b; ++u) {
          const double got = transversal_z_logical_action(build_bg(b, g), u * k * kPi / b).equivalent_z_angle;
          CHECK(angle_error(got, kPi * u / b + u * kPi) <= 1e-12);
        }
      }
  }

  TEST_CASE("an angle that splits a support is rejected") {
    CHECK_THROWS_AS(transversal_z_logical_action(build_pi7(), 0.3), NotALogicalGateError);
  }

  TEST_CASE("Z angles compose additively") {
    const PiCode code = build_pi7();
    for (double t1 : {2 * kPi / 5, 4 * kPi / 5, 6 * kPi / 5})
      for (double t2 : {-2 * kPi / 5, 8 * kPi / 5}) {
        const double a = transversal_z_logical_action(code, t1).equivalent_z_angle +
                         transversal_z_logical_action(code, t2).equivalent_z_angle;
        CHECK(angle_error(a, transversal_z_logical_action(code, t1 + t2).equivalent_z_angle) <= 1e-12);
      }
  }

  TEST_CASE("transversal X acts as a logical flip") {
    for (const PiCode& code : {build_pi7(), build_pi11(), build_bg(3, 2), build_bgm(4, 3, 2)}) {
      CAPTURE(code.label());
      const LogicalXRecord r = logical_x_action(code);
      CHECK(r.ok);
      CHECK(r.residual <= 1e-12);
      CHECK(std::abs(std::abs(r.image_of_0) - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("gate algebra") {
    CHECK(phase_min_distance(gate_h() * gate_h(), gate_identity()) <= 1e-12);
    CHECK(phase_min_distance(gate_s() * gate_s(), gate_z(kPi)) <= 1e-12);
    CHECK(phase_min_distance(gate_t() * gate_t(), gate_s()) <= 1e-12);
    // Global phase is invisible to the distance.
    const Gate2x2 u = tau60();
    CHECK(phase_min_distance(Gate2x2(std::polar(1.0, 0.7) * u.matrix()), u) <= 1e-12);
    CHECK(phase_min_distance(gate_z(0.1), gate_identity()) == doctest::Approx(2 * std::sin(0.1 / 4)).epsilon(1e-12));
    CHECK_THROWS_AS(Gate2x2(Eigen::Matrix2cd::Constant(1.0)), DomainError);
  }

  TEST_CASE("super golden gate from a rational rotation") {
    CHECK(phase_min_distance(tau60_tilde(super_golden_angle()), tau60()) <= 1e-12);
    CHECK(phase_min_distance(tau60_tilde(kPi * 167.0 / 704.0), tau60()) < 1e-6);
    const SuperGoldenSearch s = search_super_golden_rational(1e-6, 704);
    REQUIRE(s.best.has_value());
    CHECK(s.best->denominator <= 704);
    CHECK(s.best->distance < 1e-6);
    // Convergent denominators grow.
    for (std::size_t i = 1; i < s.convergents.size(); ++i)
      CHECK(s.convergents[i].denominator > s.convergents[i - 1].denominator);
    CHECK_FALSE(search_super_golden_rational(1e-12, 100).best.has_value());
  }
}
