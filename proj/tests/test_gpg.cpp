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
#include <random>

#include <Eigen/Eigenvalues>

#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/gpg.hpp"

using namespace piswitch;

namespace {

DensityMatrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = cplx(nd(rng), nd(rng));
  DensityMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_SUITE("gpg") {
  TEST_CASE("three-pulse phase is (-1)^{wA wB}") {
    for (long wa = 0; wa <= 24; ++wa)
      for (long wb = 0; wb <= 24; ++wb) {
        // Direct evaluation of e^{i pi/2 ((wa+wb)^2 - wa^2 - wb^2)} as a cross-check.
        const cplx direct = std::polar(1.0, kPi / 2 * double((wa + wb) * (wa + wb) - wa * wa - wb * wb));
        const cplx expect = (wa * wb) % 2 ? cplx(-1) : cplx(1);
        CHECK(cz_three_pulse_phase(wa, wb) == expect);
        CHECK(std::abs(direct - expect) < 1e-9);
      }
    CHECK_THROWS_AS(cz_three_pulse_phase(-1, 0), DomainError);
  }

  TEST_CASE("logical CZ on weight sectors") {
    const CzVerification a = logical_cz(steane_model(), build_pi11());
    CHECK(a.ok);
    CHECK(a.residual <= 1e-12);
    CHECK(logical_cz(repetition_model(3), build_pi11()).residual <= 1e-12);
    CHECK(logical_cz(model_from_pi_code(build_pi11()), build_pi11()).residual <= 1e-12);
    CHECK(logical_cz(steane_model(), build_bg(3, 1)).residual <= 1e-12);
    CHECK_THROWS_AS(logical_cz(steane_model(), build_pi7()), PreconditionError);
    CHECK(std::abs(a.logical(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(a.logical(3, 3) + 1.0) <= 1e-12);
  }

  TEST_CASE("non even-odd code is rejected") {
    // bg(3,2) has |1> on weights 2 and 6, both even.
    CHECK_THROWS_AS(logical_cz(steane_model(), build_bg(3, 2)), PreconditionError);
  }

  TEST_CASE("filter coefficients") {
    const NoisyGpgParams p{0.8, 1e3, 7};
    CHECK(std::abs(gpg_coefficient(0, 0, p) - 1.0) < 1e-15);
    const NoisyGpgParams inf{0.8, std::numeric_limits<double>::infinity(), 7};
    for (int n = 0; n <= 7; ++n)
      for (int m = 0; m <= 7; ++m)
        CHECK(std::abs(gpg_coefficient(n, m, inf) - std::polar(1.0, -double(n * n - m * m) * 0.8)) < 1e-12);
    // Decay uses |phi|.
    const NoisyGpgParams neg{-0.8, 1e3, 7};
    CHECK(std::abs(gpg_coefficient(3, 5, p)) == doctest::Approx(std::abs(gpg_coefficient(3, 5, neg))));
    CHECK_THROWS_AS(gpg_coefficient(0, 0, {0.1, 0.0, 3}), DomainError);
  }

  TEST_CASE("noisy l-GPG keeps rho Hermitian, positive and trace non-increasing") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 11;
      const DensityMatrix rho = random_density(n + 1, rng);
      for (double c : {10.0, 1e4, 1e8}) {
        const DensityMatrix out = noisy_lgpg(rho, {0.3 + 0.1 * trial, c, n});
        CHECK((out - out.adjoint()).norm() < 1e-12);
        CHECK(out.trace().real() <= rho.trace().real() + 1e-14);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(out);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
      }
    }
    CHECK_THROWS_AS(noisy_lgpg(CMatrix::Identity(3, 3), {0.1, 1.0, 3}), DomainError);
  }

  TEST_CASE("single pulse infidelity tracks the closed form") {
    const int n = 11;
    const double c = 1e6;
    const double approx = kPi * n / (2 * std::sqrt(2 * (1 + std::ldexp(1.0, -n)) * c));
    const double got = lgpg_process_infidelity(n, kPi / 2, c);
    CHECK(std::abs(got - approx) / approx < 0.1);
    CHECK(lgpg_process_infidelity(n, kPi / 2, 1e8) < got);
    CHECK(lgpg_process_infidelity(n, kPi / 2, std::numeric_limits<double>::infinity()) == doctest::Approx(0.0));
  }

  TEST_CASE("sector state algebra") {
    const EvenOddModel a = steane_model();
    const EvenOddModel b = model_from_pi_code(build_bg(3, 1));
    a.validate();
    b.validate();
    const WeightSectorState s = WeightSectorState::product(a.logical(1), b.logical(1));
    CHECK(s.norm() == doctest::Approx(1.0));
    const WeightSectorState t = apply_three_pulse_cz(s);
    CHECK(std::abs(t.coeff.cwiseAbs().sum() - s.coeff.cwiseAbs().sum()) < 1e-12);
    CHECK((t.coeff + s.coeff).norm() < 1e-12);
    const Eigen::Vector2cd psi(cplx(0.6, 0), cplx(0, 0.8));
    CHECK((a.decode(a.encode(psi)) - psi).norm() < 1e-14);
  }
}
