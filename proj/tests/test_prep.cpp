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
#include <fstream>
#include <random>

#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/prep.hpp"
#include "piswitch/tomography.hpp"

using namespace piswitch;

namespace {

PulseSequence random_sequence(int pulses, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<Pulse> p(pulses);
  for (auto& q : p) q = {u(rng), u(rng), u(rng), u(rng)};
  return PulseSequence(p);
}

DickeState plus_pi11() {
  const PiCode c = build_pi11();
  return DickeState(c.n_qubits, (c.logical0.amplitudes() + c.logical1.amplitudes()) / std::sqrt(2.0));
}

// Product of matrix exponentials of the generators, built independently of
// the library's rotation helpers.
CMatrix reference_unitary(const PulseSequence& seq, int n) {
  const CMatrix jz = collective_operator(n, CollectiveKind::Jz).matrix();
  const CMatrix jy = collective_operator(n, CollectiveKind::Jy).matrix();
  const cplx i(0, 1);
  CMatrix u = CMatrix::Identity(n + 1, n + 1);
  for (const Pulse& p : seq.pulses()) {
    const CMatrix r = CMatrix(i * p.theta * jz).exp() * CMatrix(i * p.xi * jy).exp() * CMatrix(i * p.gamma * jz).exp();
    const CMatrix g = CMatrix(i * p.phi * jz * jz).exp();
    u = r * g * u;
  }
  return u;
}

double phase_free_distance(const CMatrix& a, const CMatrix& b) {
  const cplx tr = (b.adjoint() * a).trace();
  return (a - (tr / std::abs(tr)) * b).norm();
}

}  // namespace

TEST_SUITE("prep") {
  TEST_CASE("sequence unitaries are unitary") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
      const int n = 1 + k % 11;
      const CMatrix u = sequence_unitary(random_sequence(1 + k % 10, rng), n);
      CHECK((u.adjoint() * u - CMatrix::Identity(n + 1, n + 1)).norm() < 1e-10);
    }
  }

  TEST_CASE("pulse ordering matches a matrix-exponential reference") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      const PulseSequence s = random_sequence(3, rng);
      CHECK(phase_free_distance(sequence_unitary(s, 7), reference_unitary(s, 7)) < 1e-9);
    }
  }

  TEST_CASE("noise-free limit of the noisy channel") {
    std::mt19937_64 rng(7);
    const int n = 11;
    const DickeState d0 = DickeState::basis(n, 0);
    for (int k = 0; k < 5; ++k) {
      const PulseSequence s = random_sequence(10, rng);
      const CVector psi = apply_sequence_ideal(s, d0).amplitudes();
      const DensityMatrix rho = apply_sequence_noisy(s, d0.amplitudes() * d0.amplitudes().adjoint(), 1e30);
      CHECK((rho - psi * psi.adjoint()).norm() < 1e-10);
    }
  }

  TEST_CASE("inverse sequence undoes the forward one") {
    std::mt19937_64 rng(9);
    const DickeState s0 = plus_pi11();
    const PulseSequence s = random_sequence(6, rng);
    const DickeState back = apply_sequence_ideal_inverse(s, apply_sequence_ideal(s, s0));
    CHECK(std::abs(std::abs(back.inner(s0)) - 1.0) < 1e-12);
  }

  TEST_CASE("phase canonicalisation keeps the map") {
    std::mt19937_64 rng(13);
    const PulseSequence s = random_sequence(5, rng);
    const PulseSequence c = canonicalize_phases(s, 11);
    for (const Pulse& p : c.pulses()) CHECK(std::abs(p.phi) <= kPi / 2 + 1e-12);
    CHECK(phase_free_distance(sequence_unitary(s, 11), sequence_unitary(c, 11)) < 1e-9);
    CHECK(c.total_gpg_angle() <= s.total_gpg_angle() + 1e-12);
  }

  TEST_CASE("analytic gradients agree with central differences") {
    std::mt19937_64 rng(17);
    const DickeState target = plus_pi11();
    const DickeState d0 = DickeState::basis(11, 0);
    for (int k = 0; k < 3; ++k) {
      const PulseSequence s = random_sequence(4, rng);
      for (auto [mode, c] : {std::pair{PrepMode::Ideal, 0.0}, std::pair{PrepMode::Noisy, 1e5}}) {
        const auto a = prep_gradient(s, target, mode, c, d0, GradientMethod::Adjoint);
        const auto f = prep_gradient(s, target, mode, c, d0, GradientMethod::CentralDifference);
        REQUIRE(a.size() == f.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - f[i]) < 1e-7);
      }
    }
  }

  TEST_CASE("trivial target") {
    PrepOptions o;
    o.restarts = 2;
    const PrepResult r = optimize_preparation(DickeState::basis(11, 0), 1, PrepMode::Ideal, 0.0, o);
    CHECK(r.infidelity <= 1e-10);
    CHECK(r.gradient_method == "bfgs2/adjoint-gradient");
  }

  TEST_CASE("logical plus and the Hadamard eigenvector are reachable") {
    const PrepResult plus = optimize_preparation(plus_pi11(), 10, PrepMode::Ideal, 0.0, PrepOptions{});
    CHECK(plus.infidelity <= 1e-6);
    CHECK_FALSE(plus.flagged);

    const PiCode code = build_pi11();
    PrepOptions o;
    o.start = DickeState::basis(11, 11);
    const PrepResult lam = optimize_preparation(hadamard_eigenvectors(code).minus, 9, PrepMode::Ideal, 0.0, o);
    CHECK(lam.infidelity <= 1e-6);
  }

  TEST_CASE("same seed, same result") {
    PrepOptions o;
    o.restarts = 3;
    o.seed = 42;
    const PrepResult a = optimize_preparation(plus_pi11(), 6, PrepMode::Ideal, 0.0, o);
    const PrepResult b = optimize_preparation(plus_pi11(), 6, PrepMode::Ideal, 0.0, o);
    CHECK(std::abs(a.infidelity - b.infidelity) <= 1e-15);
    CHECK(a.sequence.flatten() == b.sequence.flatten());
  }

  TEST_CASE("leakage bounds the noisy infidelity") {
    std::mt19937_64 rng(19);
    const DickeState target = plus_pi11();
    const DickeState d0 = DickeState::basis(11, 0);
    for (int k = 0; k < 10; ++k) {
      const PulseSequence s = random_sequence(10, rng);
      for (double c : {1e3, 1e6}) {
        const DensityMatrix rho = apply_sequence_noisy(s, d0.amplitudes() * d0.amplitudes().adjoint(), c);
        const double cost = prep_cost(s, target, PrepMode::Noisy, c, d0);
        CHECK(cost >= 1.0 - rho.trace().real() - 1e-12);
        CHECK(cost <= 1.0 + 1e-12);
      }
    }
  }

  TEST_CASE("stored reference sequence") {
    std::ifstream f(std::string(TEST_DATA_DIR) + "/plus_pi11_P10.json");
    REQUIRE(f.good());
    const nlohmann::json doc = nlohmann::json::parse(f);
    std::vector<Pulse> pulses;
    for (const auto& p : doc["result"]["sequence"])
      pulses.push_back({p["theta"].get<double>(), p["xi"].get<double>(), p["gamma"].get<double>(), p["phi"].get<double>()});
    const PulseSequence s(pulses);
    CHECK(s.size() == 10);
    CHECK(prep_cost(s, plus_pi11(), PrepMode::Ideal, 0.0, DickeState::basis(11, 0)) <= 1e-6);
  }

  TEST_CASE("power-law fit") {
    const std::vector<double> c = {1e4, 1e5, 1e6, 1e7, 1e8};
    std::vector<double> y;
    for (double x : c) y.push_back(3.0 * std::pow(x, -0.5));
    const PowerLawFit fit = fit_power_law(c, y);
    CHECK(fit.exponent == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(fit.r2 == doctest::Approx(1.0));
  }

  TEST_CASE("noisy scan decreases along C") {
    PrepOptions o;
    o.restarts = 2;
    const ScanResult r = scan_infidelity_vs_C(plus_pi11(), 10, {1e4, 1e5, 1e6, 1e7}, o);
    REQUIRE(r.rows.size() == 4);
    for (std::size_t k = 1; k < r.rows.size(); ++k) CHECK(r.rows[k].infidelity < r.rows[k - 1].infidelity);
    CHECK(r.fit.exponent < 0);
  }

  TEST_CASE("scan grid requirements") {
    CHECK_THROWS_AS(scan_infidelity_vs_C(plus_pi11(), 10, {1e4, 1e5, 1e6}, {}), DomainError);
    CHECK_THROWS_AS(scan_infidelity_vs_C(plus_pi11(), 10, {1e4, 2e4, 5e4, 1e5}, {}), DomainError);
    CHECK_THROWS_AS(PulseSequence(std::vector<Pulse>{}), DomainError);
    CHECK_THROWS_AS(PulseSequence(std::vector<Pulse>{{NAN, 0, 0, 0}}), DomainError);
  }
}
