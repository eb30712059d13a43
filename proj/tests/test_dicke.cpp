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

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "piswitch/dicke.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/exact.hpp"

using namespace piswitch;

namespace {

// J+ from its ladder elements, independent of the library's Jy.
CMatrix ladder_jy(int n) {
  CMatrix jp = CMatrix::Zero(n + 1, n + 1);
  for (int w = 1; w <= n; ++w) jp(w - 1, w) = std::sqrt(double(w) * (n - w + 1));
  return (jp - jp.adjoint()) / cplx(0, 2);
}

}  // namespace

TEST_SUITE("dicke") {
  TEST_CASE("states validate their normalization") {
    CHECK_THROWS_AS(DickeState(3, CVector::Ones(4)), DomainError);
    CHECK_THROWS_AS(DickeState(3, CVector::Ones(3) / std::sqrt(3.0)), DomainError);
    const DickeState d = DickeState::basis(5, 2);
    CHECK(std::abs(d.inner(d) - 1.0) < 1e-15);
    CHECK(std::abs(d.inner(DickeState::basis(5, 3))) == 0.0);
  }

  TEST_CASE("Krawtchouk overlaps match bit-string sums") {
    for (int n = 1; n <= 10; ++n)
      for (int w = 0; w <= n; ++w)
        for (int k = 0; k <= n; ++k) {
          const double lib = to_double(dicke_diagonal_overlap(n, w, k));
          CHECK(lib == doctest::Approx(oracle::diagonal_overlap(n, w, k)).epsilon(1e-12));
        }
  }

  TEST_CASE("Krawtchouk symmetry C(N,z) K_k(z) = C(N,k) K_z(k)") {
    for (long n = 1; n <= 14; ++n)
      for (long k = 0; k <= n; ++k)
        for (long z = 0; z <= n; ++z) {
          CHECK(binomial(n, z) * krawtchouk({n, k, z}) == binomial(n, k) * krawtchouk({n, z, k}));
        }
    CHECK_THROWS_AS(krawtchouk({4, 5, 0}), DomainError);
  }

  TEST_CASE("collective operators obey the su(2) algebra") {
    for (int n : {1, 4, 7, 11}) {
      const CMatrix jx = collective_operator(n, CollectiveKind::Jx).matrix();
      const CMatrix jy = collective_operator(n, CollectiveKind::Jy).matrix();
      const CMatrix jz = collective_operator(n, CollectiveKind::Jz).matrix();
      const cplx i(0, 1);
      CHECK((jx * jy - jy * jx - i * jz).norm() < 1e-12);
      const double j = n / 2.0;
      const CMatrix casimir = jx * jx + jy * jy + jz * jz;
      CHECK((casimir - j * (j + 1) * CMatrix::Identity(n + 1, n + 1)).norm() < 1e-11);
      CHECK((jy - ladder_jy(n)).norm() < 1e-12);
    }
    CHECK(parse_collective_kind("weight2") == CollectiveKind::Weight2);
    CHECK_THROWS_AS(parse_collective_kind("Jw"), DomainError);
  }

  TEST_CASE("rotations equal matrix exponentials of the collective generators") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int n : {2, 5, 11}) {
      const SpinRotations rot(n);
      const CMatrix jy = ladder_jy(n);
      CMatrix jz = CMatrix::Zero(n + 1, n + 1);
      for (int w = 0; w <= n; ++w) jz(w, w) = n / 2.0 - w;
      for (int trial = 0; trial < 5; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng);
        const cplx i(0, 1);
        const CMatrix want = CMatrix(i * a * jz).exp() * CMatrix(i * b * jy).exp() * CMatrix(i * c * jz).exp();
        CHECK((rot.rotation(a, b, c) - want).norm() < 1e-11);
      }
    }
  }

  TEST_CASE("transversal X reverses and transversal Z signs the weights") {
    const int n = 6;
    CVector v(n + 1);
    for (int w = 0; w <= n; ++w) v(w) = cplx(w + 1, -w);
    v.normalize();
    const DickeState s(n, v);
    const CVector x = transversal_x(n).apply(s).amplitudes();
    const CVector z = transversal_z(n).apply(s).amplitudes();
    for (int w = 0; w <= n; ++w) {
      CHECK(std::abs(x(w) - v(n - w)) < 1e-15);
      CHECK(std::abs(z(w) - ((w % 2) ? -v(w) : v(w))) < 1e-15);
    }
    // Z(pi) on every qubit is Z^{(x)N}.
    CHECK((transversal_z_rotation(n, kPi).matrix() - transversal_z(n).matrix()).norm() < 1e-14);
  }

  TEST_CASE("global rotations are unitary and compose through adjoints") {
    const DickeOperator r = global_rotation(9, 0.3, 1.1, -2.0);
    CHECK(r.is_unitary(1e-12));
    CHECK((r * r.adjoint()).matrix().isApprox(CMatrix::Identity(10, 10), 1e-12));
    CHECK_THROWS_AS(global_rotation(3, std::nan(""), 0, 0), DomainError);
  }
}
