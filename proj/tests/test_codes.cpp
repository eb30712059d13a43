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

#include "piswitch/code_json.hpp"
#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/exact.hpp"

using namespace piswitch;

namespace {

double amp_distance(const PiCode& a, const PiCode& b) {
  REQUIRE(a.n_qubits == b.n_qubits);
  return std::max((a.logical0.amplitudes() - b.logical0.amplitudes()).norm(),
                  (a.logical1.amplitudes() - b.logical1.amplitudes()).norm());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return false;
  return true;
}

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("eleven-qubit code amplitudes") {
    const PiCode c = build_bg(4, 3);
    CHECK(c.n_qubits == 11);
    CHECK(c.logical0.amplitude(0).real() == doctest::Approx(std::sqrt(5.0) / 4).epsilon(1e-15));
    CHECK(c.logical0.amplitude(8).real() == doctest::Approx(std::sqrt(11.0) / 4).epsilon(1e-15));
    CHECK(c.support0() == std::vector<int>{0, 8});
    CHECK(c.support1() == std::vector<int>{3, 11});
    CHECK(amp_distance(c, build_pi11()) == 0.0);
    CHECK(amp_distance(c, build_bgm(4, 3, 1)) <= 1e-12);
    CHECK(amp_distance(c, build_aab_plus(3, 1, 4)) <= 1e-12);
  }

  TEST_CASE("seven-qubit code amplitudes") {
    const PiCode c = build_pi7();
    CHECK(c.logical0.amplitude(0).real() == doctest::Approx(std::sqrt(3.0 / 10)).epsilon(1e-15));
    CHECK(c.logical0.amplitude(5).real() == doctest::Approx(std::sqrt(7.0 / 10)).epsilon(1e-15));
    CHECK(c.logical1.amplitude(2).real() == doctest::Approx(std::sqrt(7.0 / 10)).epsilon(1e-15));
    CHECK(c.logical1.amplitude(7).real() == doctest::Approx(-std::sqrt(3.0 / 10)).epsilon(1e-15));
  }

  TEST_CASE("family invariants over the parameter grid") {
    for (long b = 1; b <= 6; ++b)
      for (long g = 1; g < 2 * b; ++g)
        for (long m = 1; m <= 4; ++m) {
          const PiCode c = build_bgm(b, g, m);
          CAPTURE(c.label());
          CHECK(c.n_qubits == 2 * b * m + g);
          CHECK(std::abs(c.logical0.amplitudes().norm() - 1.0) <= 1e-12);
          CHECK(std::abs(c.logical1.amplitudes().norm() - 1.0) <= 1e-12);
          CHECK(disjoint(c.support0(), c.support1()));
          // |1> is X^{(x)N}|0>: exact amplitude reversal.
          CHECK((c.logical1.amplitudes() - c.logical0.amplitudes().reverse()).norm() <= 1e-15);
          if (m == 1) {
            CHECK(amp_distance(c, build_bg(b, g)) <= 1e-14);
            CHECK(amp_distance(build_aab_plus(g, 1, 2 * b - g - 1), build_bg(b, g)) <= 1e-12);
          }
        }
  }

  TEST_CASE("squared amplitudes follow C(m,k) gamma^2 / (4^m (2m-1)!!)") {
    // (4,3,2): N = 19, weights 0, 8, 16.
    const auto sq = bgm_weights_squared(4, 3, 2);
    REQUIRE(sq.size() == 3);
    Rational total = 0;
    for (const auto& q : sq) total += q;
    CHECK(total == 1);
    // Hand values: gamma_k^2 = (m - g/2b)_(m-k) (m + g/2b)_(k) with
    // g/2b = 3/8: k=0: (13/8)(5/8), k=1: (13/8)(19/8), k=2: (19/8)(11/8).
    const Rational a0 = Rational(13, 8) * Rational(5, 8), a1 = Rational(13, 8) * Rational(19, 8) * 2,
                   a2 = Rational(19, 8) * Rational(11, 8);
    const Rational s = a0 + a1 + a2;
    CHECK(sq[0] == a0 / s);
    CHECK(sq[1] == a1 / s);
    CHECK(sq[2] == a2 / s);
  }

  TEST_CASE("nullspace construction") {
    const NullspaceResult r = build_bgm_nullspace(4, 3, 1);
    REQUIRE(r.matrix.size() == 1);
    CHECK(r.matrix[0][0] == 1);
    CHECK(r.matrix[0][1] == Rational(-5, 11));
    CHECK(r.null_vector[0] == Rational(5, 16));
    CHECK(r.null_vector[1] == Rational(11, 16));
    CHECK_THROWS_AS(build_bgm_nullspace(4, 3, 2), DomainError);
    CHECK(amp_distance(build_bgm_nullspace(6, 5, 2).code, build_bgm(6, 5, 2)) <= 1e-10);
    const PiCode t0 = build_bgm_nullspace(2, 1, 0).code;
    CHECK(t0.n_qubits == 1);
    CHECK_THROWS_AS(build_bgm_nullspace(4, 3, 2 + 1), DomainError);
  }

  TEST_CASE("lemma S vanishes exactly on its hypothesis grid") {
    int cases = 0;
    bool some_nonzero_outside = false;
    for (long b = 2; b <= 6; ++b)
      for (long g = 1; g <= 2 * b - 1; ++g)
        for (long m = 1; m <= 4; ++m) {
          for (long x = 1; x <= m; ++x, ++cases) CHECK(lemma_S(b, g, m, x) == 0);
          if (lemma_S_unchecked(b, g, m, m + 1) != 0) some_nonzero_outside = true;
        }
    CHECK(cases == 350);
    CHECK(some_nonzero_outside);
    CHECK(lemma_S(4, 3, 1, 1) == 0);
    CHECK(lemma_S(2, 1, 1, 1) == 0);
    CHECK_THROWS_AS(lemma_S(4, 3, 1, 2), DomainError);
  }

  TEST_CASE("even-odd predicate") {
    CHECK(is_even_odd(build_pi11()));
    CHECK_FALSE(is_even_odd(build_pi7()));
    for (long b = 1; b <= 6; ++b)
      for (long g = 1; g < 2 * b; g += 2) CHECK(is_even_odd(build_bg(b, g)));
  }

  TEST_CASE("claimed distances") {
    CHECK(build_pi7().claimed_distance == 3);
    CHECK(build_bg(4, 3).claimed_distance == 3);
    // The family theorem needs g, 2b - g >= 2t + 1, so it only promises 3 for
    // (4,3,2); the larger distance comes from the KL check.
    CHECK(build_bgm(4, 3, 2).claimed_distance == 3);
    CHECK(build_bgm(6, 5, 2).claimed_distance == 5);
    CHECK_FALSE(build_bg(2, 1).claimed_distance.has_value());
  }

  TEST_CASE("spec parsing and JSON round trip") {
    CHECK(parse_code_spec("bgm:4,3,2").label() == build_bgm(4, 3, 2).label());
    CHECK_THROWS_AS(parse_code_spec("bgm:4,3"), DomainError);
    CHECK_THROWS_AS(parse_code_spec("steane"), DomainError);
    for (const PiCode& c : {build_pi7(), build_pi11(), build_bgm(5, 3, 2), build_aab_plus(3, 2, 1)}) {
      const PiCode back = code_from_json(code_to_json(c));
      CHECK(back.label() == c.label());
      CHECK(amp_distance(back, c) <= 1e-15);
    }
    CHECK(code_to_json(build_pi7())["n_qubits"] == 7);
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(build_bg(2, 4), DomainError);
    CHECK_THROWS_AS(build_bgm(4, 3, 0), DomainError);
    CHECK_THROWS_AS(build_aab_plus(0, 1, 1), DomainError);
  }
}
