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


// Knill-Laflamme verification on the symmetric subspace.
//
// For Paulis E, F of weight <= t the product E^dagger F is, up to phase, a
// Pauli of weight <= 2t. Dicke states are permutation invariant, so the
// matrix element of a Pauli only depends on its counts (#X, #Y, #Z). We
// evaluate one representative X^a Y^b Z^c I^r per count triple.

#include <algorithm>
#include <cmath>
#include <string>

#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

constexpr int kMaxT = 6;
constexpr int kMaxQubits = 4096;

// Integer part of <D_w| X^a Y^b Z^c I^r |D_v> * sqrt(C(N,w) C(N,v)), without
// the global i^b. u1..u4 count ones among the X, Y, Z, I blocks of the ket.
BigInt pauli_count_sum(int n, int a, int b, int c, int w, int v) {
  const int r = n - a - b - c;
  BigInt s = 0;
  for (int u1 = 0; u1 <= a; ++u1) {
    for (int u2 = 0; u2 <= b; ++u2) {
      for (int u3 = 0; u3 <= c; ++u3) {
        const int u4 = v - u1 - u2 - u3;
        if (u4 < 0 || u4 > r) continue;
        if ((a - u1) + (b - u2) + u3 + u4 != w) continue;
        BigInt term = binomial(a, u1) * binomial(b, u2) * binomial(c, u3) * binomial(r, u4);
        if ((u2 + u3) % 2) s -= term; else s += term;
      }
    }
  }
  return s;
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string pauli_string(int x, int y, int z) {
  return std::string(x, 'X') + std::string(y, 'Y') + std::string(z, 'Z');
}

cplx sandwich(int n, const PauliCount& p, const CVector& bra, const std::vector<int>& sb,
              const CVector& ket, const std::vector<int>& sk) {
  cplx acc = 0;
  for (int w : sb)
    for (int v : sk) acc += std::conj(bra(w)) * pauli_dicke_element(n, p.x, p.y, p.z, w, v) * ket(v);
  return acc;
}

}  // namespace

cplx pauli_dicke_element(int n, int a, int b, int c, int w, int v) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > n || w < 0 || w > n || v < 0 || v > n) {
    throw DomainError("pauli_dicke_element: index out of range");
  }
  const BigInt s = pauli_count_sum(n, a, b, c, w, v);
  if (s == 0) return 0;
  const BigInt cw = binomial(n, w), cv = binomial(n, v);
  // s / sqrt(cw cv) = (s / cw) * sqrt(cw / cv), which avoids overflow.
  const double mag = to_double(Rational(s, cw)) * std::sqrt(to_double(Rational(cw, cv)));
  return i_power(b) * mag;
}

KlReport kl_check(const PiCode& code, int t, double tol) {
  if (t < 1) throw DomainError("kl_check: t must be >= 1");
  if (t > kMaxT || code.n_qubits > kMaxQubits) {
    throw ResourceError("kl_check: t=" + std::to_string(t) + " on N=" + std::to_string(code.n_qubits) +
                        " exceeds the enumeration budget (t <= " + std::to_string(kMaxT) + ", N <= " +
                        std::to_string(kMaxQubits) + ")");
  }
  const int n = code.n_qubits;
  const CVector& z = code.logical0.amplitudes();
  const CVector& o = code.logical1.amplitudes();
  const auto s0 = code.support0();
  const auto s1 = code.support1();

  KlReport rep;
  rep.code_label = code.label();
  rep.max_weight_checked = t;
  rep.tolerance = tol;
  double worst_score = 0.0;
  PauliCount worst{};
  const int kmax = std::min(2 * t, n);
  for (int a = 0; a <= kmax; ++a) {
    for (int b = 0; a + b <= kmax; ++b) {
      for (int c = 0; a + b + c <= kmax; ++c) {
        const PauliCount p{a, b, c};
        const double orth = std::abs(sandwich(n, p, z, s0, o, s1));
        const double deform = std::abs(sandwich(n, p, z, s0, z, s0) - sandwich(n, p, o, s1, o, s1));
        rep.orthogonality_residual = std::max(rep.orthogonality_residual, orth);
        rep.deformation_residual = std::max(rep.deformation_residual, deform);
        ++rep.representatives_checked;
        const double score = std::max(orth, deform);
        if (score > worst_score) {
          worst_score = score;
          worst = p;
        }
      }
    }
  }
  rep.distance_certified = rep.orthogonality_residual <= tol && rep.deformation_residual <= tol;
  if (!rep.distance_certified) {
    rep.counterexample = worst;
    // Split the product into F on the first min(k, t) letters and E on the rest.
    const std::string full = pauli_string(worst.x, worst.y, worst.z);
    const std::size_t cut = std::min<std::size_t>(full.size(), static_cast<std::size_t>(t));
    rep.counterexample_f = full.substr(0, cut);
    rep.counterexample_e = std::string(cut, 'I') + full.substr(cut);
    if (rep.counterexample_f.empty()) rep.counterexample_f = "I";
  }
  return rep;
}

}  // namespace piswitch
