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

// Independent reference computations for the tests. Nothing here calls the
// library's own formulas for the quantity under test; codewords are expanded
// into the full 2^N computational basis and Paulis act on bit strings.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "piswitch/codes.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

// sum_w a_w |D_w> written out over all 2^N bit strings.
inline Vec expand(const piswitch::DickeState& s) {
  const int n = s.n_qubits();
  Vec v(std::size_t(1) << n);
  for (std::uint64_t x = 0; x < v.size(); ++x) {
    const int w = std::popcount(x);
    v[x] = s.amplitude(w) / std::sqrt(binom(n, w));
  }
  return v;
}

// Pauli string as X and Z masks; Y = i X Z on a qubit.
struct Pauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

// P|v>, with P = prod_q (X^x_q Z^z_q) times i per Y.
inline Vec apply(const Pauli& p, const Vec& v) {
  Vec out(v.size());
  const int ny = std::popcount(p.x & p.z);
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx global = ipow[ny % 4];
  for (std::uint64_t s = 0; s < v.size(); ++s) {
    const double sign = (std::popcount(s & p.z) % 2) ? -1.0 : 1.0;
    out[s ^ p.x] += global * sign * v[s];
  }
  return out;
}

inline cplx dot(const Vec& a, const Vec& b) {
  cplx s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

// Calls f(P) for every Pauli with support size <= w.
template <typename F>
void for_each_pauli(int n, int w, F&& f) {
  std::vector<int> support;
  auto rec = [&](auto&& self, int start) -> void {
    // letters on the chosen support
    const int k = int(support.size());
    std::vector<int> letter(k, 1);
    while (true) {
      Pauli p;
      for (int i = 0; i < k; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << support[i];
        if (letter[i] == 1 || letter[i] == 2) p.x |= bit;
        if (letter[i] == 2 || letter[i] == 3) p.z |= bit;
      }
      f(p);
      int i = 0;
      while (i < k && letter[i] == 3) letter[i++] = 1;
      if (i == k) break;
      ++letter[i];
    }
    if (k == w) return;
    for (int q = start; q < n; ++q) {
      support.push_back(q);
      self(self, q + 1);
      support.pop_back();
    }
  };
  rec(rec, 0);
}

struct KlVerdict {
  bool holds = true;
  double worst = 0.0;
};

// Knill-Laflamme for all errors of weight <= t: since products E^dagger F of
// such errors are (up to phase) exactly the Paulis of weight <= 2t, check
// <0|P|1> = 0 and <0|P|0> = <1|P|1> for each of them.
inline KlVerdict brute_force_kl(const piswitch::PiCode& code, int t, double tol = 1e-9) {
  const Vec c0 = expand(code.logical0);
  const Vec c1 = expand(code.logical1);
  KlVerdict v;
  for_each_pauli(code.n_qubits, 2 * t, [&](const Pauli& p) {
    const Vec p1 = apply(p, c1);
    const Vec p0 = apply(p, c0);
    const double off = std::abs(dot(c0, p1));
    const double def = std::abs(dot(c0, p0) - dot(c1, p1));
    v.worst = std::max({v.worst, off, def});
  });
  v.holds = v.worst <= tol;
  return v;
}

// <D_w| Z^{(x)k} I |D_w> by summing over bit strings.
inline double diagonal_overlap(int n, int w, int k) {
  double s = 0.0;
  const std::uint64_t mask = (std::uint64_t(1) << k) - 1;
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
    if (std::popcount(x) != w) continue;
    s += (std::popcount(x & mask) % 2) ? -1.0 : 1.0;
  }
  return s / binom(n, w);
}

}  // namespace oracle
