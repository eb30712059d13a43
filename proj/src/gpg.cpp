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


#include "piswitch/gpg.hpp"

#include <cmath>
#include <limits>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

void require_cooperativity(double c) {
  if (!(c > 0)) throw DomainError("cooperativity must be positive (got " + std::to_string(c) + ")");
}

// Decay part of f_{n,m}; 1 in the C = infinity limit.
double decay(int n, int m, double phi, double c, int n_qubits) {
  if (std::isinf(c)) return 1.0;
  const double eps = std::ldexp(1.0, -n_qubits);
  const double half = std::abs(phi) / 2.0;
  const double dm = double(m - n);
  const double e = dm * dm * half * std::sqrt(2.0 * (1.0 + eps) / c) + double(m + n) * half / std::sqrt(2.0 * c * (1.0 + eps));
  return std::exp(-e);
}

cplx i_pow(long k) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

cplx gpg_coefficient(int n, int m, const NoisyGpgParams& p) {
  require_cooperativity(p.cooperativity);
  const double coherent = -double(n * n - m * m) * p.phi;
  return decay(n, m, p.phi, p.cooperativity, p.n_qubits) * std::polar(1.0, coherent);
}

DensityMatrix noisy_lgpg(const DensityMatrix& rho, const NoisyGpgParams& p) {
  require_cooperativity(p.cooperativity);
  const int d = p.n_qubits + 1;
  if (rho.rows() != d || rho.cols() != d) throw DomainError("noisy_lgpg: density matrix size mismatch");
  if ((rho - rho.adjoint()).norm() > 1e-10 * std::max(1.0, rho.norm())) {
    throw DomainError("noisy_lgpg: density matrix is not Hermitian");
  }
  DensityMatrix out(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) out(n, m) = gpg_coefficient(n, m, p) * rho(n, m);
  return out;
}

double lgpg_process_infidelity(int n_qubits, double phi, double cooperativity) {
  require_cooperativity(cooperativity);
  std::vector<double> p(n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) {
    p[w] = std::exp(std::lgamma(n_qubits + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n_qubits - w + 1.0) -
                    n_qubits * std::log(2.0));
  }
  double f = 0.0;
  for (int n = 0; n <= n_qubits; ++n)
    for (int m = 0; m <= n_qubits; ++m) f += p[n] * p[m] * decay(n, m, phi, cooperativity, n_qubits);
  return 1.0 - f;
}

cplx cz_three_pulse_phase(long w_a, long w_b) {
  if (w_a < 0 || w_b < 0) throw DomainError("cz_three_pulse_phase: weights must be non-negative");
  // e^{i pi/2 k} = i^k; reduce every square mod 4 before combining.
  const long joint = ((w_a + w_b) % 4) * ((w_a + w_b) % 4) % 4;
  const long sa = (w_a % 4) * (w_a % 4) % 4;
  const long sb = (w_b % 4) * (w_b % 4) % 4;
  return i_pow(joint) * i_pow(-sa) * i_pow(-sb);
}

void EvenOddModel::validate() const {
  const std::string who = label.empty() ? "code A" : label;
  if (n_qubits < 1 || amp0.size() != n_qubits + 1 || amp1.size() != n_qubits + 1) {
    throw PreconditionError(who + ": sector vectors have the wrong length");
  }
  for (int w = 0; w <= n_qubits; ++w) {
    if ((w % 2) && std::abs(amp0(w)) > 1e-14) throw PreconditionError(who + " is not even-odd: logical 0 has odd weight");
    if (!(w % 2) && std::abs(amp1(w)) > 1e-14) throw PreconditionError(who + " is not even-odd: logical 1 has even weight");
  }
  if (std::abs(amp0.squaredNorm() - 1) > 1e-12 || std::abs(amp1.squaredNorm() - 1) > 1e-12) {
    throw PreconditionError(who + ": sector amplitudes are not normalized");
  }
}

CVector EvenOddModel::encode(const Eigen::Vector2cd& psi) const { return psi(0) * amp0 + psi(1) * amp1; }

Eigen::Vector2cd EvenOddModel::decode(const CVector& v) const {
  return Eigen::Vector2cd(amp0.dot(v), amp1.dot(v));
}

CMatrix EvenOddModel::logical_operator(const Eigen::Matrix2cd& u) const {
  const int d = n_qubits + 1;
  CMatrix basis(d, 2);
  basis.col(0) = amp0;
  basis.col(1) = amp1;
  const CMatrix proj = basis * basis.adjoint();
  return basis * u * basis.adjoint() + (CMatrix::Identity(d, d) - proj);
}

EvenOddModel repetition_model(int n) {
  if (n < 1 || n % 2 == 0) throw PreconditionError("repetition code needs an odd length to be even-odd");
  EvenOddModel m{n, CVector::Zero(n + 1), CVector::Zero(n + 1), "rep" + std::to_string(n)};
  m.amp0(0) = 1.0;
  m.amp1(n) = 1.0;
  m.validate();
  return m;
}

EvenOddModel css_model(int n, const std::vector<std::vector<int>>& x_stabilizers, const std::vector<int>& logical_x) {
  if (n < 1 || n > 62 || static_cast<int>(logical_x.size()) != n) throw DomainError("css_model: bad length");
  if (x_stabilizers.size() > 24) throw ResourceError("css_model: too many generators to enumerate");
  auto to_mask = [n](const std::vector<int>& row) {
    if (static_cast<int>(row.size()) != n) throw DomainError("css_model: row length mismatch");
    unsigned long long mask = 0;
    for (int i = 0; i < n; ++i)
      if (row[i]) mask |= 1ULL << i;
    return mask;
  };
  std::vector<unsigned long long> gens;
  for (const auto& r : x_stabilizers) gens.push_back(to_mask(r));
  const unsigned long long lx = to_mask(logical_x);
  std::vector<double> c0(n + 1, 0.0), c1(n + 1, 0.0);
  const unsigned long long total = 1ULL << gens.size();
  for (unsigned long long s = 0; s < total; ++s) {
    unsigned long long word = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (s >> j & 1ULL) word ^= gens[j];
    c0[__builtin_popcountll(word)] += 1.0;
    c1[__builtin_popcountll(word ^ lx)] += 1.0;
  }
  EvenOddModel m{n, CVector::Zero(n + 1), CVector::Zero(n + 1), "css" + std::to_string(n)};
  for (int w = 0; w <= n; ++w) {
    m.amp0(w) = std::sqrt(c0[w] / double(total));
    m.amp1(w) = std::sqrt(c1[w] / double(total));
  }
  m.validate();
  return m;
}

EvenOddModel steane_model() {
  // Hamming [7,4] parity checks as X-type stabilizers.
  EvenOddModel m = css_model(7, {{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}},
                             {1, 1, 1, 1, 1, 1, 1});
  m.label = "steane";
  return m;
}

EvenOddModel model_from_pi_code(const PiCode& code) {
  if (!is_even_odd(code)) throw PreconditionError(code.label() + " is not an even-odd code");
  EvenOddModel m{code.n_qubits, code.logical0.amplitudes(), code.logical1.amplitudes(), code.label()};
  m.validate();
  return m;
}

WeightSectorState WeightSectorState::product(const CVector& a, const CVector& b) {
  return WeightSectorState{static_cast<int>(a.size()) - 1, static_cast<int>(b.size()) - 1, a * b.transpose()};
}

WeightSectorState apply_three_pulse_cz(const WeightSectorState& s) {
  WeightSectorState out = s;
  for (int wa = 0; wa <= s.n_a; ++wa)
    for (int wb = 0; wb <= s.n_b; ++wb) out.coeff(wa, wb) *= cz_three_pulse_phase(wa, wb);
  return out;
}

CzVerification logical_cz(const EvenOddModel& a, const EvenOddModel& b) {
  a.validate();
  b.validate();
  CzVerification v;
  v.code_a = a.label;
  v.code_b = b.label;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      const WeightSectorState out = apply_three_pulse_cz(WeightSectorState::product(a.logical(xa), b.logical(xb)));
      for (int ya = 0; ya < 2; ++ya)
        for (int yb = 0; yb < 2; ++yb) {
          const CVector la = a.logical(ya), lb = b.logical(yb);
          v.logical(2 * ya + yb, 2 * xa + xb) = (la.adjoint() * out.coeff * lb.conjugate())(0, 0);
        }
    }
  }
  Eigen::Matrix4cd ideal = Eigen::Matrix4cd::Identity();
  ideal(3, 3) = -1.0;
  v.residual = (v.logical - ideal).cwiseAbs().maxCoeff();
  v.ok = v.residual <= 1e-12;
  return v;
}

CzVerification logical_cz(const EvenOddModel& a, const PiCode& code_b) {
  return logical_cz(a, model_from_pi_code(code_b));
}

}  // namespace piswitch
