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


#include "piswitch/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi - 1e-13) a = 0.0;
  return a;
}

cplx constant_phase(const std::vector<int>& support, double theta, const char* which) {
  const cplx ref = std::polar(1.0, theta * support.front());
  for (int w : support) {
    if (std::abs(std::polar(1.0, theta * w) - ref) > 1e-9) {
      throw NotALogicalGateError(std::string("transversal Z rotation is not constant on the support of ") +
                                 which);
    }
  }
  return ref;
}

}  // namespace

LogicalAction transversal_z_logical_action(const PiCode& code, double theta) {
  LogicalAction act;
  act.phase_on_0 = constant_phase(code.support0(), theta, "logical 0");
  act.phase_on_1 = constant_phase(code.support1(), theta, "logical 1");
  act.is_diagonal = true;
  act.equivalent_z_angle = wrap_angle(std::arg(act.phase_on_1 / act.phase_on_0));
  return act;
}

LogicalXRecord logical_x_action(const PiCode& code) {
  const int n = code.n_qubits;
  const CMatrix x = transversal_x(n).matrix();
  const CMatrix zx = transversal_z(n).matrix() * x;
  const CVector& k0 = code.logical0.amplitudes();
  const CVector& k1 = code.logical1.amplitudes();

  auto probe = [&](const CMatrix& op, const char* name) {
    LogicalXRecord r;
    r.operator_name = name;
    const CVector v0 = op * k0, v1 = op * k1;
    r.image_of_0 = k1.dot(v0);
    r.image_of_1 = k0.dot(v1);
    r.residual = std::max((v0 - r.image_of_0 * k1).norm(), (v1 - r.image_of_1 * k0).norm());
    r.ok = r.residual <= 1e-12;
    return r;
  };
  LogicalXRecord rx = probe(x, "X");
  if (rx.ok) return rx;
  LogicalXRecord rzx = probe(zx, "ZX");
  return rzx.ok ? rzx : rx;
}

long coprime_multiplier(long b, long g) {
  if (b < 1 || g < 1 || std::gcd(b, g) != 1) throw DomainError("coprime_multiplier: require gcd(b, g) = 1");
  const long mod = (g % 2) ? 2 * b : b;
  for (long k = 1; k <= mod; ++k)
    if ((k * g) % mod == 1 % mod) return k;
  throw DomainError("coprime_multiplier: no inverse found");
}

Gate2x2::Gate2x2(const Eigen::Matrix2cd& m) : m_(m) {
  if ((m_.adjoint() * m_ - Eigen::Matrix2cd::Identity()).norm() > 1e-12) {
    throw DomainError("Gate2x2: matrix is not unitary");
  }
}

Gate2x2 gate_identity() { return Gate2x2(Eigen::Matrix2cd::Identity()); }

Gate2x2 gate_h() {
  Eigen::Matrix2cd m;
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return Gate2x2(m);
}

Gate2x2 gate_z(double theta) {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, std::polar(1.0, theta);
  return Gate2x2(m);
}

Gate2x2 gate_s() { return gate_z(kPi / 2); }
Gate2x2 gate_t() { return gate_z(kPi / 4); }
Gate2x2 gate_f() { return gate_h() * gate_z(-kPi / 2); }

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
const double kGoldenConj = (1.0 - std::sqrt(5.0)) / 2.0;

Gate2x2 phi_gate(double ph) {
  const cplx zeta(ph, 1.0 / ph);
  Eigen::Matrix2cd m;
  m << zeta, 1.0, -1.0, std::conj(zeta);
  return Gate2x2(0.5 * m);
}

}  // namespace

Gate2x2 gate_phi() { return phi_gate(kGolden); }
Gate2x2 gate_phi_star() { return phi_gate(kGoldenConj); }

Gate2x2 tau60() {
  Eigen::Matrix2cd m;
  m << 2.0 + kGolden, cplx(1, -1), cplx(1, 1), -2.0 - kGolden;
  return Gate2x2(m / std::sqrt(5.0 * kGolden + 7.0));
}

Gate2x2 tau60_tilde(double gamma) {
  const Gate2x2 f = gate_f();
  return gate_t() * f.adjoint() * gate_z(gamma) * f * gate_z(kPi) * gate_t().adjoint();
}

double super_golden_angle() { return 2.0 * std::acos((2.0 + kGolden) / std::sqrt(5.0 * kGolden + 7.0)); }

double phase_min_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DomainError("phase_min_distance: shape mismatch");
  }
  const auto id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if ((u.adjoint() * u - id).norm() > 1e-10 || (v.adjoint() * v - id).norm() > 1e-10) {
    throw DomainError("phase_min_distance: inputs must be unitary");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v.adjoint() * u);
  std::vector<double> ph;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ph.push_back(wrap_angle(std::arg(es.eigenvalues()(i))));
  std::sort(ph.begin(), ph.end());
  // Smallest arc covering all eigenphases is 2pi minus the largest gap.
  double gap = kTwoPi - (ph.back() - ph.front());
  for (std::size_t i = 1; i < ph.size(); ++i) gap = std::max(gap, ph[i] - ph[i - 1]);
  const double arc = kTwoPi - gap;
  return 2.0 * std::sin(arc / 4.0);
}

double phase_min_distance(const Gate2x2& u, const Gate2x2& v) {
  return phase_min_distance(Eigen::MatrixXcd(u.matrix()), Eigen::MatrixXcd(v.matrix()));
}

SuperGoldenSearch search_super_golden_rational(double epsilon, long max_denominator) {
  if (!(epsilon > 0)) throw DomainError("search_super_golden_rational: epsilon must be positive");
  const double x = super_golden_angle() / kPi;
  const Gate2x2 target = tau60();
  auto dist = [&](long g, long b) { return phase_min_distance(tau60_tilde(kPi * g / b), target); };

  SuperGoldenSearch out;
  long h_prev = 1, h = 0, k_prev = 0, k = 1;
  double y = x;
  std::optional<long> hit_den;
  for (int iter = 0; iter < 40; ++iter) {
    const long a = static_cast<long>(std::floor(y));
    const long h_next = a * h + h_prev, k_next = a * k + k_prev;
    if (iter == 0) {
      h = a;
      k = 1;
      h_prev = 1;
      k_prev = 0;
    } else {
      h_prev = h;
      k_prev = k;
      h = h_next;
      k = k_next;
    }
    if (k > max_denominator) break;
    const RationalApprox ra{h, k, dist(h, k)};
    out.convergents.push_back(ra);
    if (ra.distance < epsilon) {
      hit_den = k;
      break;
    }
    const double frac = y - static_cast<double>(a);
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  if (!hit_den) return out;
  for (long b = 1; b <= *hit_den; ++b) {
    const long g0 = static_cast<long>(std::floor(x * b));
    for (long g = g0; g <= g0 + 1; ++g) {
      if (std::gcd(g, b) != 1 && !(g == 0 && b == 1)) continue;
      const double d = dist(g, b);
      if (d < epsilon) {
        out.best = RationalApprox{g, b, d};
        return out;
      }
    }
  }
  return out;
}

}  // namespace piswitch
