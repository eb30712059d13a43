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


#include "piswitch/mode.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/laguerre.hpp>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

constexpr double kHealthTol = 1e-8;

int protected_levels(int cutoff) { return static_cast<int>(std::ceil(0.9 * cutoff)); }

// <m| D(alpha) |n> for m >= n up to the (-alpha*)-for-lower-triangle swap.
cplx displacement_element(int m, int n, cplx alpha) {
  const double x = std::norm(alpha);
  const int lo = std::min(m, n), k = std::abs(m - n);
  const cplx base = m >= n ? alpha : -std::conj(alpha);
  const double r = std::abs(base);
  if (k > 0 && r == 0.0) return 0.0;
  const double log_pref = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + k + 1.0)) +
                          (k > 0 ? k * std::log(r) : 0.0) - 0.5 * x;
  const double lag = boost::math::laguerre(static_cast<unsigned>(lo), static_cast<unsigned>(k), x);
  const double mag = std::exp(log_pref) * lag;
  if (!std::isfinite(mag)) return 0.0;
  return mag * std::polar(1.0, k * std::arg(base));
}

}  // namespace

CMatrix displacement_analytic(int cutoff, cplx alpha) {
  if (cutoff < 2) throw DomainError("displacement: cutoff must be >= 2");
  CMatrix d(cutoff, cutoff);
  for (int m = 0; m < cutoff; ++m)
    for (int n = 0; n < cutoff; ++n) d(m, n) = displacement_element(m, n, alpha);
  return d;
}

CMatrix displacement_unchecked(int cutoff, cplx alpha, double* defect) {
  if (cutoff < 2) throw DomainError("displacement: cutoff must be >= 2");
  // exp(alpha a^dag - alpha^* a) = exp(-i H) with H = i (alpha a^dag - alpha^* a).
  CMatrix h = CMatrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) {
    const double s = std::sqrt(double(n));
    h(n, n - 1) = cplx(0, 1) * alpha * s;
    h(n - 1, n) = std::conj(h(n, n - 1));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector ph(cutoff);
  for (int i = 0; i < cutoff; ++i) ph(i) = std::polar(1.0, -es.eigenvalues()(i));
  CMatrix d = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  if (defect) {
    CVector back(cutoff);
    for (int i = 0; i < cutoff; ++i) back(i) = std::conj(ph(i));
    const CMatrix inv = es.eigenvectors() * back.asDiagonal() * es.eigenvectors().adjoint();
    const int p = protected_levels(cutoff);
    *defect = ((d * inv).topLeftCorner(p, p) - CMatrix::Identity(p, p)).operatorNorm();
  }
  return d;
}

CMatrix displacement(int cutoff, cplx alpha) {
  double defect = 0.0;
  CMatrix d = displacement_unchecked(cutoff, alpha, &defect);
  if (defect > kHealthTol) {
    throw TruncationError("displacement: cutoff " + std::to_string(cutoff) + " too small for |alpha|=" +
                          std::to_string(std::abs(alpha)) + " (defect " + std::to_string(defect) +
                          "); use a larger cutoff");
  }
  return d;
}

JointState::JointState(int dim_a, int dim_b, int cutoff)
    : dim_a_(dim_a), dim_b_(dim_b), psi_(CMatrix::Zero(dim_a * dim_b, cutoff)) {
  if (dim_a < 1 || dim_b < 1 || cutoff < 2) throw DomainError("JointState: bad dimensions");
}

JointState JointState::with_vacuum(int dim_a, int dim_b, int cutoff, const CVector& spin) {
  JointState s(dim_a, dim_b, cutoff);
  if (spin.size() != dim_a * dim_b) throw DomainError("JointState: spin vector size mismatch");
  s.psi_.col(0) = spin;
  return s;
}

void JointState::displace(cplx alpha, bool checked) {
  const CMatrix d = checked ? displacement(cutoff(), alpha) : displacement_unchecked(cutoff(), alpha);
  psi_ = psi_ * d.transpose();
  if (checked) check_health();
}

void JointState::conditional_rotation(const RVector& generator, double theta, bool checked) {
  if (generator.size() != psi_.rows()) throw DomainError("conditional_rotation: generator size mismatch");
  for (Eigen::Index r = 0; r < psi_.rows(); ++r)
    for (Eigen::Index n = 0; n < psi_.cols(); ++n) psi_(r, n) *= std::polar(1.0, theta * generator(r) * double(n));
  if (checked) check_health();
}

void JointState::apply_b(const CMatrix& u) {
  if (u.rows() != dim_b_ || u.cols() != dim_b_) throw DomainError("apply_b: size mismatch");
  for (int ia = 0; ia < dim_a_; ++ia) psi_.middleRows(ia * dim_b_, dim_b_) = u * psi_.middleRows(ia * dim_b_, dim_b_);
}

void JointState::apply_a(const CMatrix& u) {
  if (u.rows() != dim_a_ || u.cols() != dim_a_) throw DomainError("apply_a: size mismatch");
  CMatrix out = CMatrix::Zero(psi_.rows(), psi_.cols());
  for (int i = 0; i < dim_a_; ++i)
    for (int j = 0; j < dim_a_; ++j) {
      if (u(i, j) == cplx(0)) continue;
      out.middleRows(i * dim_b_, dim_b_) += u(i, j) * psi_.middleRows(j * dim_b_, dim_b_);
    }
  psi_ = std::move(out);
}

void JointState::apply_diagonal(const CVector& phases) {
  if (phases.size() != psi_.rows()) throw DomainError("apply_diagonal: size mismatch");
  psi_ = phases.asDiagonal() * psi_;
}

double JointState::tail_mass() const {
  const int p = protected_levels(cutoff());
  return psi_.rightCols(cutoff() - p).squaredNorm();
}

void JointState::check_health() const {
  const double t = tail_mass();
  if (t > kHealthTol) {
    throw TruncationError("mode tail population " + std::to_string(t) + " at cutoff " + std::to_string(cutoff()) +
                          "; use a larger cutoff");
  }
}

double JointState::vacuum_population() const { return psi_.col(0).squaredNorm(); }

CVector conditional_rotation(int n_qubits, double theta, int cutoff) {
  CVector d((n_qubits + 1) * cutoff);
  for (int w = 0; w <= n_qubits; ++w)
    for (int n = 0; n < cutoff; ++n) d(w * cutoff + n) = std::polar(1.0, theta * w * double(n));
  return d;
}

NlGpgResult nonlinear_gpg_generic(const RVector& generator, double theta, double phi, double chi,
                                  const NlGpgOptions& opt) {
  if (!(chi >= 0)) throw DomainError("nonlinear_gpg: chi must be non-negative");
  const int d = static_cast<int>(generator.size());
  const cplx alpha = std::polar(std::sqrt(chi), phi);
  const cplx beta = std::sqrt(chi);
  const CVector start = CVector::Constant(d, 1.0 / std::sqrt(double(d)));
  // Application order: R^dag, D(alpha), R, D(beta), R^dag, D(-alpha), R, D(-beta).
  const std::vector<std::pair<int, cplx>> steps = {{-1, 0.0}, {0, alpha}, {1, 0.0}, {0, beta},
                                                   {-1, 0.0}, {0, -alpha}, {1, 0.0}, {0, -beta}};
  int cutoff = opt.cutoff;
  while (true) {
    try {
      JointState s = JointState::with_vacuum(1, d, cutoff, start);
      for (const auto& [rot, x] : steps) {
        if (rot != 0) {
          s.conditional_rotation(generator, rot * theta, opt.enforce_health);
        } else {
          s.displace(x, opt.enforce_health);
        }
      }
      NlGpgResult res;
      res.cutoff_used = cutoff;
      res.spin_phases.resize(d);
      for (int r = 0; r < d; ++r) {
        const cplx u = s.amplitudes()(r, 0) / start(r);
        res.spin_phases(r) = u;
        res.min_vacuum_fidelity = std::min(res.min_vacuum_fidelity, std::norm(u));
        const cplx target = std::polar(1.0, -2.0 * chi * std::sin(theta * generator(r) + phi));
        res.residual = std::max(res.residual, std::abs(u - target));
      }
      if (opt.enforce_health && 1.0 - res.min_vacuum_fidelity > kHealthTol) {
        throw ClosureError("nonlinear_gpg: mode not returned to vacuum (fidelity " +
                           std::to_string(res.min_vacuum_fidelity) + ")");
      }
      return res;
    } catch (const TruncationError&) {
      if (!opt.adaptive || cutoff * 2 > opt.max_cutoff) throw;
      cutoff *= 2;
    }
  }
}

NlGpgResult nonlinear_gpg(int n_qubits, double theta, double phi, double chi, const NlGpgOptions& opt) {
  RVector w(n_qubits + 1);
  for (int i = 0; i <= n_qubits; ++i) w(i) = i;
  return nonlinear_gpg_generic(w, theta, phi, chi, opt);
}

CommutantRecord spin_ft_commutant(double theta) {
  CommutantRecord rec;
  rec.theta = theta;
  using M2 = Eigen::Matrix2cd;
  M2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  // Jz = Z/2 on one qubit, so R = diag(e^{i theta/2}, e^{-i theta/2}).
  M2 r = M2::Zero();
  r(0, 0) = std::polar(1.0, theta / 2);
  r(1, 1) = std::polar(1.0, -theta / 2);
  M2 ez = M2::Zero();
  ez(0, 0) = std::polar(1.0, theta);
  ez(1, 1) = std::polar(1.0, -theta);
  rec.x_residual = (r * x - ez * x * r).norm();
  rec.y_residual = (r * y - ez * y * r).norm();

  // Three qubits in the computational basis, bit k of the index is qubit k.
  const int nq = 3, dim = 1 << nq;
  CMatrix rfull = CMatrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const int w = __builtin_popcount(s);
    rfull(s, s) = std::polar(1.0, theta * (0.5 * nq - w));
  }
  auto embed = [&](const M2& p, int k) {
    CMatrix out = CMatrix::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) {
      const int bit = s >> k & 1;
      for (int nb = 0; nb < 2; ++nb) {
        const int t = (s & ~(1 << k)) | (nb << k);
        out(t, s) += p(nb, bit);
      }
    }
    return out;
  };
  for (int k = 0; k < nq; ++k) {
    const CMatrix ezk = embed(ez, k);
    for (const M2* p : {&x, &y}) {
      const CMatrix pk = embed(*p, k);
      rec.register_residual = std::max(rec.register_residual, (rfull * pk - ezk * pk * rfull).norm());
    }
  }
  return rec;
}

BoseCommutantRecord bose_ft_commutant(double theta, int n_qubits, int cutoff) {
  BoseCommutantRecord rec;
  rec.theta = theta;
  const int dw = n_qubits + 1, dim = dw * cutoff;
  CMatrix a = CMatrix::Zero(dim, dim), r = CMatrix::Zero(dim, dim);
  CMatrix ew = CMatrix::Zero(dim, dim), ewc = CMatrix::Zero(dim, dim);
  for (int w = 0; w < dw; ++w) {
    for (int n = 0; n < cutoff; ++n) {
      const int i = w * cutoff + n;
      r(i, i) = std::polar(1.0, theta * w * double(n));
      ew(i, i) = std::polar(1.0, -theta * w);
      ewc(i, i) = std::polar(1.0, theta * w);
      if (n > 0) a(i - 1, i) = std::sqrt(double(n));
    }
  }
  const CMatrix ad = a.adjoint();
  rec.lowering_residual = (r * a - ew * a * r).norm();
  rec.raising_residual = (r * ad - ewc * ad * r).norm();
  rec.commutator_norm = (r * a - a * r).norm();
  return rec;
}

}  // namespace piswitch
