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

#include "piswitch/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Superoperator superop_of_matrix(int n, const CMatrix& u) { return Superoperator(n, kron(u, u.conjugate())); }

// The noise-free e^{i N phi Jz} that turns noisy_lgpg(-phi) into U(phi).
Superoperator noisy_pulse(double phi, double cooperativity, int n, const SpinRotations& rot) {
  const CMatrix z = rot.rz_diagonal(n * phi).asDiagonal();
  return superop_of_matrix(n, z) * superop_of_noisy_lgpg(-phi, cooperativity, n);
}

Eigen::Matrix2cd pauli(int k) {
  const cplx i(0, 1);
  Eigen::Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

constexpr double kPrepGate = 1e-6;

}  // namespace

CVector vec_rows(const CMatrix& rho) {
  CVector v(rho.size());
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) v(i * rho.cols() + j) = rho(i, j);
  return v;
}

CMatrix unvec_rows(const CVector& v, int dim) {
  if (v.size() != Eigen::Index(dim) * dim) throw DomainError("unvec_rows: length is not dim^2");
  CMatrix rho(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rho(i, j) = v(i * dim + j);
  return rho;
}

Superoperator::Superoperator(int n_qubits, CMatrix matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const Eigen::Index d2 = Eigen::Index(n_qubits + 1) * (n_qubits + 1);
  if (n_qubits < 1 || matrix_.rows() != d2 || matrix_.cols() != d2) {
    throw DomainError("Superoperator: matrix must be (N+1)^2 square");
  }
}

Superoperator Superoperator::identity(int n_qubits) {
  const int d2 = (n_qubits + 1) * (n_qubits + 1);
  return Superoperator(n_qubits, CMatrix::Identity(d2, d2));
}

DensityMatrix Superoperator::apply(const DensityMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) throw DomainError("Superoperator::apply: size mismatch");
  return unvec_rows(matrix_ * vec_rows(rho), dim());
}

Superoperator Superoperator::operator*(const Superoperator& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw DomainError("Superoperator: qubit-number mismatch");
  return Superoperator(n_qubits_, matrix_ * rhs.matrix_);
}

Superoperator superop_of_unitary(const DickeOperator& u) {
  if (!u.is_unitary(1e-10)) throw DomainError("superop_of_unitary: operator is not unitary");
  return superop_of_matrix(u.n_qubits(), u.matrix());
}

Superoperator superop_of_noisy_lgpg(double phi, double cooperativity, int n_qubits) {
  if (!(cooperativity > 0)) throw DomainError("superop_of_noisy_lgpg: cooperativity must be positive");
  const int d = n_qubits + 1;
  CVector diag(d * d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) diag(n * d + m) = gpg_coefficient(n, m, {phi, cooperativity, n_qubits});
  return Superoperator(n_qubits, diag.asDiagonal().toDenseMatrix());
}

Superoperator superop_of_sequence(const PulseSequence& seq, double cooperativity, int n_qubits) {
  const SpinRotations rot(n_qubits);
  Superoperator s = Superoperator::identity(n_qubits);
  for (const auto& p : seq.pulses()) {
    s = superop_of_matrix(n_qubits, rot.rotation(p.theta, p.xi, p.gamma)) * noisy_pulse(p.phi, cooperativity, n_qubits, rot) * s;
  }
  return s;
}

Superoperator superop_of_sequence_reverse(const PulseSequence& seq, double cooperativity, int n_qubits) {
  const SpinRotations rot(n_qubits);
  Superoperator s = Superoperator::identity(n_qubits);
  for (int k = seq.size() - 1; k >= 0; --k) {
    const Pulse& p = seq[k];
    const CMatrix r = rot.rotation(p.theta, p.xi, p.gamma);
    s = noisy_pulse(-p.phi, cooperativity, n_qubits, rot) * superop_of_matrix(n_qubits, r.adjoint()) * s;
  }
  return s;
}

HadamardEigenvectors hadamard_eigenvectors(const PiCode& code) {
  const double r2 = std::sqrt(2.0);
  const CVector& c0 = code.logical0.amplitudes();
  const CVector& c1 = code.logical1.amplitudes();
  auto make = [&](double sign) {
    const double a = 1.0 + sign * r2;
    const CVector v = (a * c0 + c1) / std::sqrt(2.0 * (2.0 + sign * r2));
    return DickeState(code.n_qubits, v);
  };
  return {make(+1.0), make(-1.0)};
}

DickeOperator ideal_logical_hadamard(const PiCode& code) {
  const CVector m = hadamard_eigenvectors(code).minus.amplitudes();
  const int d = code.n_qubits + 1;
  return DickeOperator(code.n_qubits, CMatrix::Identity(d, d) - 2.0 * m * m.adjoint());
}

DickeOperator hadamard_from_sequence(const PulseSequence& seq, int n_qubits) {
  const CMatrix w = sequence_unitary(seq, n_qubits);
  CMatrix phase = CMatrix::Identity(n_qubits + 1, n_qubits + 1);
  phase(n_qubits, n_qubits) = -1.0;
  return DickeOperator(n_qubits, w * phase * w.adjoint());
}

double phase_gate_fidelity(int n_qubits, double cooperativity) {
  if (!(cooperativity > 0)) throw DomainError("phase_gate_fidelity: cooperativity must be positive");
  if (std::isinf(cooperativity)) return 1.0;
  return std::clamp(1.0 - 1.8 * n_qubits / std::sqrt(cooperativity), 0.0, 1.0);
}

double hadamard_prep_infidelity(const PiCode& code, const PulseSequence& seq) {
  const DickeState out = apply_sequence_ideal(seq, DickeState::basis(code.n_qubits, code.n_qubits));
  return std::max(0.0, 1.0 - std::norm(hadamard_eigenvectors(code).minus.inner(out)));
}

Superoperator logical_hadamard_channel(const PiCode& code, const PulseSequence& prep_seq, double cooperativity) {
  if (!(cooperativity > 0)) throw DomainError("logical_hadamard_channel: cooperativity must be positive");
  const double infid = hadamard_prep_infidelity(code, prep_seq);
  if (!(infid <= kPrepGate)) {
    throw PreconditionError("logical_hadamard_channel: sequence prepares |lambda_-> of " + code.label() +
                            " with infidelity " + std::to_string(infid) + " > 1e-6");
  }
  const int n = code.n_qubits;
  CMatrix cz = CMatrix::Identity(n + 1, n + 1);
  cz(n, n) = -1.0;
  const Superoperator ph = superop_of_matrix(n, cz).scaled(phase_gate_fidelity(n, cooperativity));
  return superop_of_sequence(prep_seq, cooperativity, n) * ph * superop_of_sequence_reverse(prep_seq, cooperativity, n);
}

Eigen::Matrix4cd project_logical(const Superoperator& e, const PiCode& code) {
  if (e.n_qubits() != code.n_qubits) throw DomainError("project_logical: qubit-number mismatch");
  CMatrix basis(code.n_qubits + 1, 2);
  basis.col(0) = code.logical0.amplitudes();
  basis.col(1) = code.logical1.amplitudes();
  const CMatrix b = kron(basis, basis.conjugate());
  return b.adjoint() * e.matrix() * b;
}

double process_fidelity(const Eigen::Matrix4cd& e_logical, const Gate2x2& target) {
  const Eigen::Matrix2cd& t = target.matrix();
  cplx total = 0.0;
  for (int j = 0; j < 4; ++j) {
    const Eigen::Matrix2cd u = pauli(j);
    Eigen::Vector4cd v;
    v << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
    const Eigen::Vector4cd ev = e_logical * v;
    Eigen::Matrix2cd image;
    image << ev(0), ev(1), ev(2), ev(3);
    total += (t * u.adjoint() * t.adjoint() * image).trace();
  }
  return total.real() / 8.0;
}

double hadamard_process_fidelity_expanded(const Eigen::Matrix4cd& e) {
  // E(a, b) with a = 2x'+y', b = 2x+y.
  auto E = [&](int xp, int yp, int x, int y) { return e(2 * xp + yp, 2 * x + y); };
  const cplx s = E(0, 0, 0, 0) + E(0, 0, 1, 1) + E(1, 1, 0, 0) + E(1, 1, 1, 1) + E(0, 0, 0, 1) + E(0, 0, 1, 0) -
                 E(1, 1, 0, 1) - E(1, 1, 1, 0) - E(0, 1, 0, 1) + E(0, 1, 1, 0) + E(1, 0, 0, 1) - E(1, 0, 1, 0) +
                 E(0, 1, 0, 0) - E(0, 1, 1, 1) + E(1, 0, 0, 0) - E(1, 0, 1, 1);
  return s.real() / 8.0;
}

namespace {

double hadamard_infidelity(const PiCode& code, const PulseSequence& seq, double c) {
  return 1.0 - process_fidelity(project_logical(logical_hadamard_channel(code, seq, c), code), gate_h());
}

}  // namespace

namespace {

// 1 - F_pro of the noisy Hadamard channel from the images of |0><0|, |1><1|
// and |0><1| (the fourth is the adjoint); no superoperator is formed and no
// precondition is checked.
double channel_infidelity_fast(const PiCode& code, const PulseSequence& seq, double c) {
  const int n = code.n_qubits, d = n + 1;
  const SpinRotations rot(n);
  std::vector<CMatrix> r(seq.size());
  std::vector<CMatrix> filt(seq.size());
  for (int p = 0; p < seq.size(); ++p) {
    r[p] = rot.rotation(seq[p].theta, seq[p].xi, seq[p].gamma);
    // Noisy pulse as an entrywise factor: f_{n,m}(-phi) times the Jz frame phase.
    const CVector z = rot.rz_diagonal(n * seq[p].phi);
    filt[p].resize(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        filt[p](i, j) = gpg_coefficient(i, j, {-seq[p].phi, c, n}) * z(i) * std::conj(z(j));
  }
  const CVector& k0 = code.logical0.amplitudes();
  const CVector& k1 = code.logical1.amplitudes();
  const double fph = phase_gate_fidelity(n, c);
  auto channel = [&](CMatrix op) {
    for (int p = seq.size() - 1; p >= 0; --p) {
      op = r[p].adjoint() * op * r[p];
      op = op.cwiseProduct(filt[p].conjugate());
    }
    op *= fph;
    op.row(n) *= -1.0;
    op.col(n) *= -1.0;
    for (int p = 0; p < seq.size(); ++p) op = r[p] * op.cwiseProduct(filt[p]) * r[p].adjoint();
    Eigen::Matrix2cd img;
    img << k0.dot(op * k0), k0.dot(op * k1), k1.dot(op * k0), k1.dot(op * k1);
    return img;
  };
  const Eigen::Matrix2cd e00 = channel(k0 * k0.adjoint()), e11 = channel(k1 * k1.adjoint());
  const Eigen::Matrix2cd e01 = channel(k0 * k1.adjoint());
  // For H the generic sum reduces to sum_{x,y} <H x| E(|x><y|) |H y>.
  const Eigen::Matrix2cd h = gate_h().matrix();
  const Eigen::Matrix2cd* img[2][2] = {{&e00, nullptr}, {nullptr, &e11}};
  const Eigen::Matrix2cd e10 = e01.adjoint();
  img[0][1] = &e01;
  img[1][0] = &e10;
  cplx total = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) total += h.col(x).dot(*img[x][y] * h.col(y));
  return 1.0 - total.real() / 4.0;
}

struct ChannelProblem {
  const PiCode* code;
  const DickeState* target;
  double c;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
};

// Channel infidelity plus the ideal |D_N> -> |lambda_-> error, which keeps
// the search near sequences that can be polished back under the gate.
double channel_objective(const std::vector<double>& x, ChannelProblem& pr) {
  for (double v : x)
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
  const PulseSequence s = PulseSequence::unflatten(x);
  const double f = channel_infidelity_fast(*pr.code, s, pr.c) +
                   prep_cost(s, *pr.target, PrepMode::Ideal, 0.0, DickeState::basis(pr.code->n_qubits, pr.code->n_qubits));
  if (f < pr.best) {
    pr.best = f;
    pr.best_x = x;
  }
  return f;
}

std::vector<double> gsl_to_std(const gsl_vector* v) {
  std::vector<double> x(v->size);
  for (std::size_t k = 0; k < v->size; ++k) x[k] = gsl_vector_get(v, k);
  return x;
}

double channel_f(const gsl_vector* v, void* p) { return channel_objective(gsl_to_std(v), *static_cast<ChannelProblem*>(p)); }

void channel_df(const gsl_vector* v, void* p, gsl_vector* df) {
  auto& pr = *static_cast<ChannelProblem*>(p);
  std::vector<double> x = gsl_to_std(v);
  constexpr double h = 1e-6;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double x0 = x[k];
    x[k] = x0 + h;
    const double fp = channel_objective(x, pr);
    x[k] = x0 - h;
    const double fm = channel_objective(x, pr);
    x[k] = x0;
    gsl_vector_set(df, k, (fp - fm) / (2 * h));
  }
}

void channel_fdf(const gsl_vector* v, void* p, double* f, gsl_vector* df) {
  *f = channel_f(v, p);
  channel_df(v, p, df);
}

// Local BFGS descent on the channel objective from seq.
PulseSequence refine_for_channel(const PiCode& code, const PulseSequence& seq, double c, int max_iters) {
  const DickeState target = hadamard_eigenvectors(code).minus;
  ChannelProblem pr{&code, &target, c, std::numeric_limits<double>::infinity(), {}};
  const std::vector<double> x0 = seq.flatten();
  gsl_multimin_function_fdf fn{&channel_f, &channel_df, &channel_fdf, x0.size(), &pr};
  gsl_vector* x = gsl_vector_alloc(x0.size());
  for (std::size_t k = 0; k < x0.size(); ++k) gsl_vector_set(x, k, x0[k]);
  gsl_multimin_fdfminimizer* s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, x0.size());
  gsl_multimin_fdfminimizer_set(s, &fn, x, 0.01, 0.1);
  for (int it = 0; it < max_iters; ++it) {
    if (gsl_multimin_fdfminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_gradient(s->gradient, 1e-10) == GSL_SUCCESS) break;
  }
  gsl_multimin_fdfminimizer_free(s);
  gsl_vector_free(x);
  return pr.best_x.empty() ? seq : PulseSequence::unflatten(pr.best_x);
}

// Row for one C: the ideal sequence, improved when a noisy-mode optimum
// re-polished to ideal accuracy gives a better channel.
HadamardScanRow hadamard_row(const PiCode& code, const PulseSequence& ideal, const std::vector<PulseSequence>& starts,
                             double c, const PrepOptions& o, bool reoptimize) {
  const DickeState target = hadamard_eigenvectors(code).minus;
  const int pulses = ideal.size();
  HadamardScanRow row{c, hadamard_infidelity(code, ideal, c), phase_gate_fidelity(code.n_qubits, c), ideal,
                      hadamard_prep_infidelity(code, ideal)};
  if (!reoptimize || std::isinf(c)) return row;
  auto consider = [&](const PulseSequence& cand) {
    const double prep = hadamard_prep_infidelity(code, cand);
    if (prep > kPrepGate) return;
    const double infid = hadamard_infidelity(code, cand, c);
    if (infid < row.process_infidelity) {
      row.process_infidelity = infid;
      row.sequence = cand;
      row.prep_infidelity = prep;
    }
  };
  for (const PulseSequence& from : starts) {
    PrepOptions one = o;
    one.restarts = 1;
    one.warm_start = from;
    one.warm_start = optimize_preparation(target, pulses, PrepMode::Noisy, c, one).sequence;
    const PrepResult polished = optimize_preparation(target, pulses, PrepMode::Ideal, 0.0, one);
    consider(polished.sequence);
  }
  // Second stage: descend on the channel itself, then polish back under the gate.
  // Second stage: descend on the channel itself, then polish back under the
  // gate. Restarting this from other ideal optima did not beat the chained
  // noisy optimum, so one pass from the current best is kept.
  PrepOptions one = o;
  one.restarts = 1;
  one.warm_start = refine_for_channel(code, row.sequence, c, 300);
  consider(optimize_preparation(target, pulses, PrepMode::Ideal, 0.0, one).sequence);
  return row;
}

PrepOptions lambda_options(const PiCode& code, const PrepOptions& options) {
  PrepOptions o = options;
  o.start = DickeState::basis(code.n_qubits, code.n_qubits);
  o.warm_start.reset();
  return o;
}

}  // namespace

HadamardScanRow hadamard_sequence_for(const PiCode& code, int pulses, double cooperativity, const PrepOptions& options) {
  const PrepOptions o = lambda_options(code, options);
  const PrepResult ideal = optimize_preparation(hadamard_eigenvectors(code).minus, pulses, PrepMode::Ideal, 0.0, o);
  return hadamard_row(code, ideal.sequence, {ideal.sequence}, cooperativity, o, true);
}

HadamardScan scan_hadamard_vs_C(const PiCode& code, int pulses, const std::vector<double>& c_grid,
                                const PrepOptions& options, ScanMode mode) {
  if (c_grid.size() < 2) throw DomainError("scan_hadamard_vs_C: need at least 2 grid points");
  std::vector<double> grid = c_grid;
  std::sort(grid.begin(), grid.end());
  const PrepOptions o = lambda_options(code, options);
  HadamardScan out;
  out.prep = optimize_preparation(hadamard_eigenvectors(code).minus, pulses, PrepMode::Ideal, 0.0, o);
  PulseSequence previous = out.prep.sequence;
  for (double c : grid) {
    // Chaining from the previous point keeps the curve monotone in C.
    const HadamardScanRow row = hadamard_row(code, out.prep.sequence, {out.prep.sequence, previous}, c, o,
                                             mode == ScanMode::NoisyReoptimize);
    previous = row.sequence;
    out.rows.push_back(row);
  }
  std::vector<double> cs, ys;
  for (const auto& r : out.rows) {
    if (!std::isfinite(r.cooperativity)) continue;
    cs.push_back(r.cooperativity);
    ys.push_back(r.process_infidelity);
  }
  if (cs.size() >= 2) out.fit = fit_power_law(cs, ys);
  return out;
}

}  // namespace piswitch
