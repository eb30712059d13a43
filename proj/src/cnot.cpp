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


#include "piswitch/cnot.hpp"

#include <cmath>
#include <functional>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

using Op = std::function<void(JointState&)>;

constexpr double kTol = 1e-6;

Eigen::Matrix4cd ideal_cnot() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

CVector kron_rows(const CVector& a, const CVector& b) {
  CVector v(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) v.segment(i * b.size(), b.size()) = a(i) * b;
  return v;
}

struct Simulation {
  Eigen::Matrix4cd logical;
  double leakage = 0.0;
  double min_vacuum_fidelity = 1.0;
  int cutoff = 0;
};

// Runs ops on each logical input with the mode in vacuum; doubles the cutoff
// on truncation failure.
Simulation simulate(int dim_a, int dim_b, const std::vector<CVector>& basis, const std::vector<Op>& ops,
                    const NlGpgOptions& opt) {
  int cutoff = opt.cutoff;
  while (true) {
    try {
      Simulation sim;
      sim.cutoff = cutoff;
      CMatrix frame(basis.front().size(), 4);
      for (int j = 0; j < 4; ++j) frame.col(j) = basis[j];
      for (int j = 0; j < 4; ++j) {
        JointState s = JointState::with_vacuum(dim_a, dim_b, cutoff, basis[j]);
        for (const auto& op : ops) op(s);
        const double vac = s.vacuum_population();
        sim.min_vacuum_fidelity = std::min(sim.min_vacuum_fidelity, vac);
        const CVector out = s.vacuum_component();
        const Eigen::Vector4cd coeffs = frame.adjoint() * out;
        sim.logical.col(j) = coeffs;
        sim.leakage = std::max(sim.leakage, (out - frame * coeffs).norm());
      }
      if (1.0 - sim.min_vacuum_fidelity > 1e-8) {
        throw ClosureError("CNOT sequence left the mode excited (vacuum fidelity " +
                           std::to_string(sim.min_vacuum_fidelity) + ")");
      }
      return sim;
    } catch (const TruncationError&) {
      if (!opt.adaptive || cutoff * 2 > opt.max_cutoff) throw;
      cutoff *= 2;
    }
  }
}

RVector row_generator(int dim_a, int dim_b, const std::function<double(int, int)>& f) {
  RVector g(dim_a * dim_b);
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ib = 0; ib < dim_b; ++ib) g(ia * dim_b + ib) = f(ia, ib);
  return g;
}

// Lambda(x) = D(x) R D(-x) R^dagger, in application order.
void push_lambda(std::vector<Op>& ops, const RVector& gen, double theta, cplx x) {
  ops.push_back([gen, theta](JointState& s) { s.conditional_rotation(gen, -theta); });
  ops.push_back([x](JointState& s) { s.displace(-x); });
  ops.push_back([gen, theta](JointState& s) { s.conditional_rotation(gen, theta); });
  ops.push_back([x](JointState& s) { s.displace(x); });
}

// Sector phases (-i)^w of Zbar S^{(x)n}; returns the logical phase on |1>
// after checking the phase on |0> is 1.
CVector s_bar_phases(const EvenOddModel& a, cplx* on_one) {
  CVector ph(a.n_qubits + 1);
  for (int w = 0; w <= a.n_qubits; ++w) {
    static const cplx table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    ph(w) = table[w % 4];
  }
  const cplx p0 = a.amp0.dot(ph.asDiagonal() * a.amp0);
  const cplx p1 = a.amp1.dot(ph.asDiagonal() * a.amp1);
  if (std::abs(p0 - 1.0) > 1e-12 || std::abs(std::abs(p1) - 1.0) > 1e-12) {
    throw PreconditionError(a.label + ": transversal Zbar S is not a logical phase gate");
  }
  *on_one = p1;
  return ph;
}

CVector expand_a(const CVector& per_a, int dim_b) {
  CVector out(per_a.size() * dim_b);
  for (Eigen::Index i = 0; i < per_a.size(); ++i) out.segment(i * dim_b, dim_b).setConstant(per_a(i));
  return out;
}

Eigen::Matrix2cd hadamard2() {
  Eigen::Matrix2cd h;
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

}  // namespace

std::pair<int, int> control_modulus(const PiCode& code) {
  const auto s0 = code.support0(), s1 = code.support1();
  for (int q = 2; q <= code.n_qubits + 1; ++q) {
    bool ok = true;
    for (int w : s0) ok = ok && (w % q == 0);
    const int s = s1.front() % q;
    for (int w : s1) ok = ok && (w % q == s);
    if (ok && s != 0 && (2 * s) % q != 0) return {q, s};
  }
  throw PreconditionError(code.label() + ": no modulus separates the codeword weights");
}

CnotVerification cnot_pi_control(const PiCode& code_b, const EvenOddModel& code_a, const NlGpgOptions& opt) {
  code_a.validate();
  if (code_a.n_qubits % 2 == 0) throw PreconditionError(code_a.label + ": target code needs an odd length");
  const auto [q, s] = control_modulus(code_b);
  const int da = code_a.n_qubits + 1, db = code_b.n_qubits + 1;
  const double theta_b = 2.0 * kPi / q;
  const double chi = kPi / 4.0;
  const double gap2 = std::norm(1.0 - std::polar(1.0, theta_b * s));
  const double a2 = chi / gap2;
  const cplx alpha = std::sqrt(a2);
  const double sb = std::sin(theta_b * s);

  // Branch |1_B>: core phase on even A weights, then four Lambda phases.
  const cplx core = std::polar(1.0, -2.0 * chi * std::sin(kPi * 0.5 * code_a.n_qubits));
  double target = std::fmod(-std::arg(core) - 4.0 * a2 * sb, 2.0 * kPi);
  if (target < 0) target += 2.0 * kPi;
  if (sb < 0) target -= 2.0 * kPi;
  const double ac2 = target / (2.0 * sb);
  const cplx alpha_c = std::sqrt(ac2);

  const RVector gen_b = row_generator(da, db, [](int, int ib) { return double(ib); });
  const RVector gen_a = row_generator(da, db, [&](int ia, int) { return 0.5 * code_a.n_qubits - ia; });
  const CMatrix h_a = code_a.logical_operator(hadamard2());

  auto loop = [&](std::vector<Op>& ops) {
    auto rot_a = [&](double sign) {
      ops.push_back([gen_a, sign](JointState& st) { st.conditional_rotation(gen_a, sign * kPi); });
    };
    rot_a(-1);
    push_lambda(ops, gen_b, theta_b, alpha);
    rot_a(+1);
    push_lambda(ops, gen_b, theta_b, alpha);
    rot_a(-1);
    push_lambda(ops, gen_b, theta_b, -alpha);
    rot_a(+1);
    push_lambda(ops, gen_b, theta_b, -alpha);
  };
  auto hadamard = [&](std::vector<Op>& ops) { ops.push_back([h_a](JointState& st) { st.apply_a(h_a); }); };

  std::vector<CVector> basis;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      basis.push_back(kron_rows(code_a.logical(y), x ? code_b.logical1.amplitudes() : code_b.logical0.amplitudes()));

  std::vector<Op> fixed;
  hadamard(fixed);
  loop(fixed);
  push_lambda(fixed, gen_b, theta_b, -alpha_c);
  push_lambda(fixed, gen_b, theta_b, alpha_c);
  hadamard(fixed);

  cplx s1;
  const CVector sbar = expand_a(s_bar_phases(code_a, &s1), db);
  std::vector<Op> literal;
  hadamard(literal);
  loop(literal);
  hadamard(literal);
  literal.push_back([sbar](JointState& st) { st.apply_diagonal(sbar); });

  const Simulation sim = simulate(da, db, basis, fixed, opt);
  const Simulation lit = simulate(da, db, basis, literal, opt);

  CnotVerification v;
  v.direction = "pi-control";
  v.code_a = code_a.label;
  v.code_b = code_b.label();
  v.logical = sim.logical;
  v.residual = (sim.logical - ideal_cnot()).cwiseAbs().maxCoeff();
  v.literal_residual = (lit.logical - ideal_cnot()).cwiseAbs().maxCoeff();
  v.leakage = sim.leakage;
  v.involution_residual = (sim.logical * sim.logical - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  v.min_vacuum_fidelity = sim.min_vacuum_fidelity;
  v.cutoff_used = sim.cutoff;
  v.q = q;
  v.s = s;
  v.alpha = std::abs(alpha);
  v.alpha_correction = std::abs(alpha_c);
  v.target_frame = "standard";
  v.ok = v.residual <= kTol && v.leakage <= kTol && 1.0 - v.min_vacuum_fidelity <= 1e-8;
  return v;
}

CnotVerification cnot_stabilizer_control(const EvenOddModel& code_a, const PiCode& code_b, const NlGpgOptions& opt) {
  code_a.validate();
  const int da = code_a.n_qubits + 1, db = code_b.n_qubits + 1;
  // The loop realises a multiple of Ybar_B = i^N Xbar Zbar on the |1_A> branch.
  // The target frame {|0>, f|1>} is fixed by Ybar: f^2 = <1|Ybar|0> / <0|Ybar|1>.
  const int n_b = code_b.n_qubits;
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const CMatrix ybar = ipow[n_b % 4] * transversal_x(n_b).matrix() * transversal_z(n_b).matrix();
  const CVector& l0 = code_b.logical0.amplitudes();
  const CVector& l1 = code_b.logical1.amplitudes();
  const cplx yc = l1.dot(ybar * l0), yb = l0.dot(ybar * l1);
  if (std::abs(std::abs(yc) - 1.0) > 1e-12 || std::abs(std::abs(yb) - 1.0) > 1e-12) {
    throw PreconditionError(code_b.label() + ": transversal Y does not flip the codewords");
  }
  const cplx one_phase = std::sqrt(yc / yb);
  const bool primed = std::abs(one_phase - 1.0) > 1e-12;

  const cplx a0 = std::sqrt(kPi) / 4.0;
  const RVector gen_a = row_generator(da, db, [](int ia, int) { return double(ia); });
  const RVector jz_b = row_generator(da, db, [&](int, int ib) { return 0.5 * code_b.n_qubits - ib; });
  const CMatrix jx = collective_operator(code_b.n_qubits, CollectiveKind::Jx).matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(jx);
  auto jx_exp = [&](double t) {
    CVector ph(db);
    for (int i = 0; i < db; ++i) ph(i) = std::polar(1.0, t * es.eigenvalues()(i));
    return CMatrix(es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint());
  };
  const CMatrix v_plus = jx_exp(kPi / 2), v_minus = jx_exp(-kPi / 2);

  std::vector<Op> core;
  // e^{i pi/2 Jx} R(sign pi Jz) e^{-i pi/2 Jx}, in application order.
  auto tilted = [&](double sign) {
    core.push_back([v_minus](JointState& st) { st.apply_b(v_minus); });
    core.push_back([jz_b, sign](JointState& st) { st.conditional_rotation(jz_b, sign * kPi); });
    core.push_back([v_plus](JointState& st) { st.apply_b(v_plus); });
  };
  tilted(-1);
  push_lambda(core, gen_a, kPi, a0);
  tilted(+1);
  push_lambda(core, gen_a, kPi, a0);
  tilted(-1);
  push_lambda(core, gen_a, kPi, -a0);
  tilted(+1);
  push_lambda(core, gen_a, kPi, -a0);

  std::vector<CVector> std_basis, frame_basis;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const CVector b = y ? code_b.logical1.amplitudes() : code_b.logical0.amplitudes();
      std_basis.push_back(kron_rows(code_a.logical(x), b));
      frame_basis.push_back(kron_rows(code_a.logical(x), y ? CVector(one_phase * b) : b));
    }

  const Simulation lit = simulate(da, db, std_basis, core, opt);
  const Simulation framed = simulate(da, db, frame_basis, core, opt);

  // Control-branch phase p in the target frame: G |1,0'> = p |1,1'>.
  const cplx p = framed.logical(3, 2);
  cplx s1;
  const CVector sbar = s_bar_phases(code_a, &s1);
  int power = -1;
  for (int m = 0; m < 4; ++m)
    if (std::abs(std::pow(s1, m) * p - 1.0) < 1e-3) power = m;

  CnotVerification v;
  v.direction = "stab-control";
  v.code_a = code_a.label;
  v.code_b = code_b.label();
  v.literal_residual = (lit.logical - ideal_cnot()).cwiseAbs().maxCoeff();
  v.target_frame = !primed ? "standard"
                   : std::abs(one_phase - cplx(0, 1)) < 1e-12 ? "i|1>"
                                                              : "phase " + std::to_string(std::arg(one_phase));
  v.alpha = std::abs(a0);
  v.q = 2;
  v.s = 1;
  if (power < 0) {
    v.logical = framed.logical;
    v.residual = (framed.logical - ideal_cnot()).cwiseAbs().maxCoeff();
    v.leakage = framed.leakage;
    v.min_vacuum_fidelity = framed.min_vacuum_fidelity;
    v.cutoff_used = framed.cutoff;
    v.ok = false;
    return v;
  }
  std::vector<Op> fixed = core;
  CVector corr = CVector::Ones(da);
  for (int m = 0; m < power; ++m) corr = corr.cwiseProduct(sbar);
  const CVector corr_rows = expand_a(corr, db);
  fixed.push_back([corr_rows](JointState& st) { st.apply_diagonal(corr_rows); });
  const Simulation sim = simulate(da, db, frame_basis, fixed, opt);

  v.logical = sim.logical;
  v.residual = (sim.logical - ideal_cnot()).cwiseAbs().maxCoeff();
  v.leakage = sim.leakage;
  v.involution_residual = (sim.logical * sim.logical - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  v.min_vacuum_fidelity = sim.min_vacuum_fidelity;
  v.cutoff_used = sim.cutoff;
  v.s_power = power;
  v.ok = v.residual <= kTol && v.leakage <= kTol && 1.0 - v.min_vacuum_fidelity <= 1e-8;
  return v;
}

}  // namespace piswitch
