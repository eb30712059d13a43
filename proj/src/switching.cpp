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

#include "piswitch/switching.hpp"

#include <cmath>

#include "piswitch/errors.hpp"
#include "piswitch/transversal.hpp"

namespace piswitch {

namespace {

// A two-dimensional codespace inside a larger register.
struct LogicalRegister {
  CMatrix basis;  // d x 2, orthonormal columns

  int dim() const { return int(basis.rows()); }
  CMatrix projector(int bit) const { return basis.col(bit) * basis.col(bit).adjoint(); }
  // U on the codespace, identity on its complement.
  CMatrix logical(const Eigen::Matrix2cd& u) const {
    return basis * u * basis.adjoint() + CMatrix::Identity(dim(), dim()) - basis * basis.adjoint();
  }
  CVector encode(const Eigen::Vector2cd& psi) const { return basis * psi; }
};

LogicalRegister register_of(const EvenOddModel& m) {
  CMatrix b(m.n_qubits + 1, 2);
  b.col(0) = m.amp0;
  b.col(1) = m.amp1;
  return {b};
}

LogicalRegister register_of(const PiCode& c) {
  CMatrix b(c.n_qubits + 1, 2);
  b.col(0) = c.logical0.amplitudes();
  b.col(1) = c.logical1.amplitudes();
  return {b};
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

CVector z_rotation_diagonal(int n, double omega) {
  CVector d(n + 1);
  for (int w = 0; w <= n; ++w) d(w) = std::polar(1.0, omega * w);
  return d;
}

CVector plus_state(const LogicalRegister& r) { return (r.basis.col(0) + r.basis.col(1)) / std::sqrt(2.0); }

// Joint pure state psi(a, b) over A sectors x B Dicke levels; operators on B
// act from the right as psi U_B^T.
class JointLogical {
 public:
  JointLogical(LogicalRegister a, LogicalRegister b, const CVector& va, const CVector& vb)
      : a_(std::move(a)), b_(std::move(b)), psi_(va * vb.transpose()) {}

  void cnot_ab() {
    const CMatrix p1 = a_.projector(1);
    const CMatrix xb = b_.logical(pauli_x());
    psi_ = psi_ - p1 * psi_ + p1 * psi_ * xb.transpose();
  }
  void cnot_ba() {
    const CMatrix p1 = b_.projector(1);
    const CMatrix xa = a_.logical(pauli_x());
    psi_ = psi_ - psi_ * p1.transpose() + xa * psi_ * p1.transpose();
  }
  void cz() { psi_ -= 2.0 * a_.projector(1) * psi_ * b_.projector(1).transpose(); }
  void on_a(const CMatrix& u) { psi_ = u * psi_; }
  void on_b(const CMatrix& u) { psi_ = psi_ * u.transpose(); }
  void diagonal_on_b(const CVector& d) { psi_ = psi_ * d.asDiagonal(); }

  // <x_A, anc_B | psi> for x = 0, 1.
  Eigen::Vector2cd logical_a(const CVector& ancilla) const {
    const CVector v = psi_ * ancilla.conjugate();
    return a_.basis.adjoint() * v;
  }

 private:
  LogicalRegister a_, b_;
  CMatrix psi_;
};

double phase_min_residual(const Eigen::Vector2cd& out, const Eigen::Vector2cd& expected) {
  const cplx overlap = out.dot(expected);
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  return (phase * out - expected).norm();
}

}  // namespace

std::string to_string(SwitchCircuit c) { return c == SwitchCircuit::TwoCnotSwap ? "swap" : "cz"; }

SwitchCircuit parse_switch_circuit(const std::string& name) {
  if (name == "swap") return SwitchCircuit::TwoCnotSwap;
  if (name == "cz") return SwitchCircuit::CzHadamardVariant;
  throw DomainError("unknown switching circuit '" + name + "' (expected swap or cz)");
}

SwitchPlan make_switch_plan(EvenOddModel a, PiCode b, double omega, SwitchCircuit circuit) {
  a.validate();
  const LogicalAction act = transversal_z_logical_action(b, omega);
  return SwitchPlan{std::move(a), std::move(b), omega, act.equivalent_z_angle, circuit};
}

SwitchOutcome simulate_switch(const SwitchPlan& plan, const Eigen::Vector2cd& input_logical) {
  if (std::abs(input_logical.norm() - 1.0) > 1e-12) throw DomainError("simulate_switch: input must be normalized");
  const LogicalAction act = transversal_z_logical_action(plan.pi_code, plan.omega);
  if (std::abs(std::remainder(act.equivalent_z_angle - plan.omega_prime, 2 * kPi)) > 1e-9) {
    throw PreconditionError("simulate_switch: omega_prime does not match the transversal action of omega");
  }
  const LogicalRegister a = register_of(plan.stabilizer_model);
  const LogicalRegister b = register_of(plan.pi_code);
  const CVector rot = z_rotation_diagonal(plan.pi_code.n_qubits, plan.omega);

  CVector ancilla;
  SwitchOutcome out;
  if (plan.circuit == SwitchCircuit::TwoCnotSwap) {
    ancilla = b.basis.col(0);
    JointLogical s(a, b, a.encode(input_logical), ancilla);
    s.cnot_ab();
    s.cnot_ba();
    s.diagonal_on_b(rot);
    s.cnot_ba();
    s.cnot_ab();
    out.output = s.logical_a(ancilla);
  } else {
    ancilla = plus_state(b);
    const CMatrix ha = a.logical(gate_h().matrix());
    const CMatrix hb = ideal_logical_hadamard(plan.pi_code).matrix();
    JointLogical s(a, b, a.encode(input_logical), ancilla);
    s.cz();
    s.on_a(ha);
    s.on_b(hb);
    s.cz();
    s.diagonal_on_b(rot);
    s.cz();
    s.on_a(ha);
    s.on_b(hb);
    s.cz();
    out.output = s.logical_a(ancilla);
  }
  out.ancilla_return = out.output.squaredNorm();
  if (out.ancilla_return > 0) out.output /= std::sqrt(out.ancilla_return);
  out.expected = gate_z(plan.omega_prime).matrix() * input_logical;
  out.residual = phase_min_residual(out.output, out.expected);
  return out;
}

namespace {

// Density matrix over (a, b) with row index a * d_b + b.
class JointDensity {
 public:
  JointDensity(int na, int nb, CMatrix rho) : na_(na), nb_(nb), rho_(std::move(rho)) {}

  int da() const { return na_ + 1; }
  int db() const { return nb_ + 1; }
  const CMatrix& rho() const { return rho_; }

  void on_a(const CMatrix& u) {
    const CMatrix big = kron_identity_right(u);
    rho_ = big * rho_ * big.adjoint();
  }
  void diagonal_on_b(const CVector& d) {
    CVector full(da() * db());
    for (int a = 0; a < da(); ++a) full.segment(a * db(), db()) = d;
    rho_ = full.asDiagonal() * rho_ * full.conjugate().asDiagonal();
  }
  void channel_on_b(const Superoperator& e) {
    for (int a = 0; a < da(); ++a)
      for (int ap = 0; ap < da(); ++ap) {
        const CMatrix block = rho_.block(a * db(), ap * db(), db(), db());
        rho_.block(a * db(), ap * db(), db(), db()) = e.apply(block);
      }
  }
  // Three noisy pulses: e^{i pi/2 (wA+wB)^2} on all qubits, then
  // e^{-i pi/2 wA^2} and e^{-i pi/2 wB^2}, each with its f_{n,m} loss.
  void noisy_cz(double c) {
    const int nt = na_ + nb_;
    for (int a = 0; a < da(); ++a)
      for (int b = 0; b < db(); ++b)
        for (int ap = 0; ap < da(); ++ap)
          for (int bp = 0; bp < db(); ++bp) {
            const cplx f = gpg_coefficient(a + b, ap + bp, {-kPi / 2, c, nt}) *
                           gpg_coefficient(a, ap, {kPi / 2, c, na_}) * gpg_coefficient(b, bp, {kPi / 2, c, nb_});
            rho_(a * db() + b, ap * db() + bp) *= f;
          }
  }

 private:
  CMatrix kron_identity_right(const CMatrix& u) const {
    CMatrix out = CMatrix::Zero(da() * db(), da() * db());
    for (int i = 0; i < da(); ++i)
      for (int j = 0; j < da(); ++j) out.block(i * db(), j * db(), db(), db()) = u(i, j) * CMatrix::Identity(db(), db());
    return out;
  }

  int na_, nb_;
  CMatrix rho_;
};

}  // namespace

NoisySwitchOutcome simulate_switch_noisy(const SwitchPlan& plan, double cooperativity, const NoisySwitchOptions& options) {
  if (plan.circuit != SwitchCircuit::CzHadamardVariant) {
    throw PreconditionError("simulate_switch_noisy: only the CZ/Hadamard circuit has noisy component models");
  }
  if (!(cooperativity > 0)) throw DomainError("simulate_switch_noisy: cooperativity must be positive");
  const PiCode& code = plan.pi_code;
  const int nb = code.n_qubits;
  const int na = plan.stabilizer_model.n_qubits;
  const LogicalRegister a = register_of(plan.stabilizer_model);
  const LogicalRegister b = register_of(code);
  const CVector plus = plus_state(b);

  // |+_B> from |D_0>: ideal optimum, re-optimized for this C when that helps.
  PrepOptions po = options.prep;
  po.start.reset();
  po.warm_start.reset();
  const DickeState plus_target(nb, plus);
  PrepResult prep = optimize_preparation(plus_target, options.pulses, PrepMode::Ideal, 0.0, po);
  NoisySwitchOutcome out;
  out.plus_prep_infidelity = prep_cost(prep.sequence, plus_target, PrepMode::Noisy, cooperativity, DickeState::basis(nb, 0));
  if (std::isfinite(cooperativity)) {
    PrepOptions one = po;
    one.restarts = 1;
    one.warm_start = prep.sequence;
    const PrepResult noisy = optimize_preparation(plus_target, options.pulses, PrepMode::Noisy, cooperativity, one);
    if (noisy.infidelity < out.plus_prep_infidelity) {
      prep = noisy;
      out.plus_prep_infidelity = noisy.infidelity;
    }
  }
  const CVector d0 = DickeState::basis(nb, 0).amplitudes();
  const DensityMatrix rho_b = apply_sequence_noisy(prep.sequence, d0 * d0.adjoint(), cooperativity);

  const HadamardScanRow h = hadamard_sequence_for(code, options.pulses, cooperativity, options.prep);
  out.hadamard_infidelity = h.process_infidelity;
  const Superoperator hb = logical_hadamard_channel(code, h.sequence, cooperativity);
  const CMatrix ha = a.logical(gate_h().matrix());
  const CVector rot = z_rotation_diagonal(nb, plan.omega);

  // Column x*2+y of the logical map is the image of |x_A><y_A|.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const CMatrix in_a = a.basis.col(x) * a.basis.col(y).adjoint();
      CMatrix rho(in_a.rows() * rho_b.rows(), in_a.cols() * rho_b.cols());
      for (Eigen::Index i = 0; i < in_a.rows(); ++i)
        for (Eigen::Index j = 0; j < in_a.cols(); ++j)
          rho.block(i * rho_b.rows(), j * rho_b.cols(), rho_b.rows(), rho_b.cols()) = in_a(i, j) * rho_b;
      JointDensity s(na, nb, rho);
      s.noisy_cz(cooperativity);
      s.on_a(ha);
      s.channel_on_b(hb);
      s.noisy_cz(cooperativity);
      s.diagonal_on_b(rot);
      s.noisy_cz(cooperativity);
      s.on_a(ha);
      s.channel_on_b(hb);
      s.noisy_cz(cooperativity);
      for (int xp = 0; xp < 2; ++xp)
        for (int yp = 0; yp < 2; ++yp) {
          CVector l(s.da() * s.db()), r(s.da() * s.db());
          for (int i = 0; i < s.da(); ++i) {
            l.segment(i * s.db(), s.db()) = a.basis(i, xp) * plus;
            r.segment(i * s.db(), s.db()) = a.basis(i, yp) * plus;
          }
          out.logical(2 * xp + yp, 2 * x + y) = l.dot(s.rho() * r);
        }
    }
  out.process_fidelity = process_fidelity(out.logical, gate_z(plan.omega_prime));
  return out;
}

std::vector<CostRow> gate_cost_table() {
  struct Entry {
    int d;
    const char* a;
    long n_a;
    long n_tri;
  };
  // Shortest doubly-even code A and triorthogonal code B per distance.
  static const Entry entries[] = {
      {3, "[[7,1,3]]", 7, 15}, {5, "[[17,1,5]]", 17, 49}, {7, "[[23,1,7]]", 23, 95},
      {9, "[[45,1,9]]", 45, 185}, {11, "[[47,1,11]]", 47, 279},
  };
  std::vector<CostRow> rows;
  for (const auto& e : entries) {
    const long m = (e.d - 1) / 2;
    const long n_pi = build_bgm(4, 3, m).n_qubits;
    CostRow r;
    r.distance = e.d;
    r.code_a = e.a;
    r.code_b_stabilizer = "[[" + std::to_string(e.n_tri) + ",1," + std::to_string(e.d) + "]]";
    r.code_b_pi = "PI-(4,3," + std::to_string(m) + ")=((" + std::to_string(n_pi) + ",2," + std::to_string(e.d) + "))";
    r.n_tri = e.n_tri;
    r.n_pi = n_pi;
    r.lower_bound = 8 * (e.n_tri - 1);
    r.upper_bound = 7 * n_pi + 6;
    if (!(r.upper_bound < r.lower_bound)) throw ConstructionError("gate cost row violates 7 N_PI + 6 < 8 (N_tri - 1)");
    rows.push_back(r);
  }
  return rows;
}

long roundtrip_cost(long n_b) {
  if (n_b < 1) throw DomainError("roundtrip_cost: N_B must be positive");
  return 14 * n_b + 13;
}

}  // namespace piswitch
