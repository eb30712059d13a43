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

#include "piswitch/prep.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_fit.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

constexpr int kParamsPerPulse = 4;

void require_dims(const DickeState& a, const DickeState& b, const char* what) {
  if (a.n_qubits() != b.n_qubits()) throw DomainError(std::string(what) + ": qubit-number mismatch");
}

RVector jz_squared(int n) { return jz_diagonal(n).array().square(); }

CVector u_diagonal(const RVector& jz2, double phi) {
  CVector d(jz2.size());
  for (Eigen::Index k = 0; k < jz2.size(); ++k) d(k) = std::polar(1.0, phi * jz2(k));
  return d;
}

}  // namespace

PulseSequence::PulseSequence(std::vector<Pulse> pulses) : pulses_(std::move(pulses)) {
  if (pulses_.empty()) throw DomainError("PulseSequence needs at least one pulse");
  for (const auto& p : pulses_) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.xi) || !std::isfinite(p.gamma) || !std::isfinite(p.phi)) {
      throw DomainError("PulseSequence: non-finite parameter");
    }
  }
}

std::vector<double> PulseSequence::flatten() const {
  std::vector<double> x;
  x.reserve(pulses_.size() * kParamsPerPulse);
  for (const auto& p : pulses_) x.insert(x.end(), {p.theta, p.xi, p.gamma, p.phi});
  return x;
}

PulseSequence PulseSequence::unflatten(const std::vector<double>& x) {
  if (x.empty() || x.size() % kParamsPerPulse != 0) throw DomainError("PulseSequence::unflatten: bad length");
  std::vector<Pulse> pulses;
  for (std::size_t k = 0; k < x.size(); k += kParamsPerPulse) pulses.push_back({x[k], x[k + 1], x[k + 2], x[k + 3]});
  return PulseSequence(std::move(pulses));
}

double PulseSequence::total_gpg_angle() const {
  double s = 0.0;
  for (const auto& p : pulses_) s += std::abs(p.phi);
  return s;
}

PulseSequence canonicalize_phases(const PulseSequence& seq, int n_qubits) {
  if (n_qubits % 2 == 0) return seq;
  std::vector<Pulse> pulses = seq.pulses();
  for (auto& p : pulses) p.phi -= kPi * std::round(p.phi / kPi);
  return PulseSequence(std::move(pulses));
}

DickeState apply_sequence_ideal(const PulseSequence& seq, const DickeState& start) {
  const int n = start.n_qubits();
  const SpinRotations rot(n);
  const RVector jz2 = jz_squared(n);
  CVector v = start.amplitudes();
  for (const auto& p : seq.pulses()) {
    v = u_diagonal(jz2, p.phi).cwiseProduct(v);
    v = rot.rotation(p.theta, p.xi, p.gamma) * v;
  }
  return DickeState(n, v / v.norm());
}

DickeState apply_sequence_ideal_inverse(const PulseSequence& seq, const DickeState& state) {
  const int n = state.n_qubits();
  const SpinRotations rot(n);
  const RVector jz2 = jz_squared(n);
  CVector v = state.amplitudes();
  for (int p = seq.size() - 1; p >= 0; --p) {
    v = rot.rotation(seq[p].theta, seq[p].xi, seq[p].gamma).adjoint() * v;
    v = u_diagonal(jz2, -seq[p].phi).cwiseProduct(v);
  }
  return DickeState(n, v / v.norm());
}

CMatrix sequence_unitary(const PulseSequence& seq, int n_qubits) {
  const SpinRotations rot(n_qubits);
  const RVector jz2 = jz_squared(n_qubits);
  CMatrix u = CMatrix::Identity(n_qubits + 1, n_qubits + 1);
  for (const auto& p : seq.pulses()) u = rot.rotation(p.theta, p.xi, p.gamma) * u_diagonal(jz2, p.phi).asDiagonal() * u;
  return u;
}

DensityMatrix noisy_gpg_step(const DensityMatrix& rho, double phi, double cooperativity, int n_qubits) {
  DensityMatrix out = noisy_lgpg(rho, {-phi, cooperativity, n_qubits});
  // e^{i N phi Jz} restores U(phi) = e^{i phi Jz^2} up to a global phase.
  const RVector jz = jz_diagonal(n_qubits);
  CVector d(n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) d(w) = std::polar(1.0, n_qubits * phi * jz(w));
  return d.asDiagonal() * out * d.conjugate().asDiagonal();
}

DensityMatrix apply_sequence_noisy(const PulseSequence& seq, const DensityMatrix& rho0, double cooperativity) {
  if (!(cooperativity > 0)) throw DomainError("apply_sequence_noisy: cooperativity must be positive");
  const int n = int(rho0.rows()) - 1;
  if (n < 1 || rho0.cols() != rho0.rows()) throw DomainError("apply_sequence_noisy: bad density matrix");
  const SpinRotations rot(n);
  DensityMatrix rho = rho0;
  for (const auto& p : seq.pulses()) {
    rho = noisy_gpg_step(rho, p.phi, cooperativity, n);
    const CMatrix r = rot.rotation(p.theta, p.xi, p.gamma);
    rho = r * rho * r.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;  // keep Hermiticity exact for the next pulse's check
  }
  return rho;
}

DensityMatrix apply_sequence_noisy_reverse(const PulseSequence& seq, const DensityMatrix& rho0, double cooperativity) {
  if (!(cooperativity > 0)) throw DomainError("apply_sequence_noisy_reverse: cooperativity must be positive");
  const int n = int(rho0.rows()) - 1;
  if (n < 1 || rho0.cols() != rho0.rows()) throw DomainError("apply_sequence_noisy_reverse: bad density matrix");
  const SpinRotations rot(n);
  DensityMatrix rho = rho0;
  for (int k = seq.size() - 1; k >= 0; --k) {
    const Pulse& p = seq[k];
    const CMatrix r = rot.rotation(p.theta, p.xi, p.gamma);
    rho = r.adjoint() * rho * r;
    rho = (rho + rho.adjoint()) / 2.0;
    rho = noisy_gpg_step(rho, -p.phi, cooperativity, n);
  }
  return rho;
}

std::string to_string(GradientMethod g) {
  return g == GradientMethod::Adjoint ? "bfgs2/adjoint-gradient" : "bfgs2/central-difference";
}

double prep_cost(const PulseSequence& seq, const DickeState& target, PrepMode mode, double cooperativity,
                 const DickeState& start) {
  require_dims(target, start, "prep_cost");
  if (mode == PrepMode::Ideal) {
    const DickeState out = apply_sequence_ideal(seq, start);
    return std::max(0.0, 1.0 - std::norm(target.inner(out)));
  }
  const CVector& s = start.amplitudes();
  const DensityMatrix rho = apply_sequence_noisy(seq, s * s.adjoint(), cooperativity);
  const CVector& t = target.amplitudes();
  return 1.0 - (t.adjoint() * rho * t)(0, 0).real();
}

namespace {

// d/dx of 1 - |<t|psi_P>|^2 by one forward and one backward sweep.
std::vector<double> adjoint_gradient(const PulseSequence& seq, const DickeState& target, const DickeState& start) {
  const int n = start.n_qubits();
  const int np = seq.size();
  const SpinRotations rot(n);
  const RVector jz = rot.jz();
  const RVector jz2 = jz_squared(n);
  const CMatrix& jy = rot.jy();
  const cplx I(0, 1);

  std::vector<CVector> after_u(np);  // U_p psi_{p-1}
  CVector v = start.amplitudes();
  for (int p = 0; p < np; ++p) {
    after_u[p] = u_diagonal(jz2, seq[p].phi).cwiseProduct(v);
    v = rot.rotation(seq[p].theta, seq[p].xi, seq[p].gamma) * after_u[p];
  }
  const cplx a = target.amplitudes().dot(v);  // <t|psi_P>

  std::vector<double> g(np * kParamsPerPulse);
  CVector chi = target.amplitudes();  // (R_P U_P ... R_{p+1} U_{p+1})^dagger |t>
  for (int p = np - 1; p >= 0; --p) {
    const Pulse& q = seq[p];
    const CVector zt = rot.rz_diagonal(q.theta);
    const CVector zg = rot.rz_diagonal(q.gamma);
    const CMatrix ry = rot.ry(q.xi);
    const CVector w0 = zg.cwiseProduct(after_u[p]);
    const CVector w1 = ry * w0;
    const CVector rv = zt.cwiseProduct(w1);

    const cplx d_theta = chi.dot(I * jz.cwiseProduct(rv));
    const cplx d_xi = chi.dot(zt.cwiseProduct(I * (jy * w1)));
    const CVector rjz = zt.cwiseProduct(ry * zg.cwiseProduct(jz.cwiseProduct(after_u[p])));
    const cplx d_gamma = chi.dot(I * rjz);
    const CVector rjz2 = zt.cwiseProduct(ry * zg.cwiseProduct(jz2.cwiseProduct(after_u[p])));
    const cplx d_phi = chi.dot(I * rjz2);

    const cplx dd[4] = {d_theta, d_xi, d_gamma, d_phi};
    for (int k = 0; k < 4; ++k) g[p * kParamsPerPulse + k] = -2.0 * (std::conj(a) * dd[k]).real();

    // chi <- U_p^dagger R_p^dagger chi
    chi = zt.conjugate().cwiseProduct(chi);
    chi = ry.adjoint() * chi;
    chi = zg.conjugate().cwiseProduct(chi);
    chi = u_diagonal(jz2, -q.phi).cwiseProduct(chi);
  }
  return g;
}

// Same derivative for the noisy cost 1 - <t|rho_P|t>. Each pulse is
// rho -> R (F(phi) o rho) R^dagger with F_nm = e^{-a_nm |phi|} e^{i b_nm phi};
// the backward sweep carries the Heisenberg-picture observable.
std::vector<double> noisy_adjoint_gradient(const PulseSequence& seq, const DickeState& target,
                                           double cooperativity, const DickeState& start) {
  const int n = start.n_qubits();
  const int d = n + 1;
  const int np = seq.size();
  const SpinRotations rot(n);
  const CVector ijz = cplx(0, 1) * rot.jz().cast<cplx>();
  const CMatrix ijy = cplx(0, 1) * rot.jy();

  Eigen::MatrixXd a(d, d), b(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      a(r, c) = -std::log(std::abs(gpg_coefficient(r, c, {1.0, cooperativity, n})));
      b(r, c) = double((r - c) * (r + c - n));
    }
  }
  auto filter = [&](double phi) {
    CMatrix f(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) f(r, c) = std::exp(-a(r, c) * std::abs(phi)) * std::polar(1.0, b(r, c) * phi);
    return f;
  };

  std::vector<CMatrix> before(np);  // rho_{p-1}
  CMatrix rho = start.amplitudes() * start.amplitudes().adjoint();
  for (int p = 0; p < np; ++p) {
    before[p] = rho;
    const CMatrix r = rot.rotation(seq[p].theta, seq[p].xi, seq[p].gamma);
    rho = r * filter(seq[p].phi).cwiseProduct(rho) * r.adjoint();
  }

  std::vector<double> g(np * kParamsPerPulse);
  CMatrix obs = target.amplitudes() * target.amplitudes().adjoint();
  for (int p = np - 1; p >= 0; --p) {
    const Pulse& q = seq[p];
    const CVector zt = rot.rz_diagonal(q.theta);
    const CVector zg = rot.rz_diagonal(q.gamma);
    const CMatrix ry = rot.ry(q.xi);
    const CMatrix r = zt.asDiagonal() * ry * zg.asDiagonal();
    const CMatrix f = filter(q.phi);
    const CMatrix sigma = f.cwiseProduct(before[p]);
    const CMatrix right = sigma * r.adjoint();

    // d Tr[O R s R^dagger] = 2 Re Tr[O K s R^dagger] for dR = K.
    auto slope = [&](const CMatrix& k) { return 2.0 * (obs * k * right).trace().real(); };
    const CMatrix k_theta = ijz.asDiagonal() * r;
    const CMatrix k_xi = zt.asDiagonal() * ijy * ry * zg.asDiagonal();
    const CMatrix k_gamma = r * ijz.asDiagonal();
    const double sgn = q.phi > 0 ? 1.0 : (q.phi < 0 ? -1.0 : 0.0);
    CMatrix df(d, d);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) df(x, y) = f(x, y) * cplx(-sgn * a(x, y), b(x, y));
    const double d_phi = (obs * r * df.cwiseProduct(before[p]) * r.adjoint()).trace().real();

    const double dd[4] = {slope(k_theta), slope(k_xi), slope(k_gamma), d_phi};
    for (int k = 0; k < 4; ++k) g[p * kParamsPerPulse + k] = -dd[k];

    obs = f.conjugate().cwiseProduct(r.adjoint() * obs * r);
  }
  return g;
}

}  // namespace

std::vector<double> prep_gradient(const PulseSequence& seq, const DickeState& target, PrepMode mode,
                                  double cooperativity, const DickeState& start, GradientMethod method,
                                  double fd_step) {
  require_dims(target, start, "prep_gradient");
  if (method == GradientMethod::Adjoint) {
    return mode == PrepMode::Ideal ? adjoint_gradient(seq, target, start)
                                   : noisy_adjoint_gradient(seq, target, cooperativity, start);
  }
  std::vector<double> x = seq.flatten();
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double x0 = x[k];
    x[k] = x0 + fd_step;
    const double fp = prep_cost(PulseSequence::unflatten(x), target, mode, cooperativity, start);
    x[k] = x0 - fd_step;
    const double fm = prep_cost(PulseSequence::unflatten(x), target, mode, cooperativity, start);
    x[k] = x0;
    g[k] = (fp - fm) / (2.0 * fd_step);
  }
  return g;
}

namespace {

struct Problem {
  const DickeState* target;
  const DickeState* start;
  PrepMode mode;
  double cooperativity;
  GradientMethod method;
  double fd_step;
  // Best iterate seen by any evaluation, so a failed line search still
  // reports a feasible point.
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
};

std::vector<double> to_std(const gsl_vector* v) {
  std::vector<double> x(v->size);
  for (std::size_t k = 0; k < v->size; ++k) x[k] = gsl_vector_get(v, k);
  return x;
}

double eval_f(const gsl_vector* v, void* params) {
  auto* pr = static_cast<Problem*>(params);
  const std::vector<double> x = to_std(v);
  for (double xi : x)
    if (!std::isfinite(xi)) return std::numeric_limits<double>::infinity();
  const double f = prep_cost(PulseSequence::unflatten(x), *pr->target, pr->mode, pr->cooperativity, *pr->start);
  if (f < pr->best_cost) {
    pr->best_cost = f;
    pr->best_x = x;
  }
  return f;
}

void eval_df(const gsl_vector* v, void* params, gsl_vector* df) {
  auto* pr = static_cast<Problem*>(params);
  const std::vector<double> g = prep_gradient(PulseSequence::unflatten(to_std(v)), *pr->target, pr->mode,
                                              pr->cooperativity, *pr->start, pr->method, pr->fd_step);
  for (std::size_t k = 0; k < g.size(); ++k) gsl_vector_set(df, k, g[k]);
}

void eval_fdf(const gsl_vector* v, void* params, double* f, gsl_vector* df) {
  *f = eval_f(v, params);
  eval_df(v, params, df);
}

struct LocalResult {
  std::vector<double> x;
  double cost = 1.0;
  bool flagged = false;
  std::string reason;
};

LocalResult local_search(Problem pr, const std::vector<double>& x0, const PrepOptions& opt) {
  const std::size_t dim = x0.size();
  gsl_multimin_function_fdf fn{&eval_f, &eval_df, &eval_fdf, dim, &pr};
  gsl_vector* x = gsl_vector_alloc(dim);
  for (std::size_t k = 0; k < dim; ++k) gsl_vector_set(x, k, x0[k]);
  gsl_multimin_fdfminimizer* s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, dim);
  gsl_multimin_fdfminimizer_set(s, &fn, x, 0.01, 0.1);

  LocalResult out;
  for (int it = 0; it < opt.max_iters; ++it) {
    const int status = gsl_multimin_fdfminimizer_iterate(s);
    if (status == GSL_ENOPROG) break;  // line search cannot improve further
    if (status != GSL_SUCCESS) {
      out.flagged = true;
      out.reason = gsl_strerror(status);
      break;
    }
    if (!std::isfinite(s->f)) {
      out.flagged = true;
      out.reason = "non-finite cost";
      break;
    }
    if (s->f < opt.tol) break;
    if (gsl_multimin_test_gradient(s->gradient, 1e-12) == GSL_SUCCESS) break;
  }
  out.x = pr.best_x.empty() ? x0 : pr.best_x;
  out.cost = pr.best_cost;
  gsl_multimin_fdfminimizer_free(s);
  gsl_vector_free(x);
  return out;
}

std::vector<double> random_start(int pulses, std::uint64_t seed, int restart) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> gpg(-kPi / 2.0, kPi / 2.0);
  std::vector<double> x;
  for (int p = 0; p < pulses; ++p) {
    const double t = angle(rng), xi = angle(rng), g = angle(rng), phi = gpg(rng);
    x.insert(x.end(), {t, xi, g, phi});
  }
  return x;
}

}  // namespace

PrepResult optimize_preparation(const DickeState& target, int pulses, PrepMode mode, double cooperativity,
                                const PrepOptions& options) {
  if (pulses < 1) throw DomainError("optimize_preparation: P must be >= 1");
  if (options.restarts < 1) throw DomainError("optimize_preparation: restarts must be >= 1");
  if (mode == PrepMode::Noisy && !(cooperativity > 0)) {
    throw DomainError("optimize_preparation: cooperativity must be positive");
  }
  const int n = target.n_qubits();
  const DickeState start = options.start.value_or(DickeState::basis(n, 0));
  require_dims(target, start, "optimize_preparation");
  if (options.warm_start && options.warm_start->size() != pulses) {
    throw DomainError("optimize_preparation: warm start has the wrong pulse count");
  }
  const GradientMethod method = options.gradient;

  // GSL's default handler aborts; errors are read from return codes instead.
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  std::vector<LocalResult> results(options.restarts);
  auto run = [&](int r) {
    std::vector<double> x0 = (r == 0 && options.warm_start) ? options.warm_start->flatten()
                                                            : random_start(pulses, options.seed, r);
    Problem pr{&target, &start, mode, cooperativity, method, options.fd_step, std::numeric_limits<double>::infinity(), {}};
    results[r] = local_search(pr, x0, options);
  };
  int threads = options.threads > 0 ? options.threads : int(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, options.restarts);
  if (threads <= 1) {
    for (int r = 0; r < options.restarts; ++r) run(r);
  } else {
    // Each restart owns its RNG stream and result slot, so scheduling never
    // changes the outcome.
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int r = t; r < options.restarts; r += threads) run(r);
      });
    }
    for (auto& th : pool) th.join();
  }

  int best = 0;
  for (int r = 1; r < options.restarts; ++r)
    if (results[r].cost < results[best].cost) best = r;

  PrepResult out;
  out.sequence = canonicalize_phases(PulseSequence::unflatten(results[best].x), n);
  out.infidelity = prep_cost(out.sequence, target, mode, cooperativity, start);
  out.noisy = mode == PrepMode::Noisy;
  out.cooperativity = out.noisy ? cooperativity : 0.0;
  out.restarts_used = options.restarts;
  out.seed = options.seed;
  out.gradient_method = to_string(method);
  out.flagged = results[best].flagged;
  out.flag_reason = results[best].reason;
  return out;
}

PowerLawFit fit_power_law(const std::vector<double>& c, const std::vector<double>& y) {
  if (c.size() != y.size() || c.size() < 2) throw DomainError("fit_power_law: need >= 2 matching points");
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!(c[k] > 0) || !(y[k] > 0)) throw DomainError("fit_power_law: values must be positive");
    lx.push_back(std::log(c[k]));
    ly.push_back(std::log(y[k]));
  }
  double c0, c1, cov00, cov01, cov11, sumsq;
  gsl_fit_linear(lx.data(), 1, ly.data(), 1, lx.size(), &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
  double mean = 0.0, tss = 0.0;
  for (double v : ly) mean += v;
  mean /= double(ly.size());
  for (double v : ly) tss += (v - mean) * (v - mean);
  return {std::exp(c0), c1, tss > 0 ? 1.0 - sumsq / tss : 1.0};
}

ScanResult scan_infidelity_vs_C(const DickeState& target, int pulses, const std::vector<double>& c_grid,
                                const PrepOptions& options, ScanMode mode) {
  if (c_grid.size() < 4) throw DomainError("scan_infidelity_vs_C: need at least 4 grid points");
  std::vector<double> grid = c_grid;
  std::sort(grid.begin(), grid.end());
  if (!(grid.front() > 0) || std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    throw DomainError("scan_infidelity_vs_C: grid must be positive and distinct");
  }
  if (std::log10(grid.back() / grid.front()) < 3.0 - 1e-9) {
    throw DomainError("scan_infidelity_vs_C: grid must span at least 3 decades");
  }
  const int n = target.n_qubits();
  const DickeState start = options.start.value_or(DickeState::basis(n, 0));

  ScanResult out;
  out.ideal = optimize_preparation(target, pulses, PrepMode::Ideal, 0.0, options);
  PulseSequence previous = out.ideal.sequence;
  for (double c : grid) {
    ScanRow row{c, prep_cost(out.ideal.sequence, target, PrepMode::Noisy, c, start), out.ideal.sequence};
    if (mode == ScanMode::NoisyReoptimize) {
      // Starting from the previous grid point's optimum makes the curve
      // monotone: that sequence already does better at the larger C.
      for (const PulseSequence* seed_seq : {&out.ideal.sequence, &previous}) {
        PrepOptions o = options;
        o.restarts = 1;
        o.warm_start = *seed_seq;
        const PrepResult r = optimize_preparation(target, pulses, PrepMode::Noisy, c, o);
        if (r.infidelity < row.infidelity) {
          row.infidelity = r.infidelity;
          row.sequence = r.sequence;
        }
      }
      previous = row.sequence;
    }
    out.rows.push_back(row);
  }
  std::vector<double> cs, ys;
  for (const auto& r : out.rows) {
    cs.push_back(r.cooperativity);
    ys.push_back(r.infidelity);
  }
  out.fit = fit_power_law(cs, ys);
  return out;
}

}  // namespace piswitch
