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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "piswitch/cnot.hpp"
#include "piswitch/code_json.hpp"
#include "piswitch/codes.hpp"
#include "piswitch/errors.hpp"
#include "piswitch/gpg.hpp"
#include "piswitch/prep.hpp"
#include "piswitch/switching.hpp"
#include "piswitch/tomography.hpp"
#include "piswitch/transversal.hpp"
#include "svg_plot.hpp"

namespace piswitch::cli {

using nlohmann::json;

void Output::emit(const json& doc, const std::string& name) const {
  std::cout << doc.dump(2) << "\n";
  if (!dir.empty()) write(name, doc.dump(2) + "\n");
}

std::string Output::write(const std::string& name, const std::string& text) const {
  const std::filesystem::path base = dir.empty() ? std::filesystem::path(".") : std::filesystem::path(dir);
  std::filesystem::create_directories(base);
  const std::filesystem::path path = base / name;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  return path.string();
}

json envelope(const std::string& command, const json& config, std::optional<std::uint64_t> seed, const json& result) {
  return json{{"command", command},
              {"version", PISWITCH_VERSION},
              {"seed", seed ? json(*seed) : json(nullptr)},
              {"config", config},
              {"result", result}};
}

namespace {

PiCode code_from_args(const CodeArgs& a) {
  if (!a.spec.empty()) return parse_code_spec(a.spec);
  if (a.family == "pi7") return build_pi7();
  if (a.family == "pi11") return build_pi11();
  if (a.family == "bg") return build_bg(a.b, a.g);
  if (a.family == "bgm") return build_bgm(a.b, a.g, a.m);
  if (a.family == "aab") return build_aab_plus(a.g, a.m, a.delta);
  if (a.family == "bgm-nullspace") return build_bgm_nullspace(a.b, a.g, a.m).code;
  throw UsageError("unknown code family '" + a.family + "'");
}

json code_args_json(const CodeArgs& a) {
  return json{{"family", a.family}, {"spec", a.spec}, {"b", a.b}, {"g", a.g}, {"m", a.m}, {"delta", a.delta}};
}

// "steane", "rep:n" (n odd).
EvenOddModel stabilizer_from_name(const std::string& name) {
  if (name == "steane") return steane_model();
  if (name.rfind("rep:", 0) == 0) return repetition_model(std::stoi(name.substr(4)));
  throw UsageError("unknown stabilizer model '" + name + "' (expected steane or rep:n)");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json cnot_json(const CnotVerification& v) {
  return json{{"direction", v.direction},
              {"code_a", v.code_a},
              {"code_b", v.code_b},
              {"residual", v.residual},
              {"literal_residual", v.literal_residual},
              {"leakage", v.leakage},
              {"involution_residual", v.involution_residual},
              {"min_vacuum_fidelity", v.min_vacuum_fidelity},
              {"cutoff_used", v.cutoff_used},
              {"q", v.q},
              {"s", v.s},
              {"alpha", v.alpha},
              {"alpha_correction", v.alpha_correction},
              {"s_power", v.s_power},
              {"target_frame", v.target_frame},
              {"logical", matrix_json(v.logical)},
              {"ok", v.ok}};
}

PrepOptions prep_options(const PrepArgs& p) {
  PrepOptions o;
  o.restarts = p.restarts;
  o.seed = p.seed;
  o.threads = p.threads;
  return o;
}

json prep_args_json(const PrepArgs& p) {
  return json{{"pulses", p.pulses}, {"restarts", p.restarts}, {"threads", p.threads}};
}

json sequence_json(const PulseSequence& s) {
  json a = json::array();
  for (const auto& p : s.pulses()) a.push_back({{"theta", p.theta}, {"xi", p.xi}, {"gamma", p.gamma}, {"phi", p.phi}});
  return a;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(10) << v;
  return o.str();
}

}  // namespace

int cmd_codes_build(const CodeArgs& a, const Output& out) {
  const PiCode code = code_from_args(a);
  json result = code_to_json(code);
  result["label"] = code.label();
  result["even_odd"] = is_even_odd(code);
  out.emit(envelope("codes build", code_args_json(a), std::nullopt, result), "code_" + code.label() + ".json");
  return kExitPass;
}

int cmd_codes_certify(const CodeArgs& a, int t, const Output& out) {
  if (t < 1) throw UsageError("--t must be >= 1");
  const PiCode code = code_from_args(a);
  const KlReport rep = kl_check(code, t);
  json config = code_args_json(a);
  config["t"] = t;
  json result{{"code", code_to_json(code)}, {"kl", kl_report_to_json(rep)}};
  out.emit(envelope("codes certify", config, std::nullopt, result), "certify_" + code.label() + ".json");
  return rep.distance_certified ? kExitPass : kExitFail;
}

int cmd_tau60(double epsilon, long max_denominator, const Output& out) {
  if (!(epsilon > 0)) throw UsageError("--epsilon must be positive");
  const SuperGoldenSearch s = search_super_golden_rational(epsilon, max_denominator);
  json conv = json::array();
  for (const auto& c : s.convergents) conv.push_back({{"g", c.numerator}, {"b", c.denominator}, {"distance", c.distance}});
  json result{{"convergents", conv}, {"found", bool(s.best)}};
  if (s.best) {
    result["g"] = s.best->numerator;
    result["b"] = s.best->denominator;
    result["distance"] = s.best->distance;
  }
  out.emit(envelope("tau60-approx", {{"epsilon", epsilon}, {"max_denominator", max_denominator}}, std::nullopt, result),
           "tau60.json");
  return s.best ? kExitPass : kExitFail;
}

int cmd_gpg_verify_cz(const std::string& code, const std::string& stabilizer, const Output& out) {
  // The pulse identity itself, over every weight pair up to 24.
  int identity_failures = 0;
  for (long wa = 0; wa <= 24; ++wa)
    for (long wb = 0; wb <= 24; ++wb) {
      const cplx want = (wa * wb) % 2 ? cplx(-1) : cplx(1);
      if (cz_three_pulse_phase(wa, wb) != want) ++identity_failures;
    }
  const CzVerification v = logical_cz(stabilizer_from_name(stabilizer), parse_code_spec(code));
  json result{{"identity_failures", identity_failures},
              {"code_a", v.code_a},
              {"code_b", v.code_b},
              {"residual", v.residual},
              {"logical", matrix_json(v.logical)},
              {"ok", v.ok && identity_failures == 0}};
  out.emit(envelope("gpg verify-cz", {{"code", code}, {"stabilizer", stabilizer}}, std::nullopt, result),
           "verify_cz.json");
  return result["ok"].get<bool>() ? kExitPass : kExitFail;
}

int cmd_gpg_verify_cnot(const std::string& direction, const std::string& code, const std::string& stabilizer,
                        int cutoff, const Output& out) {
  NlGpgOptions opt;
  opt.cutoff = cutoff;
  const PiCode b = parse_code_spec(code);
  const EvenOddModel a = stabilizer_from_name(stabilizer);
  CnotVerification v;
  if (direction == "pi-control") {
    v = cnot_pi_control(b, a, opt);
  } else if (direction == "stab-control") {
    v = cnot_stabilizer_control(a, b, opt);
  } else {
    throw UsageError("--direction must be pi-control or stab-control");
  }
  out.emit(envelope("gpg verify-cnot",
                    {{"direction", direction}, {"code", code}, {"stabilizer", stabilizer}, {"cutoff", cutoff}},
                    std::nullopt, cnot_json(v)),
           "verify_cnot_" + direction + ".json");
  return v.ok ? kExitPass : kExitFail;
}

int cmd_tomography_hadamard(const std::string& code_spec, double cooperativity, const PrepArgs& p, const Output& out) {
  if (!(cooperativity > 0)) throw UsageError("--cooperativity must be positive");
  const PiCode code = parse_code_spec(code_spec);
  const HadamardScanRow row = hadamard_sequence_for(code, p.pulses, cooperativity, prep_options(p));
  json config = prep_args_json(p);
  config["code"] = code_spec;
  config["cooperativity"] = cooperativity;
  json result{{"F_pro", 1.0 - row.process_infidelity},
              {"F_ph", row.phase_gate_fidelity},
              {"prep_infidelity", row.prep_infidelity},
              {"sequence", sequence_json(row.sequence)}};
  out.emit(envelope("tomography hadamard", config, p.seed, result), "tomography_hadamard.json");
  return kExitPass;
}

int cmd_switch_run(const std::string& code_spec, const std::string& stabilizer, double omega, const std::string& circuit,
                   const std::string& input, const Output& out) {
  const SwitchPlan plan =
      make_switch_plan(stabilizer_from_name(stabilizer), parse_code_spec(code_spec), omega, parse_switch_circuit(circuit));
  Eigen::Vector2cd psi;
  const double r = 1.0 / std::sqrt(2.0);
  if (input == "plus") {
    psi << r, r;
  } else if (input == "zero") {
    psi << 1, 0;
  } else if (input == "one") {
    psi << 0, 1;
  } else if (input == "plus-i") {
    psi << r, cplx(0, r);
  } else {
    throw UsageError("--input must be zero, one, plus or plus-i");
  }
  const SwitchOutcome o = simulate_switch(plan, psi);
  const bool ok = o.residual <= 1e-12 && std::abs(1.0 - o.ancilla_return) <= 1e-12;
  json result{{"omega_prime", plan.omega_prime},
              {"output", json::array({complex_json(o.output(0)), complex_json(o.output(1))})},
              {"expected", json::array({complex_json(o.expected(0)), complex_json(o.expected(1))})},
              {"residual", o.residual},
              {"ancilla_return", o.ancilla_return},
              {"ok", ok}};
  out.emit(envelope("switch run",
                    {{"code", code_spec}, {"stabilizer", stabilizer}, {"omega", omega}, {"circuit", circuit}, {"input", input}},
                    std::nullopt, result),
           "switch_run.json");
  return ok ? kExitPass : kExitFail;
}

int cmd_switch_table1(const std::string& csv_path, const Output& out) {
  const auto rows = gate_cost_table();
  std::ostringstream text, csv;
  csv << "# version=" << PISWITCH_VERSION << "\n";
  csv << "distance,code_a,code_b_stabilizer,code_b_pi,lower_bound,upper_bound,roundtrip\n";
  text << std::left << std::setw(4) << "d" << std::setw(14) << "code A" << std::setw(16) << "stab. code B"
       << std::setw(26) << "PI code B" << std::right << std::setw(8) << ">=" << std::setw(8) << "<=" << std::setw(11)
       << "roundtrip" << "\n";
  for (const auto& r : rows) {
    const long rt = roundtrip_cost(r.n_pi);
    text << std::left << std::setw(4) << r.distance << std::setw(14) << r.code_a << std::setw(16) << r.code_b_stabilizer
         << std::setw(26) << r.code_b_pi << std::right << std::setw(8) << r.lower_bound << std::setw(8) << r.upper_bound
         << std::setw(11) << rt << "\n";
    csv << r.distance << "," << r.code_a << "," << r.code_b_stabilizer << ",\"" << r.code_b_pi << "\"," << r.lower_bound
        << "," << r.upper_bound << "," << rt << "\n";
  }
  std::cout << text.str() << "\n" << csv.str();
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw std::runtime_error("cannot write " + csv_path);
    f << csv.str();
  } else if (!out.dir.empty()) {
    out.write("table1.csv", csv.str());
  }
  return kExitPass;
}

int cmd_sweep_fig2(const std::string& code_spec, const std::vector<double>& grid, const PrepArgs& p, const Output& out) {
  if (grid.size() < 4) throw UsageError("sweep fig2 needs a grid of at least 4 cooperativities");
  for (double c : grid)
    if (!(c > 0) || !std::isfinite(c)) throw UsageError("cooperativities must be finite and positive");
  const PiCode code = parse_code_spec(code_spec);
  const PrepOptions o = prep_options(p);
  CVector plus = (code.logical0.amplitudes() + code.logical1.amplitudes()) / std::sqrt(2.0);
  const ScanResult prep = scan_infidelity_vs_C(DickeState(code.n_qubits, plus), p.pulses, grid, o);
  const HadamardScan had = scan_hadamard_vs_C(code, p.pulses, grid, o);

  std::ostringstream csv;
  csv << "# command=sweep fig2 version=" << PISWITCH_VERSION << " seed=" << p.seed << " code=" << code_spec
      << " pulses=" << p.pulses << " restarts=" << p.restarts << "\n";
  csv << "# prep_fit: prefactor=" << fmt(prep.fit.prefactor) << " exponent=" << fmt(prep.fit.exponent)
      << " ; hadamard_fit: prefactor=" << fmt(had.fit.prefactor) << " exponent=" << fmt(had.fit.exponent) << "\n";
  csv << "C,prep_infidelity,hadamard_infidelity,prep_exponent,hadamard_exponent\n";
  Series sp{"|+> preparation", "#1f77b4", {}, {}}, sh{"logical Hadamard", "#ff7f0e", {}, {}};
  for (std::size_t k = 0; k < prep.rows.size(); ++k) {
    const double c = prep.rows[k].cooperativity;
    csv << fmt(c) << "," << fmt(prep.rows[k].infidelity) << "," << fmt(had.rows[k].process_infidelity) << ","
        << fmt(prep.fit.exponent) << "," << fmt(had.fit.exponent) << "\n";
    sp.x.push_back(c);
    sp.y.push_back(prep.rows[k].infidelity);
    sh.x.push_back(c);
    sh.y.push_back(had.rows[k].process_infidelity);
  }
  const std::string csv_path = out.write("fig2.csv", csv.str());
  const std::string svg_path = out.write("fig2.svg", loglog_svg({sh, sp}, "cooperativity C", "infidelity"));
  json config = prep_args_json(p);
  config["code"] = code_spec;
  config["grid"] = grid;
  json result{{"csv", csv_path},
              {"svg", svg_path},
              {"prep_fit", {{"prefactor", prep.fit.prefactor}, {"exponent", prep.fit.exponent}, {"r2", prep.fit.r2}}},
              {"hadamard_fit", {{"prefactor", had.fit.prefactor}, {"exponent", had.fit.exponent}, {"r2", had.fit.r2}}}};
  out.emit(envelope("sweep fig2", config, p.seed, result), "fig2.json");
  return kExitPass;
}

int cmd_prep_optimize(const std::string& config_path, const Output& out) {
  std::ifstream f(config_path);
  if (!f) throw UsageError("cannot read config " + config_path);
  json cfg;
  try {
    cfg = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad config JSON: ") + e.what());
  }
  const PiCode code = parse_code_spec(cfg.value("target_code", "pi11"));
  const std::string state = cfg.value("target_state", "plus");
  const int pulses = cfg.value("P", 10);
  const std::string mode = cfg.value("mode", "ideal");
  const double c = cfg.value("C", std::numeric_limits<double>::infinity());
  PrepOptions o;
  o.restarts = cfg.value("restarts", 8);
  o.seed = cfg.value("seed", std::uint64_t(1));

  const CVector& c0 = code.logical0.amplitudes();
  const CVector& c1 = code.logical1.amplitudes();
  CVector target;
  if (state == "plus") {
    target = (c0 + c1) / std::sqrt(2.0);
  } else if (state == "minus") {
    target = (c0 - c1) / std::sqrt(2.0);
  } else if (state == "zero") {
    target = c0;
  } else if (state == "one") {
    target = c1;
  } else if (state == "lambda-") {
    target = hadamard_eigenvectors(code).minus.amplitudes();
    o.start = DickeState::basis(code.n_qubits, code.n_qubits);
  } else {
    throw UsageError("target_state must be plus, minus, zero, one or lambda-");
  }
  if (mode != "ideal" && mode != "noisy") throw UsageError("mode must be ideal or noisy");
  const PrepMode pm = mode == "ideal" ? PrepMode::Ideal : PrepMode::Noisy;
  if (pm == PrepMode::Noisy && !(c > 0)) throw UsageError("noisy mode needs C > 0");

  PrepResult r;
  if (pm == PrepMode::Noisy) {
    // Noisy runs start from the ideal optimum, then keep the better result.
    r = optimize_preparation(DickeState(code.n_qubits, target), pulses, PrepMode::Ideal, 0.0, o);
    const double reuse = prep_cost(r.sequence, DickeState(code.n_qubits, target), PrepMode::Noisy, c,
                                   o.start.value_or(DickeState::basis(code.n_qubits, 0)));
    PrepOptions one = o;
    one.restarts = 1;
    one.warm_start = r.sequence;
    PrepResult noisy = optimize_preparation(DickeState(code.n_qubits, target), pulses, PrepMode::Noisy, c, one);
    if (reuse < noisy.infidelity) {
      noisy.sequence = r.sequence;
      noisy.infidelity = reuse;
    }
    noisy.restarts_used = o.restarts;
    r = noisy;
  } else {
    r = optimize_preparation(DickeState(code.n_qubits, target), pulses, PrepMode::Ideal, 0.0, o);
  }

  json result{{"infidelity", r.infidelity},
              {"noisy", r.noisy},
              {"cooperativity", r.noisy ? json(r.cooperativity) : json(nullptr)},
              {"restarts_used", r.restarts_used},
              {"gradient_method", r.gradient_method},
              {"flagged", r.flagged},
              {"flag_reason", r.flag_reason},
              {"sequence", sequence_json(r.sequence)}};
  out.emit(envelope("prep optimize", cfg, o.seed, result), "prep_optimize.json");

  // Append to the run log used by the plotting workflow.
  const std::filesystem::path log = std::filesystem::path(out.dir.empty() ? "." : out.dir) / "prep_log.csv";
  const bool fresh = !std::filesystem::exists(log);
  std::ofstream lf(log, std::ios::app);
  if (fresh) lf << "C,P,infidelity,exponent_fit,seed,version\n";
  lf << (r.noisy ? fmt(c) : std::string("inf")) << "," << pulses << "," << fmt(r.infidelity) << ",," << o.seed << ","
     << PISWITCH_VERSION << "\n";
  return r.flagged ? kExitFail : kExitPass;
}

}  // namespace piswitch::cli
