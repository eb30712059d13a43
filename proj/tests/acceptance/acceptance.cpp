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

// Acceptance runner: one PASS/FAIL line per criterion on stdout. The exit
// status is zero when the failing set equals --expect-fail exactly, so a
// documented failure stays visible and an unexpected change in either
// direction breaks the run.

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "../oracles.hpp"
#include "piswitch/cnot.hpp"
#include "piswitch/codes.hpp"
#include "piswitch/gpg.hpp"
#include "piswitch/mode.hpp"
#include "piswitch/prep.hpp"
#include "piswitch/switching.hpp"
#include "piswitch/tomography.hpp"
#include "piswitch/transversal.hpp"

using namespace piswitch;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
  double budget_s = 0;  // wall-clock limit
};

double angle_error(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

double amp_distance(const PiCode& a, const PiCode& b) {
  if (a.n_qubits != b.n_qubits) return INFINITY;
  return std::max((a.logical0.amplitudes() - b.logical0.amplitudes()).norm(),
                  (a.logical1.amplitudes() - b.logical1.amplitudes()).norm());
}

// Relative codeword phase of Z(theta) on every qubit, from the 2^N expansion.
double expanded_angle(const PiCode& code, double theta) {
  const oracle::Vec v0 = oracle::expand(code.logical0), v1 = oracle::expand(code.logical1);
  cplx p0 = 0, p1 = 0;
  for (std::uint64_t x = 0; x < v0.size(); ++x) {
    const cplx ph = std::polar(1.0, theta * std::popcount(x));
    p0 += std::norm(v0[x]) * ph;
    p1 += std::norm(v1[x]) * ph;
  }
  return std::arg(p1 / p0);
}

Verdict code_identities() {
  const PiCode bg = build_bg(4, 3);
  const double amp = std::max(std::abs(bg.logical0.amplitude(0) - std::sqrt(5.0) / 4),
                              std::abs(bg.logical0.amplitude(8) - std::sqrt(11.0) / 4));
  const double d1 = amp_distance(bg, build_bgm(4, 3, 1));
  const double d2 = amp_distance(bg, build_aab_plus(3, 1, 4));
  std::ostringstream s;
  s << "amplitude error " << amp << ", bgm " << d1 << ", aab " << d2;
  return {amp <= 1e-12 && d1 <= 1e-12 && d2 <= 1e-12, s.str(), 1};
}

Verdict distances() {
  const bool pi7 = kl_check(build_pi7(), 1).distance_certified;
  const bool pi11 = kl_check(build_pi11(), 1).distance_certified;
  const bool big = kl_check(build_bgm(4, 3, 2), 2).distance_certified;
  const bool o7 = oracle::brute_force_kl(build_pi7(), 1).holds;
  const bool o11 = oracle::brute_force_kl(build_pi11(), 1).holds;
  std::ostringstream s;
  s << "pi7 " << pi7 << "/oracle " << o7 << ", pi11 " << pi11 << "/oracle " << o11 << ", bgm(4,3,2) t=2 " << big;
  return {pi7 && pi11 && big && o7 == pi7 && o11 == pi11, s.str(), 300};
}

Verdict lemma_grid() {
  int cases = 0, zeros = 0;
  for (long b = 2; b <= 6; ++b)
    for (long g = 1; g <= 2 * b - 1; ++g)
      for (long m = 1; m <= 4; ++m)
        for (long x = 1; x <= m; ++x) {
          ++cases;
          zeros += lemma_S(b, g, m, x) == 0;
        }
  return {cases == zeros, std::to_string(zeros) + "/" + std::to_string(cases) + " exact zeros", 30};
}

Verdict transversal_actions() {
  double worst = angle_error(transversal_z_logical_action(build_pi11(), 3 * kPi / 4).equivalent_z_angle, kPi / 4);
  worst = std::max(worst, angle_error(transversal_z_logical_action(build_pi7(), 2 * kPi / 5).equivalent_z_angle, 4 * kPi / 5));
  int checked = 0, even_g_skipped = 0;
  for (long b = 1; b <= 7; ++b)
    for (long g = 1; g <= 2 * b - 1; ++g) {
      if (std::gcd(b, g) != 1) continue;
      // With g even the reachable angles are pi u / b + u pi, not pi u / b.
      if (g % 2 == 0) {
        ++even_g_skipped;
        continue;
      }
      const long k = coprime_multiplier(b, g);
      for (long u = 0; u < b; ++u) {
        const double got = transversal_z_logical_action(build_bg(b, g), u * k * kPi / b).equivalent_z_angle;
        worst = std::max(worst, angle_error(got, kPi * u / b));
        ++checked;
      }
    }
  std::ostringstream s;
  s << checked << " coprime cases, worst error " << worst << ", even-g pairs excluded " << even_g_skipped;
  return {worst <= 1e-12, s.str(), 1};
}

Verdict cz_identity() {
  int bad = 0;
  for (long wa = 0; wa <= 24; ++wa)
    for (long wb = 0; wb <= 24; ++wb)
      bad += cz_three_pulse_phase(wa, wb) != ((wa * wb) % 2 ? cplx(-1) : cplx(1));
  const double r = logical_cz(steane_model(), build_pi11()).residual;
  std::ostringstream s;
  s << bad << " identity failures, logical residual " << r;
  return {bad == 0 && r <= 1e-12, s.str(), 1};
}

Verdict nonlinear_constructions() {
  const NlGpgResult nl = nonlinear_gpg(7, kPi, 0.0, kPi / 4);
  const CnotVerification a = cnot_pi_control(build_pi7(), steane_model());
  const CnotVerification b = cnot_stabilizer_control(steane_model(), build_pi7());
  const double vac = std::min({nl.min_vacuum_fidelity, a.min_vacuum_fidelity, b.min_vacuum_fidelity});
  std::ostringstream s;
  s << "closure " << nl.residual << " at cutoff " << nl.cutoff_used << ", cnot residuals " << a.residual << " / "
    << b.residual << ", min vacuum fidelity " << vac;
  return {nl.residual <= 1e-6 && a.residual <= 1e-6 && b.residual <= 1e-6 && vac >= 1 - 1e-8, s.str(), 120};
}

Verdict super_golden() {
  const double d = phase_min_distance(tau60_tilde(kPi * 167.0 / 704.0), tau60());
  const SuperGoldenSearch r = search_super_golden_rational(1e-6, 704);
  const bool found = r.best && r.best->denominator <= 704 && r.best->distance < 1e-6;
  std::ostringstream s;
  s << "distance at 167/704 " << d;
  if (r.best) s << ", search found " << r.best->numerator << "/" << r.best->denominator;
  return {d < 1e-6 && found, s.str(), 1};
}

Verdict fidelity_scaling() {
  const PiCode code = build_pi11();
  const std::vector<double> grid = {1e4, 1e5, 1e6, 1e7, 1e8};
  PrepOptions o;
  o.restarts = 8;
  const DickeState plus(code.n_qubits, (code.logical0.amplitudes() + code.logical1.amplitudes()) / std::sqrt(2.0));
  const ScanResult prep = scan_infidelity_vs_C(plus, 10, grid, o);
  const HadamardScan had = scan_hadamard_vs_C(code, 10, grid, o);
  const double prep_1e8 = prep.rows.back().infidelity;
  const double had_1e8 = had.rows.back().process_infidelity;
  auto in_band = [](double e) { return e >= -0.55 && e <= -0.45; };
  std::ostringstream s;
  s << "prep exponent " << prep.fit.exponent << ", 1e8 " << prep_1e8 << "; Hadamard exponent " << had.fit.exponent
    << ", 1e8 " << had_1e8;
  return {in_band(prep.fit.exponent) && in_band(had.fit.exponent) && prep_1e8 <= 1e-2 && had_1e8 <= 3e-2, s.str(),
          1800};
}

Verdict cost_table() {
  static const long lower[] = {112, 384, 752, 1472, 2224};
  static const long upper[] = {83, 139, 195, 251, 307};
  const auto rows = gate_cost_table();
  bool ok = rows.size() == 5;
  for (std::size_t k = 0; ok && k < rows.size(); ++k)
    ok = rows[k].lower_bound == lower[k] && rows[k].upper_bound == upper[k] &&
         rows[k].upper_bound == 7 * rows[k].n_pi + 6;
  ok = ok && roundtrip_cost(11) == 167 && roundtrip_cost(23) == 14 * 23 + 13;
  return {ok, std::to_string(rows.size()) + " rows", 1};
}

Verdict ideal_switching() {
  struct Case {
    PiCode code;
    double omega;
  };
  std::vector<Case> cases = {{build_pi7(), 2 * kPi / 5}, {build_pi11(), 3 * kPi / 4}};
  for (auto [b, g] : {std::pair{3L, 1L}, std::pair{2L, 1L}, std::pair{5L, 3L}})
    cases.push_back({build_bg(b, g), coprime_multiplier(b, g) * kPi / b});
  const Eigen::Vector2cd in(cplx(0.6, 0.0), cplx(0.0, 0.8));
  double worst = 0.0;
  for (const auto& c : cases) {
    const Eigen::Vector2cd expect = gate_z(expanded_angle(c.code, c.omega)).matrix() * in;
    for (auto circuit : {SwitchCircuit::TwoCnotSwap, SwitchCircuit::CzHadamardVariant}) {
      const SwitchOutcome o = simulate_switch(make_switch_plan(steane_model(), c.code, c.omega, circuit), in);
      const cplx ov = expect.dot(o.output);
      worst = std::max({worst, (o.output - ov / std::abs(ov) * expect).norm(), 1.0 - o.ancilla_return});
    }
  }
  std::ostringstream s;
  s << cases.size() << " codes, worst deviation " << worst;
  return {worst <= 1e-12, s.str(), 10};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"code identities", code_identities},
      {"distance certification", distances},
      {"lemma grid", lemma_grid},
      {"transversal actions", transversal_actions},
      {"CZ identity", cz_identity},
      {"nonlinear GPG constructions", nonlinear_constructions},
      {"super golden gate", super_golden},
      {"fidelity scaling", fidelity_scaling},
      {"gate cost table", cost_table},
      {"ideal switching", ideal_switching},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what(), 0};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = v.budget_s <= 0 || secs <= v.budget_s;
    const bool pass = v.pass && in_time;
    if (!pass) failed.insert(int(i) + 1);
    std::cout << (pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail << " ("
              << secs << " s" << (in_time ? "" : ", over budget") << ")" << std::endl;
  }
  for (int k : expected)
    if (!failed.count(k)) std::cout << "note: criterion " << k << " was expected to fail but passed" << std::endl;
  return failed == expected ? 0 : 1;
}
