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

// piswitch: batch front end for code construction, verification and sweeps.
// Exit codes: 0 pass, 1 verification failure, 2 usage, 3 resource/truncation.

#include <cstdlib>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "commands.hpp"
#include "piswitch/errors.hpp"

using namespace piswitch::cli;

namespace {

void add_code_options(CLI::App* cmd, CodeArgs& a) {
  cmd->add_option("--family", a.family, "pi7, pi11, bg, bgm, aab or bgm-nullspace");
  cmd->add_option("--code", a.spec, "code spec such as pi11 or bgm:4,3,2 (overrides --family)");
  cmd->add_option("--b", a.b);
  cmd->add_option("--g", a.g);
  cmd->add_option("--m", a.m, "m for bgm and aab; t for bgm-nullspace");
  cmd->add_option("--delta", a.delta);
}

void add_prep_options(CLI::App* cmd, PrepArgs& p) {
  cmd->add_option("--pulses,-P", p.pulses)->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", p.restarts)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", p.seed);
  cmd->add_option("--threads", p.threads, "0 uses every hardware thread");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-invariant code switching toolkit"};
  app.set_version_flag("--version", std::string(PISWITCH_VERSION));
  app.require_subcommand(1);

  Output out;
  if (const char* env = std::getenv("PISWITCH_OUT_DIR")) out.dir = env;
  app.add_option("--out-dir", out.dir, "write result documents here (default $PISWITCH_OUT_DIR)");

  int rc = kExitPass;
  CodeArgs code_args;
  PrepArgs prep_args;
  int t = 1;
  std::string code = "pi11", stabilizer = "steane", direction = "pi-control", circuit = "swap", input = "plus";
  std::string csv_path, config_path;
  double epsilon = 1e-6, cooperativity = std::numeric_limits<double>::infinity(), omega = 0.0;
  long max_den = 100000;
  int cutoff = 64;
  std::vector<double> grid = {1e4, 1e5, 1e6, 1e7, 1e8};
  std::vector<std::string> only;

  auto* codes = app.add_subcommand("codes", "construct or certify PI codes")->require_subcommand(1);
  auto* build = codes->add_subcommand("build", "print a code as JSON");
  add_code_options(build, code_args);
  build->callback([&] { rc = cmd_codes_build(code_args, out); });
  auto* certify = codes->add_subcommand("certify", "Knill-Laflamme certification up to t errors");
  add_code_options(certify, code_args);
  certify->add_option("--t", t)->check(CLI::PositiveNumber);
  certify->callback([&] { rc = cmd_codes_certify(code_args, t, out); });

  auto* tau = app.add_subcommand("tau60-approx", "rational angle approximating the super golden gate");
  tau->add_option("--epsilon", epsilon);
  tau->add_option("--max-denominator", max_den)->check(CLI::PositiveNumber);
  tau->callback([&] { rc = cmd_tau60(epsilon, max_den, out); });

  auto* gpg = app.add_subcommand("gpg", "geometric phase gate verifications")->require_subcommand(1);
  auto* vcz = gpg->add_subcommand("verify-cz", "three-pulse CZ identity and logical CZ");
  vcz->add_option("--code", code);
  vcz->add_option("--stabilizer", stabilizer, "steane or rep:n");
  vcz->callback([&] { rc = cmd_gpg_verify_cz(code, stabilizer, out); });
  auto* vcnot = gpg->add_subcommand("verify-cnot", "logical CNOT from conditional displacements");
  vcnot->add_option("--direction", direction)->check(CLI::IsMember({"pi-control", "stab-control"}));
  vcnot->add_option("--code", code);
  vcnot->add_option("--stabilizer", stabilizer);
  vcnot->add_option("--cutoff", cutoff)->check(CLI::Range(8, 4096));
  vcnot->callback([&] { rc = cmd_gpg_verify_cnot(direction, code, stabilizer, cutoff, out); });

  auto* tomo = app.add_subcommand("tomography", "logical channel tomography")->require_subcommand(1);
  auto* had = tomo->add_subcommand("hadamard", "noisy logical Hadamard process fidelity");
  had->add_option("--code", code);
  had->add_option("--cooperativity,-C", cooperativity)->required();
  add_prep_options(had, prep_args);
  had->callback([&] { rc = cmd_tomography_hadamard(code, cooperativity, prep_args, out); });

  auto* sw = app.add_subcommand("switch", "code switching")->require_subcommand(1);
  auto* run = sw->add_subcommand("run", "ideal logical-level switching");
  run->add_option("--code", code);
  run->add_option("--stabilizer", stabilizer);
  run->add_option("--omega", omega)->required();
  run->add_option("--circuit", circuit)->check(CLI::IsMember({"swap", "cz"}));
  run->add_option("--input", input);
  run->callback([&] { rc = cmd_switch_run(code, stabilizer, omega, circuit, input, out); });
  auto* table1 = sw->add_subcommand("table1", "gate-cost comparison table");
  table1->add_option("--csv", csv_path);
  table1->callback([&] { rc = cmd_switch_table1(csv_path, out); });

  auto* sweep = app.add_subcommand("sweep", "parameter sweeps")->require_subcommand(1);
  auto* fig2 = sweep->add_subcommand("fig2", "infidelity vs cooperativity, CSV and SVG");
  fig2->add_option("--code", code);
  fig2->add_option("--grid", grid, "cooperativities")->delimiter(',');
  add_prep_options(fig2, prep_args);
  fig2->callback([&] { rc = cmd_sweep_fig2(code, grid, prep_args, out); });

  auto* prep = app.add_subcommand("prep", "state preparation")->require_subcommand(1);
  auto* opt = prep->add_subcommand("optimize", "optimize a pulse sequence from a JSON config");
  opt->add_option("--config", config_path)->required();
  opt->callback([&] { rc = cmd_prep_optimize(config_path, out); });

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--only", only, "subset: codes kl lemma transversal cz cnot tau60 table1 switch");
  verify->callback([&] { rc = cmd_verify(only, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_out = app.exit(e);
    return e.get_exit_code() == 0 ? code_out : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const piswitch::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const piswitch::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const piswitch::TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return rc;
}
