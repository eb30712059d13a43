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

#pragma once

// Command implementations behind the piswitch CLI. Each returns the process
// exit code: 0 pass, 1 verification failure. Usage and resource problems are
// raised as exceptions and mapped in main().

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace piswitch::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string dir;  // empty: stdout only
  // Prints the document and, when dir is set, writes it to dir/name.
  void emit(const nlohmann::json& doc, const std::string& name) const;
  // Writes text to dir/name (dir defaults to ".") and returns the path.
  std::string write(const std::string& name, const std::string& text) const;
};

// Common envelope: {command, version, seed, config, result}.
nlohmann::json envelope(const std::string& command, const nlohmann::json& config, std::optional<std::uint64_t> seed,
                        const nlohmann::json& result);

struct CodeArgs {
  std::string family;  // pi7, pi11, bg, bgm, aab, bgm-nullspace
  std::string spec;    // alternative: parse_code_spec string
  long b = 0, g = 0, m = 0, delta = 0;
};

int cmd_codes_build(const CodeArgs& a, const Output& out);
int cmd_codes_certify(const CodeArgs& a, int t, const Output& out);
int cmd_tau60(double epsilon, long max_denominator, const Output& out);
int cmd_gpg_verify_cz(const std::string& code, const std::string& stabilizer, const Output& out);
int cmd_gpg_verify_cnot(const std::string& direction, const std::string& code, const std::string& stabilizer,
                        int cutoff, const Output& out);

struct PrepArgs {
  int pulses = 10;
  int restarts = 8;
  std::uint64_t seed = 1;
  int threads = 0;
};

int cmd_tomography_hadamard(const std::string& code, double cooperativity, const PrepArgs& p, const Output& out);
int cmd_switch_run(const std::string& code, const std::string& stabilizer, double omega, const std::string& circuit,
                   const std::string& input, const Output& out);
int cmd_switch_table1(const std::string& csv_path, const Output& out);
int cmd_sweep_fig2(const std::string& code, const std::vector<double>& grid, const PrepArgs& p, const Output& out);
int cmd_prep_optimize(const std::string& config_path, const Output& out);
int cmd_verify(const std::vector<std::string>& only, const Output& out);

}  // namespace piswitch::cli
