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

// JSON documents for codes and KL reports:
//   {family, params, n_qubits, logical0: [[w, re, im], ...], logical1: [...]}

#include <json.hpp>

#include "piswitch/codes.hpp"

namespace piswitch {

nlohmann::json code_to_json(const PiCode& code);
// Rebuilds family codes from their parameters; custom codes from amplitudes.
PiCode code_from_json(const nlohmann::json& doc);
nlohmann::json kl_report_to_json(const KlReport& rep);

}  // namespace piswitch
