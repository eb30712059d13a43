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


#include "piswitch/code_json.hpp"

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

nlohmann::json amplitudes_json(const DickeState& s) {
  auto arr = nlohmann::json::array();
  for (int w = 0; w <= s.n_qubits(); ++w) {
    const cplx a = s.amplitude(w);
    if (std::abs(a) > 1e-15) arr.push_back({w, a.real(), a.imag()});
  }
  return arr;
}

DickeState amplitudes_from_json(int n, const nlohmann::json& arr) {
  CVector v = CVector::Zero(n + 1);
  for (const auto& e : arr) {
    const int w = e.at(0).get<int>();
    if (w < 0 || w > n) throw DomainError("code JSON: weight out of range");
    v(w) = cplx(e.at(1).get<double>(), e.at(2).get<double>());
  }
  return DickeState(n, v);
}

}  // namespace

nlohmann::json code_to_json(const PiCode& code) {
  nlohmann::json params = nlohmann::json::object();
  switch (code.family) {
    case CodeFamily::BG: params = {{"b", code.params.b}, {"g", code.params.g}}; break;
    case CodeFamily::BGM:
      params = {{"b", code.params.b}, {"g", code.params.g}, {"m", code.params.m}};
      break;
    case CodeFamily::AABPlus:
      params = {{"g", code.params.g}, {"m", code.params.m}, {"delta", code.params.delta}};
      break;
    default: break;
  }
  nlohmann::json doc = {{"family", to_string(code.family)},
                        {"params", params},
                        {"n_qubits", code.n_qubits},
                        {"logical0", amplitudes_json(code.logical0)},
                        {"logical1", amplitudes_json(code.logical1)}};
  doc["claimed_distance"] = code.claimed_distance ? nlohmann::json(*code.claimed_distance) : nlohmann::json();
  return doc;
}

PiCode code_from_json(const nlohmann::json& doc) {
  const std::string fam = doc.at("family").get<std::string>();
  const auto& p = doc.contains("params") ? doc.at("params") : nlohmann::json::object();
  if (fam == "pi7") return build_pi7();
  if (fam == "bg") return build_bg(p.at("b").get<long>(), p.at("g").get<long>());
  if (fam == "bgm") return build_bgm(p.at("b").get<long>(), p.at("g").get<long>(), p.at("m").get<long>());
  if (fam == "aab") {
    return build_aab_plus(p.at("g").get<long>(), p.at("m").get<long>(), p.at("delta").get<long>());
  }
  if (fam == "custom") {
    const int n = doc.at("n_qubits").get<int>();
    return make_custom_code(amplitudes_from_json(n, doc.at("logical0")),
                            amplitudes_from_json(n, doc.at("logical1")));
  }
  throw DomainError("code JSON: unknown family '" + fam + "'");
}

nlohmann::json kl_report_to_json(const KlReport& rep) {
  nlohmann::json doc = {{"code", rep.code_label},
                        {"t", rep.max_weight_checked},
                        {"orthogonality_residual", rep.orthogonality_residual},
                        {"deformation_residual", rep.deformation_residual},
                        {"tolerance", rep.tolerance},
                        {"representatives_checked", rep.representatives_checked},
                        {"distance_certified", rep.distance_certified},
                        {"certified_distance_lower_bound",
                         rep.distance_certified ? 2 * rep.max_weight_checked + 1 : 1}};
  if (rep.counterexample) {
    doc["counterexample"] = {{"product_counts",
                              {{"x", rep.counterexample->x}, {"y", rep.counterexample->y},
                               {"z", rep.counterexample->z}}},
                             {"E", rep.counterexample_e},
                             {"F", rep.counterexample_f}};
  }
  return doc;
}

}  // namespace piswitch
