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

#include <optional>
#include <string>
#include <vector>

#include "piswitch/dicke.hpp"
#include "piswitch/exact.hpp"

namespace piswitch {

enum class CodeFamily { PI7, BG, BGM, AABPlus, Custom };

std::string to_string(CodeFamily f);

// Family parameters; unused slots stay zero. BG/BGM use (b, g, m), AAB+ uses
// (g, m, delta).
struct CodeParams {
  long b = 0;
  long g = 0;
  long m = 0;
  long delta = 0;
};

struct PiCode {
  int n_qubits = 0;
  DickeState logical0;
  DickeState logical1;
  CodeFamily family = CodeFamily::Custom;
  CodeParams params;
  std::optional<int> claimed_distance;

  // Human-readable identity, e.g. "bgm(4,3,2)".
  std::string label() const;
  std::vector<int> support0(double tol = 1e-14) const;
  std::vector<int> support1(double tol = 1e-14) const;
};

// Validates orthogonality (1e-12) of the two codewords.
PiCode make_custom_code(const DickeState& logical0, const DickeState& logical1);

PiCode build_pi7();
PiCode build_bg(long b, long g);
// Same as build_bg(4, 3).
PiCode build_pi11();
PiCode build_bgm(long b, long g, long m);
// Generalized binomials are used when g does not divide n = 2gm + delta + 1.
PiCode build_aab_plus(long g, long m, long delta);
// Exact squared amplitudes of |0_{b,g,m}> at weights 2kb, k = 0..m.
std::vector<Rational> bgm_weights_squared(long b, long g, long m);

// Rows j = 1, 3, ..., 2t-1; columns k = 0..t; entries K^N_{2bk}(j) / C(N, 2bk)
// with N = 2bt + g.
std::vector<std::vector<Rational>> bgm_constraint_matrix(long b, long g, long t);

struct NullspaceResult {
  PiCode code;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> null_vector;  // normalized to unit sum
};

// Throws ConstructionError when the kernel is not one-dimensional or its
// generator has entries of both signs.
NullspaceResult build_bgm_nullspace(long b, long g, long t);

// Parses "pi7", "pi11", "bg:b,g", "bgm:b,g,m", "aab:g,m,delta".
PiCode parse_code_spec(const std::string& spec);

// <D_w| X^{(x)a} Y^{(x)b} Z^{(x)c} I^{(x)(N-a-b-c)} |D_v>.
cplx pauli_dicke_element(int n, int a, int b, int c, int w, int v);

struct PauliCount {
  int x = 0;
  int y = 0;
  int z = 0;
  int weight() const { return x + y + z; }
};

struct KlReport {
  std::string code_label;
  int max_weight_checked = 0;
  double orthogonality_residual = 0.0;
  double deformation_residual = 0.0;
  double tolerance = 1e-9;
  int representatives_checked = 0;
  bool distance_certified = false;  // distance >= 2t + 1
  // Worst offending representative when not certified, split as E^dagger F.
  std::optional<PauliCount> counterexample;
  std::string counterexample_e;
  std::string counterexample_f;
};

// Knill-Laflamme check over all Pauli pairs of weight <= t, reduced to one
// representative per (#X, #Y, #Z) of the product. Throws ResourceError when
// t or N exceed the enumeration budget.
KlReport kl_check(const PiCode& code, int t, double tol = 1e-9);

// Sum_k C(m,k) K^N_{2x-1}(2bk) (m - g/2b)_(m-k) (m + g/2b)_(k) with falling
// factorials and N = 2bm + g. Requires 1 <= x <= m.
Rational lemma_S(long b, long g, long m, long x);
// Same sum without the x <= m hypothesis; only needs 2x - 1 <= N.
Rational lemma_S_unchecked(long b, long g, long m, long x);

bool is_even_odd(const PiCode& code);

}  // namespace piswitch
