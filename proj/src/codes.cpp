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


#include "piswitch/codes.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "piswitch/errors.hpp"

namespace piswitch {

namespace {

CVector from_squares(int n, const std::vector<std::pair<int, Rational>>& entries) {
  CVector v = CVector::Zero(n + 1);
  for (const auto& [w, q] : entries) v(w) += std::sqrt(to_double(q));
  return v;
}

CVector reversed(const CVector& v) { return v.reverse(); }

std::optional<int> bgm_distance(long b, long g, long m) {
  const long t = std::min({m, (g - 1) / 2, (2 * b - g - 1) / 2});
  if (t < 1) return std::nullopt;
  return static_cast<int>(2 * t + 1);
}

void require_bg(long b, long g, const char* who) {
  if (g < 1 || b < 1 || 2 * b < g + 1) {
    throw DomainError(std::string(who) + ": require g >= 1 and 2b >= g + 1 (b=" + std::to_string(b) +
                      ", g=" + std::to_string(g) + ")");
  }
}

PiCode assemble(int n, CVector zero, CVector one, CodeFamily fam, CodeParams p,
                std::optional<int> d) {
  zero /= zero.norm();
  one /= one.norm();
  return PiCode{n, DickeState(n, std::move(zero)), DickeState(n, std::move(one)), fam, p, d};
}

}  // namespace

std::string to_string(CodeFamily f) {
  switch (f) {
    case CodeFamily::PI7: return "pi7";
    case CodeFamily::BG: return "bg";
    case CodeFamily::BGM: return "bgm";
    case CodeFamily::AABPlus: return "aab";
    case CodeFamily::Custom: return "custom";
  }
  return "custom";
}

std::string PiCode::label() const {
  std::ostringstream os;
  switch (family) {
    case CodeFamily::PI7: os << "pi7"; break;
    case CodeFamily::BG: os << "bg(" << params.b << "," << params.g << ")"; break;
    case CodeFamily::BGM: os << "bgm(" << params.b << "," << params.g << "," << params.m << ")"; break;
    case CodeFamily::AABPlus:
      os << "aab(" << params.g << "," << params.m << "," << params.delta << ")";
      break;
    case CodeFamily::Custom: os << "custom[" << n_qubits << "]"; break;
  }
  return os.str();
}

static std::vector<int> support_of(const CVector& v, double tol) {
  std::vector<int> s;
  for (int w = 0; w < v.size(); ++w)
    if (std::abs(v(w)) > tol) s.push_back(w);
  return s;
}

std::vector<int> PiCode::support0(double tol) const { return support_of(logical0.amplitudes(), tol); }
std::vector<int> PiCode::support1(double tol) const { return support_of(logical1.amplitudes(), tol); }

PiCode make_custom_code(const DickeState& logical0, const DickeState& logical1) {
  if (logical0.n_qubits() != logical1.n_qubits()) throw DomainError("custom code: size mismatch");
  if (std::abs(logical0.inner(logical1)) > 1e-12) throw DomainError("custom code: codewords not orthogonal");
  return PiCode{logical0.n_qubits(), logical0, logical1, CodeFamily::Custom, {}, std::nullopt};
}

PiCode build_pi7() {
  const int n = 7;
  CVector zero = CVector::Zero(n + 1), one = CVector::Zero(n + 1);
  zero(0) = std::sqrt(0.3);
  zero(5) = std::sqrt(0.7);
  one(2) = std::sqrt(0.7);
  one(7) = -std::sqrt(0.3);
  return PiCode{n, DickeState(n, zero), DickeState(n, one), CodeFamily::PI7, {}, 3};
}

PiCode build_bg(long b, long g) {
  require_bg(b, g, "build_bg");
  const int n = static_cast<int>(2 * b + g);
  const Rational lo(2 * b - g, 4 * b), hi(2 * b + g, 4 * b);
  CVector zero = from_squares(n, {{0, lo}, {static_cast<int>(2 * b), hi}});
  std::optional<int> d;
  if (g >= 3 && 2 * b - g >= 3) d = 3;
  return assemble(n, zero, reversed(zero), CodeFamily::BG, {b, g, 1, 0}, d);
}

PiCode build_pi11() { return build_bg(4, 3); }

std::vector<Rational> bgm_weights_squared(long b, long g, long m) {
  require_bg(b, g, "build_bgm");
  if (m < 0) throw DomainError("build_bgm: m must be >= 1");
  const Rational denom = Rational(BigInt(1) << (2 * m)) * Rational(double_factorial_odd(m));
  Rational bm = 1;
  for (long i = 0; i < m; ++i) bm *= b;
  std::vector<Rational> out;
  for (long k = 0; k <= m; ++k) {
    Rational gamma2 = 1 / bm;
    for (long i = k + 1; i <= m; ++i) gamma2 *= 2 * i * b - g;
    for (long j = m - k + 1; j <= m; ++j) gamma2 *= 2 * j * b + g;
    out.push_back(Rational(binomial(m, k)) * gamma2 / denom);
  }
  return out;
}

PiCode build_bgm(long b, long g, long m) {
  if (m < 1) throw DomainError("build_bgm: m must be >= 1");
  const auto sq = bgm_weights_squared(b, g, m);
  const int n = static_cast<int>(2 * b * m + g);
  std::vector<std::pair<int, Rational>> entries;
  for (long k = 0; k <= m; ++k) entries.emplace_back(static_cast<int>(2 * k * b), sq[k]);
  CVector zero = from_squares(n, entries);
  return assemble(n, zero, reversed(zero), CodeFamily::BGM, {b, g, m, 0}, bgm_distance(b, g, m));
}

PiCode build_aab_plus(long g, long m, long delta) {
  if (g < 1 || m < 1 || delta < 0) {
    throw DomainError("build_aab_plus: require g >= 1, m >= 1, delta >= 0");
  }
  const long n = 2 * g * m + delta + 1;
  const Rational n_over_g(n, g);
  const Rational gamma2 = generalized_binomial(Rational(n, 2 * g), m) * Rational(n - 2 * g * m, g * (m + 1));
  std::vector<std::pair<int, Rational>> e0, e1;
  for (long l = 0; l <= m; ++l) {
    const Rational denom = generalized_binomial(n_over_g - l, m + 1);
    if (denom <= 0) throw DomainError("build_aab_plus: non-positive binomial for these parameters");
    const Rational a = gamma2 * Rational(binomial(m, l)) / denom;
    const int low = static_cast<int>(g * l), high = static_cast<int>(n - g * l);
    if (l % 2 == 0) {
      e0.emplace_back(low, a);
      e1.emplace_back(high, a);
    } else {
      e0.emplace_back(high, a);
      e1.emplace_back(low, a);
    }
  }
  const int ni = static_cast<int>(n);
  return assemble(ni, from_squares(ni, e0), from_squares(ni, e1), CodeFamily::AABPlus, {0, g, m, delta},
                  std::nullopt);
}

std::vector<std::vector<Rational>> bgm_constraint_matrix(long b, long g, long t) {
  const long n = 2 * b * t + g;
  std::vector<std::vector<Rational>> rows;
  for (long i = 0; i < t; ++i) {
    const long j = 2 * i + 1;
    std::vector<Rational> row;
    for (long k = 0; k <= t; ++k) row.push_back(dicke_diagonal_overlap(n, 2 * b * k, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

NullspaceResult build_bgm_nullspace(long b, long g, long t) {
  require_bg(b, g, "build_bgm_nullspace");
  if (t < 0) throw DomainError("build_bgm_nullspace: t must be >= 0");
  if (g < 2 * t + 1 || 2 * b - g < 2 * t + 1) {
    throw DomainError("build_bgm_nullspace: require g >= 2t+1 and 2b-g >= 2t+1");
  }
  auto mat = bgm_constraint_matrix(b, g, t);
  const long cols = t + 1;

  // Reduced row echelon form over the rationals.
  auto r = mat;
  std::vector<long> pivot_col;
  long row = 0;
  for (long c = 0; c < cols && row < static_cast<long>(r.size()); ++c) {
    long p = row;
    while (p < static_cast<long>(r.size()) && r[p][c] == 0) ++p;
    if (p == static_cast<long>(r.size())) continue;
    std::swap(r[p], r[row]);
    const Rational piv = r[row][c];
    for (auto& x : r[row]) x /= piv;
    for (long i = 0; i < static_cast<long>(r.size()); ++i) {
      if (i == row || r[i][c] == 0) continue;
      const Rational f = r[i][c];
      for (long k = 0; k < cols; ++k) r[i][k] -= f * r[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<long> free_cols;
  for (long c = 0; c < cols; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_cols.push_back(c);
  if (free_cols.size() != 1) {
    throw ConstructionError("build_bgm_nullspace: kernel has dimension " + std::to_string(free_cols.size()) +
                            ", expected 1");
  }
  std::vector<Rational> y(cols, Rational(0));
  y[free_cols[0]] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = -r[i][free_cols[0]];

  // Sign fix: first nonzero entry positive.
  for (const auto& v : y) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& u : y) u = -u;
    break;
  }
  Rational total = 0;
  for (const auto& v : y) {
    if (v < 0) throw ConstructionError("build_bgm_nullspace: kernel vector has mixed signs");
    total += v;
  }
  for (auto& v : y) v /= total;

  const int n = static_cast<int>(2 * b * t + g);
  std::vector<std::pair<int, Rational>> entries;
  for (long k = 0; k <= t; ++k) entries.emplace_back(static_cast<int>(2 * k * b), y[k]);
  CVector zero = from_squares(n, entries);
  PiCode code = assemble(n, zero, reversed(zero), CodeFamily::BGM, {b, g, t, 0}, bgm_distance(b, g, t));
  return NullspaceResult{std::move(code), std::move(mat), std::move(y)};
}

PiCode parse_code_spec(const std::string& spec) {
  if (spec == "pi7") return build_pi7();
  if (spec == "pi11") return build_pi11();
  static const std::regex re(R"(^(bg|bgm|aab):(\d+),(\d+)(?:,(\d+))?$)");
  std::smatch mt;
  if (!std::regex_match(spec, mt, re)) throw DomainError("unrecognised code spec '" + spec + "'");
  const std::string fam = mt[1];
  const long p1 = std::stol(mt[2]), p2 = std::stol(mt[3]);
  const bool has3 = mt[4].matched;
  if (fam == "bg" && !has3) return build_bg(p1, p2);
  if (fam == "bgm" && has3) return build_bgm(p1, p2, std::stol(mt[4]));
  if (fam == "aab" && has3) return build_aab_plus(p1, p2, std::stol(mt[4]));
  throw DomainError("wrong parameter count in code spec '" + spec + "'");
}

bool is_even_odd(const PiCode& code) {
  for (int w : code.support0())
    if (w % 2) return false;
  for (int w : code.support1())
    if (w % 2 == 0) return false;
  return true;
}

Rational lemma_S_unchecked(long b, long g, long m, long x) {
  if (b < 1 || g < 1 || m < 1 || x < 1) throw DomainError("lemma_S: parameters must be positive");
  const long n = 2 * b * m + g;
  if (2 * x - 1 > n) throw DomainError("lemma_S: 2x-1 exceeds N");
  const Rational alpha = Rational(m) - Rational(g, 2 * b);
  const Rational beta = Rational(m) + Rational(g, 2 * b);
  Rational s = 0;
  for (long k = 0; k <= m; ++k) {
    s += Rational(binomial(m, k)) * Rational(krawtchouk({n, 2 * x - 1, 2 * b * k})) *
         falling_factorial(alpha, m - k) * falling_factorial(beta, k);
  }
  return s;
}

Rational lemma_S(long b, long g, long m, long x) {
  if (x > m) throw DomainError("lemma_S: hypothesis x <= m violated (use lemma_S_unchecked)");
  return lemma_S_unchecked(b, g, m, x);
}

}  // namespace piswitch
