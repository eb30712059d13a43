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

// Exact integer and rational helpers used for Krawtchouk identities and
// code amplitudes. Everything here is exact; conversion to floating point
// happens at the call sites that need it.

#include <boost/multiprecision/cpp_int.hpp>

namespace piswitch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// C(x, k) = x (x-1) ... (x-k+1) / k! for rational x.
Rational generalized_binomial(const Rational& x, long k);

// Falling factorial x (x-1) ... (x-k+1).
Rational falling_factorial(const Rational& x, long k);

// (2m-1)!! with (-1)!! = 1.
BigInt double_factorial_odd(long m);

double to_double(const Rational& q);
double to_double(const BigInt& z);

}  // namespace piswitch
