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

#include <stdexcept>
#include <string>

namespace piswitch {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration or memory budget exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fock-space cutoff too small for the requested mode operation.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A required input property (even-odd code, prep quality, ...) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A constructive procedure found no admissible solution.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transversal operator does not act as a logical gate on the code.
class NotALogicalGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The mode did not return to vacuum after a closed phase-space loop.
class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace piswitch
