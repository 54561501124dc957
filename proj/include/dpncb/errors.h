// Copyright 2026 The dpncb Authors
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

#ifndef DPNCB_ERRORS_H_
#define DPNCB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpncb {

// Argument outside the mathematical domain of an operation (u outside
// (0,1), non-positive noise scale, reward outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown preset/policy names, invalid parameter combinations.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called in the wrong state (select past the horizon, observe for
// an arm that was not selected).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Arm or round index outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Traces with mismatched horizons passed to one aggregation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity violated a mathematical invariant (for example Nash
// regret below average regret). Always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dpncb

#endif  // DPNCB_ERRORS_H_
