// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCOUNT_ERRORS_H_
#define PCOUNT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pcount {

// Malformed graph, matrix or matroid text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or memory cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A k-truncation was requested for a matroid of rank below k.
class RankTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact arithmetic produced something that cannot happen for consistent
// input: a non-integral solution, a singular system, a failed divisibility.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the reduction pipelines when the values returned by an injected
// oracle are not consistent with any graph.
class OracleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcount

#endif  // PCOUNT_ERRORS_H_
