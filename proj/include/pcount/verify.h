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

#ifndef PCOUNT_VERIFY_H_
#define PCOUNT_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pcount {

// Self-check suites behind `pcount verify`. Each check compares two
// independent routes to the same exact value.

struct VerifyOptions {
  int max_n = 5;       // corpus: connected graphs with up to max_n vertices
  int max_k = 3;
  int trials = 200;    // random instances for the poly and matroid suites
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  void Check(bool ok, const std::string& what);
  bool ok() const { return failed == 0; }
};

SuiteReport VerifyPoly(const VerifyOptions& options);
SuiteReport VerifyMatroid(const VerifyOptions& options);
SuiteReport VerifyPipelines(const VerifyOptions& options);

}  // namespace pcount

#endif  // PCOUNT_VERIFY_H_
