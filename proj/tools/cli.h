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

#ifndef PCOUNT_TOOLS_CLI_H_
#define PCOUNT_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pcount/matroid.h"

namespace pcount::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kCapError = 3;
inline constexpr int kOracleInconsistent = 4;

struct RunConfig {
  std::string command;  // count | matroid | reduce | verify
  std::string action;   // subaction for matroid / reduce
  std::string input;    // path, or "-" for stdin
  std::string output;   // matroid files; stdout when empty
  std::string trace;    // reduce: where to write the trace JSON
  std::string problem;  // count
  std::string method = "auto";
  std::string param = "rank";
  std::string suite = "all";
  int k = -1;
  long long z = -1;
  int sigma = 40;
  std::uint64_t seed = 0;
  int max_n = 5;
  int trials = 200;
  bool json = false;
  ScanLimits limits;
};

// Runs one invocation; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pcount::cli

#endif  // PCOUNT_TOOLS_CLI_H_
