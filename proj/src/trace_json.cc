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

#include "pcount/trace_json.h"

namespace pcount {
namespace {

nlohmann::ordered_json Decimals(const std::vector<BigInt>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const BigInt& v : values) out.push_back(v.str());
  return out;
}

struct ValueToJson {
  nlohmann::ordered_json operator()(const BigInt& v) const { return v.str(); }
  nlohmann::ordered_json operator()(const IntPoly& p) const {
    return Decimals(p.coeffs());
  }
  nlohmann::ordered_json operator()(const std::vector<BigInt>& v) const {
    return Decimals(v);
  }
  nlohmann::ordered_json operator()(
      const std::vector<std::vector<BigInt>>& rows) const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : rows) out.push_back(Decimals(row));
    return out;
  }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
};

}  // namespace

nlohmann::ordered_json TraceValueToJson(const TraceValue& value) {
  return std::visit(ValueToJson{}, value);
}

nlohmann::ordered_json TraceToJson(const PipelineTrace& trace) {
  nlohmann::ordered_json out;
  out["pipeline"] = trace.pipeline;
  out["oracle_calls"] = nlohmann::ordered_json::array();
  for (const OracleCall& call : trace.oracle_calls) {
    out["oracle_calls"].push_back({{"query", call.query},
                                   {"parameter", call.parameter},
                                   {"result", TraceValueToJson(call.result)}});
  }
  out["intermediates"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : trace.intermediates) {
    out["intermediates"][name] = TraceValueToJson(value);
  }
  return out;
}

}  // namespace pcount
