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

#ifndef PCOUNT_TRACE_JSON_H_
#define PCOUNT_TRACE_JSON_H_

#include <string>

#include "json.hpp"
#include "pcount/reductions.h"

namespace pcount {

// {"pipeline": ..., "oracle_calls": [{"query", "parameter", "result"}],
//  "intermediates": {name: value}}. Integers are decimal strings and
// polynomials are arrays of decimal-string coefficients, constant first.
nlohmann::ordered_json TraceToJson(const PipelineTrace& trace);
nlohmann::ordered_json TraceValueToJson(const TraceValue& value);

}  // namespace pcount

#endif  // PCOUNT_TRACE_JSON_H_
