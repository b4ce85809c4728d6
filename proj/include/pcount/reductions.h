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

#ifndef PCOUNT_REDUCTIONS_H_
#define PCOUNT_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcount/bigint.h"
#include "pcount/graph.h"
#include "pcount/matroid.h"
#include "pcount/poly.h"

namespace pcount {

// Oracle-reduction pipelines. Each takes its oracle as a function value and
// records every query and intermediate quantity in a PipelineTrace, so the
// same code runs against exact counters in tests and against anything else
// a caller supplies.

using TraceValue =
    std::variant<BigInt, IntPoly, std::vector<BigInt>,
                 std::vector<std::vector<BigInt>>, std::string, bool>;

struct OracleCall {
  std::string query;
  // The parameter of the queried instance (tree size, number of forest
  // coefficients, matroid rank or nullity).
  int parameter = 0;
  TraceValue result;
};

struct PipelineTrace {
  std::string pipeline;
  std::vector<OracleCall> oracle_calls;
  std::vector<std::pair<std::string, TraceValue>> intermediates;

  void Record(std::string name, TraceValue value) {
    intermediates.emplace_back(std::move(name), std::move(value));
  }
  // nullptr when absent.
  const TraceValue* Find(const std::string& name) const;
  int MaxParameter() const;
};

struct PipelineResult {
  Count count;
  PipelineTrace trace;
};

using WeightedTreeOracle =
    std::function<Count(const ApexWeightedGraph& g, int k)>;
using TreeOracle = std::function<Count(const Multigraph& g, int k)>;
// First num_coeffs coefficients of the univariate forest polynomial.
using ForestPrefixOracle =
    std::function<IntPoly(const Multigraph& g, int num_coeffs)>;
using BaseCountOracle = std::function<Count(const LinearMatroid& m)>;

// Tree oracles answer by the matrix-tree route, so pipeline results are
// checked against the enumerating counters rather than against themselves.
WeightedTreeOracle ExactWeightedTreeOracle();
TreeOracle ExactTreeOracle();
ForestPrefixOracle ExactForestPrefixOracle();
BaseCountOracle ExactBaseCountOracle(const ScanLimits& limits = {});

// k-matchings from weighted apex tree sums. For x = 1..k and z = 0..2k the
// oracle is asked for WT_2k(G_{x,z}); Q_x(z) is interpolated and its z^k
// coefficient F_x (the fair trees) satisfies
//   F_x = sum_{g=1..k} alpha_g C(n + x - k - g, k - g),
// a nonsingular k x k system. alpha_k counts catchy trees with k catchy
// edges, 2^k per matching. Exactly k (2k + 1) oracle calls.
PipelineResult MatchingsViaWeightedTrees(const Multigraph& g, int k,
                                         const WeightedTreeOracle& oracle);

// The binomial system above: rows x = 1..k, columns g = 1..k.
std::vector<std::vector<BigInt>> FairTreeSystem(int n, int k);

struct WeightedTreeOptions {
  // Adds the weight-1 contribution of k-trees that avoid the apex. Only
  // meant to be switched off to show that the matching pipeline, which reads
  // the z^k coefficient, does not depend on it. Disabled, z = 0 gives 0
  // without any call.
  bool include_apex_avoiding = true;
};

// WT_k of an apex graph with apex weight z from a plain k-tree oracle. For
// z >= 1 the apex is replaced by z copies joined to a hub; inclusion-
// exclusion over the z hub edges (2^z calls at size k + z) counts the trees
// that contain every hub edge, which are in bijection with apex-touching
// k-trees weighted by z^(apex edges). One more call on the apex-deleted
// graph adds the apex-avoiding trees. For z = 0 that single call is the
// answer.
PipelineResult WeightedTreesViaTrees(const ApexWeightedGraph& g, int k,
                                     std::uint64_t z, const TreeOracle& oracle,
                                     const WeightedTreeOptions& options = {});

// WeightedTreesViaTrees packaged as an oracle for MatchingsViaWeightedTrees.
WeightedTreeOracle WeightedTreeOracleFromTrees(
    TreeOracle oracle, WeightedTreeOptions options = {});

// k-matchings from forest polynomial prefixes of thickened multigraphs.
// G' is g plus an apex; for a = 1..2k+1 the oracle returns the first 2k+1
// coefficients d(a)_t of the forest polynomial of G' with every base edge
// replaced by a parallel copies. Since d(a)_t = sum_i a^i c(i, t - i), each
// total degree t is a Vandermonde system in the nodes a = 1..t+1, giving the
// bivariate coefficients c(i, j), i + j <= 2k. Row k is the prefix of C_k(z),
// which is divisible by (1 + z)^(n-2k) and has degree n - k, so the prefix
// determines it. Then M_k = (-1)^k [C_k(y - 1) / y^(n-2k)](0).
PipelineResult MatchingsViaForestPrefix(const Multigraph& g, int k,
                                        const ForestPrefixOracle& oracle);

enum class BaseParameter { kRank, kNullity };

struct BasesPipelineOptions {
  BaseParameter param = BaseParameter::kRank;
  int sigma = 40;
  std::uint64_t seed = 0;
  // The truncation is checked exhaustively when it fits in these limits.
  ScanLimits verify_limits;
};

// k-forests from a base-count oracle: incidence matrix over F_2, normalize,
// output 0 if the rank is below k, k-truncate, and dualize for the nullity
// parameterization. The queried matroid has rank (or nullity) exactly k and
// its bases are the k-forests of g.
PipelineResult ForestsViaBases(const Multigraph& g, int k,
                               const BaseCountOracle& oracle,
                               const BasesPipelineOptions& options = {});

}  // namespace pcount

#endif  // PCOUNT_REDUCTIONS_H_
