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

#include "pcount/reductions.h"

#include <algorithm>
#include <stdexcept>

#include "pcount/counters.h"
#include "pcount/errors.h"

namespace pcount {
namespace {

std::string Describe(const Multigraph& g) {
  return "n=" + std::to_string(g.num_vertices()) +
         " m=" + std::to_string(g.num_edges());
}

// Turns an arithmetic failure inside a pipeline into a report about the
// oracle whose answers caused it.
template <typename Body>
auto Guarded(const std::string& pipeline, Body&& body) {
  try {
    return body();
  } catch (const ArithmeticError& e) {
    throw OracleInconsistency(pipeline + ": " + e.what());
  }
}

}  // namespace

const TraceValue* PipelineTrace::Find(const std::string& name) const {
  for (const auto& [key, value] : intermediates) {
    if (key == name) return &value;
  }
  return nullptr;
}

int PipelineTrace::MaxParameter() const {
  int best = 0;
  for (const OracleCall& call : oracle_calls) best = std::max(best, call.parameter);
  return best;
}

WeightedTreeOracle ExactWeightedTreeOracle() {
  return [](const ApexWeightedGraph& g, int k) {
    return WeightedTreeSumByMatrixTree(g, k, g.z);
  };
}

TreeOracle ExactTreeOracle() {
  return [](const Multigraph& g, int k) {
    return CountKTreesByMatrixTree(g, k);
  };
}

ForestPrefixOracle ExactForestPrefixOracle() {
  return [](const Multigraph& g, int num_coeffs) {
    return ForestPolynomial(g, num_coeffs - 1);
  };
}

BaseCountOracle ExactBaseCountOracle(const ScanLimits& limits) {
  return [limits](const LinearMatroid& m) {
    return CountBases(m, BaseCountMethod::kAuto, limits);
  };
}

std::vector<std::vector<BigInt>> FairTreeSystem(int n, int k) {
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
  for (int x = 1; x <= k; ++x) {
    for (int g = 1; g <= k; ++g) {
      a[x - 1][g - 1] = Binomial(BigInt(x + n - k - g), k - g);
    }
  }
  return a;
}

PipelineResult MatchingsViaWeightedTrees(const Multigraph& g, int k,
                                         const WeightedTreeOracle& oracle) {
  if (k < 1) throw std::invalid_argument("matchings pipeline needs k >= 1");
  PipelineResult out;
  PipelineTrace& trace = out.trace;
  trace.pipeline = "matchings-via-wtrees";
  const int n = g.num_vertices();
  const int tree_size = 2 * k;

  out.count = Guarded(trace.pipeline, [&]() -> Count {
    std::vector<BigInt> fair(k);
    for (int x = 1; x <= k; ++x) {
      std::vector<std::pair<BigInt, BigInt>> points;
      for (int z = 0; z <= tree_size; ++z) {
        const ApexWeightedGraph gxz = BuildGxz(g, x, z);
        Count value = oracle(gxz, tree_size);
        trace.oracle_calls.push_back(
            {"WT_" + std::to_string(tree_size) + "(G_{x=" + std::to_string(x) +
                 ",z=" + std::to_string(z) + "}) " + Describe(gxz.graph),
             tree_size, value});
        points.emplace_back(z, std::move(value));
      }
      std::vector<BigInt> values;
      for (const auto& p : points) values.push_back(p.second);
      trace.Record("P(x=" + std::to_string(x) + ")", values);
      const IntPoly q = Interpolate(points);
      trace.Record("Q_x(z) x=" + std::to_string(x), q);
      fair[x - 1] = q.coeff(k);
    }
    trace.Record("F_x", fair);

    const auto a = FairTreeSystem(n, k);
    trace.Record("A", a);
    RatSystem system;
    for (int x = 0; x < k; ++x) {
      system.matrix.emplace_back(a[x].begin(), a[x].end());
      system.rhs.emplace_back(fair[x]);
    }
    if (RationalRank(system.matrix) != k) {
      throw ArithmeticError("fair-tree system is rank deficient");
    }
    const std::vector<BigInt> alpha =
        RequireIntegral(SolveExact(system), "catchy-tree counts");
    trace.Record("alpha", alpha);

    const BigInt copies = Pow(BigInt(2), k);
    if (alpha[k - 1] % copies != 0) {
      throw ArithmeticError("alpha_k = " + alpha[k - 1].str() +
                            " is not divisible by 2^k");
    }
    const Count matchings = alpha[k - 1] / copies;
    if (matchings < 0) throw ArithmeticError("negative matching count");
    trace.Record("answer", matchings);
    return matchings;
  });
  return out;
}

PipelineResult WeightedTreesViaTrees(const ApexWeightedGraph& g, int k,
                                     std::uint64_t z, const TreeOracle& oracle,
                                     const WeightedTreeOptions& options) {
  if (k < 1) throw std::invalid_argument("weighted trees need k >= 1");
  if (z > static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("apex weight z = " + std::to_string(z) +
                                " exceeds k = " + std::to_string(k));
  }
  ValidateApex(g.graph, g.apex);
  PipelineResult out;
  PipelineTrace& trace = out.trace;
  trace.pipeline = "wtrees-via-trees";
  const Multigraph without_apex = DeleteVertex(g.graph, g.apex).graph;

  auto avoiding = [&]() {
    Count value = oracle(without_apex, k);
    trace.oracle_calls.push_back(
        {"T_" + std::to_string(k) + "(G - a) " + Describe(without_apex), k,
         value});
    trace.Record("apex_avoiding", value);
    return value;
  };

  if (z == 0) {
    out.count = options.include_apex_avoiding ? avoiding() : Count(0);
    trace.Record("answer", out.count);
    return out;
  }

  const HubGraph hub = BuildGPowZ(g.WithWeight(z));
  const int zi = static_cast<int>(z);
  const int size = k + zi;
  BigInt convenient = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << zi); ++mask) {
    std::vector<int> removed;
    for (int i = 0; i < zi; ++i) {
      if ((mask >> i) & 1) removed.push_back(hub.hub_edges[i]);
    }
    const Multigraph reduced = DeleteEdges(hub.graph, removed).graph;
    Count value = oracle(reduced, size);
    trace.oracle_calls.push_back(
        {"T_" + std::to_string(size) + "(G^z - J) |J|=" +
             std::to_string(removed.size()) + " " + Describe(reduced),
         size, value});
    if (removed.size() % 2 == 0) {
      convenient += value;
    } else {
      convenient -= value;
    }
  }
  trace.Record("convenient_trees", convenient);
  out.count = convenient;
  if (options.include_apex_avoiding) out.count += avoiding();
  trace.Record("answer", out.count);
  return out;
}

WeightedTreeOracle WeightedTreeOracleFromTrees(TreeOracle oracle,
                                               WeightedTreeOptions options) {
  return [oracle = std::move(oracle), options](const ApexWeightedGraph& g,
                                               int k) {
    return WeightedTreesViaTrees(g, k, g.z, oracle, options).count;
  };
}

PipelineResult MatchingsViaForestPrefix(const Multigraph& g, int k,
                                        const ForestPrefixOracle& oracle) {
  if (k < 1) throw std::invalid_argument("matchings pipeline needs k >= 1");
  PipelineResult out;
  PipelineTrace& trace = out.trace;
  trace.pipeline = "matchings-via-forest-prefix";
  const int n = g.num_vertices();
  if (n < 2 * k) {
    out.count = 0;
    trace.Record("answer", out.count);
    return out;
  }
  const int top = 2 * k;
  const int num_coeffs = top + 1;

  out.count = Guarded(trace.pipeline, [&]() -> Count {
    const ApexWeightedGraph apexed = AddApex(g);
    std::vector<EdgeClass> classes(apexed.graph.num_edges(), EdgeClass::kZ);
    for (int e = 0; e < g.num_edges(); ++e) classes[e] = EdgeClass::kX;

    // d[a - 1][t] = coefficient of x^t for the a-thickened graph.
    std::vector<std::vector<BigInt>> d;
    for (int a = 1; a <= num_coeffs; ++a) {
      const Multigraph thick = Thicken(apexed.graph, classes, a, 1).graph;
      const IntPoly prefix = oracle(thick, num_coeffs);
      trace.oracle_calls.push_back(
          {"F(G'(a=" + std::to_string(a) + ",1); x) first " +
               std::to_string(num_coeffs) + " coefficients " + Describe(thick),
           num_coeffs, prefix});
      std::vector<BigInt> row(num_coeffs);
      for (int t = 0; t < num_coeffs; ++t) row[t] = prefix.coeff(t);
      d.push_back(std::move(row));
    }
    trace.Record("d(a,1)", d);

    // c[t][i] = c(i, t - i)
    std::vector<std::vector<BigInt>> c(num_coeffs);
    for (int t = 0; t <= top; ++t) {
      std::vector<std::pair<BigInt, BigInt>> points;
      for (int a = 1; a <= t + 1; ++a) points.emplace_back(a, d[a - 1][t]);
      const IntPoly by_a = Interpolate(points);
      for (int i = 0; i <= t; ++i) c[t].push_back(by_a.coeff(i));
    }
    trace.Record("c(i,t-i) by t", c);

    std::vector<BigInt> prefix;
    for (int j = 0; j <= k; ++j) prefix.push_back(c[k + j][k]);
    trace.Record("C_k prefix", prefix);

    const int divisibility = n - 2 * k;
    const PrefixReconstruction rec =
        ReconstructFromPrefixDetailed(prefix, n - k, divisibility);
    trace.Record("f'", rec.fprime);
    trace.Record("C_k(z)", rec.poly);
    const IntPoly shifted = ShiftSub(rec.poly);
    trace.Record("C_k(y-1)", shifted);
    const IntPoly quotient = DivideByPower(shifted, divisibility);
    trace.Record("C_k(y-1)/y^(n-2k)", quotient);
    Count matchings = Evaluate(quotient, 0);
    if (k % 2 == 1) matchings = -matchings;
    if (matchings < 0) {
      throw ArithmeticError("negative matching count " + matchings.str());
    }
    trace.Record("answer", matchings);
    return matchings;
  });
  return out;
}

PipelineResult ForestsViaBases(const Multigraph& g, int k,
                               const BaseCountOracle& oracle,
                               const BasesPipelineOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  PipelineResult out;
  PipelineTrace& trace = out.trace;
  trace.pipeline = "forests-via-bases";
  const bool nullity = options.param == BaseParameter::kNullity;
  trace.Record("param", std::string(nullity ? "nullity" : "rank"));
  trace.Record("sigma", BigInt(options.sigma));
  trace.Record("seed", BigInt(options.seed));

  const LinearMatroid incidence = FromIncidence(g);
  const LinearMatroid reduced = Normalize(incidence);
  const int r = reduced.rep().rows();
  trace.Record("rank", BigInt(r));
  if (r < k) {
    out.count = 0;
    trace.Record("answer", out.count);
    return out;
  }

  const LinearMatroid truncated =
      Truncate(reduced, k, options.sigma, options.seed);
  trace.Record("field_degree", BigInt(truncated.field().degree()));
  try {
    trace.Record("truncation_verified",
                 VerifyTruncation(reduced, truncated, k, options.verify_limits));
  } catch (const CapExceeded&) {
    trace.Record("truncation_verified", std::string("skipped"));
  }

  const LinearMatroid queried = nullity ? Dualize(truncated) : truncated;
  const int parameter = nullity ? Nullity(queried) : MatroidRank(queried);
  out.count = oracle(queried);
  trace.oracle_calls.push_back(
      {std::string("bases of ") + (nullity ? "dual " : "") + "truncation (" +
           std::to_string(queried.rep().rows()) + "x" +
           std::to_string(queried.size()) + " over gf2^" +
           std::to_string(queried.field().degree()) + ")",
       parameter, out.count});
  trace.Record("answer", out.count);
  return out;
}

}  // namespace pcount
