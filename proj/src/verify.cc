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

#include "pcount/verify.h"

#include <algorithm>
#include <exception>
#include <random>

#include "pcount/corpus.h"
#include "pcount/counters.h"
#include "pcount/matroid.h"
#include "pcount/poly.h"
#include "pcount/reductions.h"

namespace pcount {
namespace {

constexpr std::size_t kMaxReportedFailures = 10;

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntPoly RandomPoly(std::mt19937_64& rng, int degree, int bound) {
  std::vector<BigInt> coeffs(degree + 1);
  for (auto& c : coeffs) c = Uniform(rng, -bound, bound);
  return IntPoly(std::move(coeffs));
}

template <typename Check>
void Guard(SuiteReport& report, const std::string& what, Check&& check) {
  try {
    report.Check(check(), what);
  } catch (const std::exception& e) {
    report.Check(false, what + " threw: " + e.what());
  }
}

std::vector<int> Complement(const std::vector<int>& set, int m) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e) {
    if (!std::binary_search(set.begin(), set.end(), e)) out.push_back(e);
  }
  return out;
}

}  // namespace

void SuiteReport::Check(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxReportedFailures) failures.push_back(what);
}

SuiteReport VerifyPoly(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "poly";
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::string tag = "trial " + std::to_string(trial);
    const int full = Uniform(rng, 0, 20);
    const int k = Uniform(rng, 0, std::min(6, full));
    const int divisibility = full - k;
    const IntPoly p = IntPoly::OnePlusZPower(divisibility) *
                      RandomPoly(rng, k, 50);
    Guard(report, tag + ": prefix reconstruction", [&] {
      std::vector<BigInt> prefix;
      for (int t = 0; t <= k; ++t) prefix.push_back(p.coeff(t));
      return ReconstructFromPrefix(prefix, full, divisibility) == p;
    });

    const IntPoly q = RandomPoly(rng, Uniform(rng, 0, 8), 100);
    Guard(report, tag + ": interpolate/evaluate", [&] {
      std::vector<std::pair<BigInt, BigInt>> points;
      for (int i = 0; i <= std::max(q.degree(), 0); ++i) {
        const BigInt node = Uniform(rng, -3, 3) + 7 * i;
        points.emplace_back(node, Evaluate(q, node));
      }
      const IntPoly back = Interpolate(points);
      for (const auto& [node, value] : points) {
        if (Evaluate(back, node) != value) return false;
      }
      return back == q;
    });
    Guard(report, tag + ": shift inverse",
          [&] { return ShiftAdd(ShiftSub(q)) == q; });
  }
  return report;
}

SuiteReport VerifyMatroid(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "matroid";
  std::mt19937_64 rng(options.seed);
  const FieldSpec f2;
  const FieldSpec f4 = FieldSpec::OfDegree(2);
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::string tag = "trial " + std::to_string(trial);
    const FieldSpec& field = (rng() & 1) ? f4 : f2;
    const int rows = Uniform(rng, 1, 5);
    const int cols = Uniform(rng, rows, 12);
    FFMatrix rep(field, rows, cols);
    const std::uint64_t mask = (std::uint64_t{1} << field.degree()) - 1;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) rep.set(r, c, {rng() & mask});
    }
    const LinearMatroid m(rep);
    Guard(report, tag + ": distinct-column count equals brute force", [&] {
      return CountBasesFpt(Normalize(m)).bases == CountBasesBrute(m);
    });
    Guard(report, tag + ": dual bases are complements", [&] {
      const auto bases = EnumerateBases(m);
      auto expected = std::vector<std::vector<int>>();
      for (const auto& b : bases) expected.push_back(Complement(b, cols));
      std::sort(expected.begin(), expected.end());
      const LinearMatroid dual = Dualize(Normalize(m));
      return EnumerateBases(dual) == expected &&
             Nullity(dual) == MatroidRank(m);
    });
    Guard(report, tag + ": double dual keeps the bases", [&] {
      return EnumerateBases(Dualize(Dualize(m))) == EnumerateBases(m);
    });
    if (field.is_binary()) {
      Guard(report, tag + ": random truncation", [&] {
        const LinearMatroid normal = Normalize(m);
        const int k = Uniform(rng, 0, normal.rep().rows());
        const LinearMatroid t = Truncate(normal, k, 40, rng());
        return t.rep().rows() == k && MatroidRank(t) == k &&
               VerifyTruncation(normal, t, k);
      });
    }
  }
  return report;
}

SuiteReport VerifyPipelines(const VerifyOptions& options) {
  SuiteReport report;
  report.name = "pipelines";
  const auto wt_oracle = ExactWeightedTreeOracle();
  const auto tree_oracle = ExactTreeOracle();
  const auto prefix_oracle = ExactForestPrefixOracle();
  const auto base_oracle = ExactBaseCountOracle();
  for (const Multigraph& g : ConnectedGraphsUpTo(options.max_n)) {
    const std::string name = FormatGraph(g);
    const int n = g.num_vertices();
    for (int k = 1; k <= options.max_k; ++k) {
      const std::string tag = "k=" + std::to_string(k) + " " + name;
      const Count matchings = CountKMatchings(g, k);
      if (n >= 2 * k) {
        Guard(report, tag + ": matchings via weighted trees", [&] {
          const auto r = MatchingsViaWeightedTrees(g, k, wt_oracle);
          return r.count == matchings && r.trace.MaxParameter() <= 2 * k &&
                 r.trace.oracle_calls.size() ==
                     static_cast<std::size_t>(k * (2 * k + 1));
        });
      }
      Guard(report, tag + ": matchings via forest prefix", [&] {
        const auto r = MatchingsViaForestPrefix(g, k, prefix_oracle);
        const std::size_t calls = n >= 2 * k ? 2 * k + 1 : 0;
        return r.count == matchings && r.trace.MaxParameter() <= 2 * k + 1 &&
               r.trace.oracle_calls.size() == calls;
      });
      const ApexWeightedGraph apexed = AddApex(g);
      for (int z = 0; z <= k; ++z) {
        Guard(report, tag + " z=" + std::to_string(z) +
                          ": weighted trees via trees", [&] {
          const auto r = WeightedTreesViaTrees(apexed, k, z, tree_oracle);
          const std::size_t calls = z == 0 ? 1 : (std::size_t{1} << z) + 1;
          return r.count == WeightedTreeSum(apexed, k, z) &&
                 r.trace.MaxParameter() <= 2 * k &&
                 r.trace.oracle_calls.size() == calls;
        });
      }
      for (BaseParameter param : {BaseParameter::kRank, BaseParameter::kNullity}) {
        Guard(report, tag + ": forests via bases", [&] {
          BasesPipelineOptions opts;
          opts.param = param;
          opts.seed = options.seed;
          const auto r = ForestsViaBases(g, k, base_oracle, opts);
          const auto* verified = r.trace.Find("truncation_verified");
          const bool verified_ok =
              verified == nullptr ||
              !std::holds_alternative<bool>(*verified) ||
              std::get<bool>(*verified);
          return r.count == CountKForests(g, k) && verified_ok &&
                 r.trace.MaxParameter() <= k;
        });
      }
    }
  }
  return report;
}

}  // namespace pcount
