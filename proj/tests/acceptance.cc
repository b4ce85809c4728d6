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

// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "pcount/corpus.h"
#include "pcount/counters.h"
#include "pcount/errors.h"
#include "pcount/gf2k.h"
#include "pcount/graph.h"
#include "pcount/matroid.h"
#include "pcount/poly.h"
#include "pcount/reductions.h"

namespace pcount {
namespace {

constexpr int kMaxN = 6;

// Collects mismatches for one criterion.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  // Runs body and records any exception as a failure.
  void Run(const std::string& what, const std::function<bool()>& body) {
    try {
      Expect(body(), what);
    } catch (const std::exception& e) {
      Expect(false, what + " threw: " + e.what());
    }
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

std::string Label(const Multigraph& g) {
  std::string s = "n=" + std::to_string(g.num_vertices()) + " {";
  for (const Edge& e : g.edges()) {
    s += std::to_string(e.u) + std::to_string(e.v) + " ";
  }
  return s + "}";
}

// Criterion 1: each pipeline with exact oracles against ground truth.
void PipelineExactness(Tally& t) {
  const auto wt = ExactWeightedTreeOracle();
  const auto trees = ExactTreeOracle();
  const auto prefix = ExactForestPrefixOracle();
  const auto bases = ExactBaseCountOracle();
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const int n = g.num_vertices();
    const ApexWeightedGraph apexed = AddApex(g);
    for (int k = 1; k <= 3; ++k) {
      const std::string tag = Label(g) + " k=" + std::to_string(k);
      const Count matchings = CountKMatchings(g, k);
      if (n >= 2 * k) {
        t.Run(tag + " matchings-via-wtrees", [&] {
          return MatchingsViaWeightedTrees(g, k, wt).count == matchings;
        });
        t.Run(tag + " matchings-via-forest-prefix", [&] {
          return MatchingsViaForestPrefix(g, k, prefix).count == matchings;
        });
      }
      for (int z = 0; z <= k; ++z) {
        t.Run(tag + " z=" + std::to_string(z) + " wtrees-via-trees", [&] {
          return WeightedTreesViaTrees(apexed, k, z, trees).count ==
                 WeightedTreeSum(apexed, k, z);
        });
      }
      const Count forests = CountKForests(g, k);
      for (BaseParameter p : {BaseParameter::kRank, BaseParameter::kNullity}) {
        t.Run(tag + " forests-via-bases", [&] {
          BasesPipelineOptions options;
          options.param = p;
          return ForestsViaBases(g, k, bases, options).count == forests;
        });
      }
    }
  }
}

// Criterion 2: (-1)^k [C_k(y - 1) / y^(n-2k)](0) = M_k.
void MatchingIdentity(Tally& t) {
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const int n = g.num_vertices();
    for (int k = 1; k <= 3 && 2 * k <= n; ++k) {
      t.Run(Label(g) + " k=" + std::to_string(k), [&] {
        const IntPoly ck = CoefficientPolyCk(g, k);
        const IntPoly q = DivideByPower(ShiftSub(ck), n - 2 * k);
        const BigInt sign = k % 2 == 0 ? 1 : -1;
        return sign * Evaluate(q, 0) == CountKMatchings(g, k);
      });
    }
  }
}

// Criterion 3: prefix reconstruction round trip and the thickening identity.
void PrefixAndThickening(Tally& t) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> degree(0, 20);
  std::uniform_int_distribution<long long> coeff(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = degree(rng);
    const int k = std::min(d, static_cast<int>(rng() % 7));
    const int dp = d - k;
    std::vector<BigInt> c(k + 1);
    for (BigInt& v : c) v = coeff(rng);
    if (c[k] == 0) c[k] = 1;
    const IntPoly p = IntPoly(c) * IntPoly::OnePlusZPower(dp);
    t.Run("round trip D=" + std::to_string(d) + " Dp=" + std::to_string(dp),
          [&] {
            std::vector<BigInt> prefix;
            for (int i = 0; i <= k; ++i) prefix.push_back(p.coeff(i));
            const IntPoly q = ReconstructFromPrefix(prefix, d, dp);
            return q == p && DivideByOnePlusZPower(q, dp) ==
                                 IntPoly(c);
          });
  }

  // F(G'; a x, x) against the forest polynomial of G' with base edges
  // replaced by a parallel copies, degrees t <= 2k with k = 3.
  constexpr int kMaxT = 6;
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const ApexWeightedGraph apexed = AddApex(g);
    std::vector<EdgeClass> classes;
    for (int e = 0; e < apexed.graph.num_edges(); ++e) {
      classes.push_back(apexed.IsApexEdge(e) ? EdgeClass::kZ : EdgeClass::kX);
    }
    const BivarApexCoeffs c = BivariateApexCoeffs(g, kMaxT);
    for (int a = 1; a <= 7; ++a) {
      t.Run(Label(g) + " a=" + std::to_string(a), [&] {
        const IntPoly thick =
            ForestPolynomial(Thicken(apexed.graph, classes, a, 1).graph, kMaxT);
        for (int s = 0; s <= kMaxT; ++s) {
          BigInt expect = 0;
          for (int i = 0; i <= s; ++i) {
            expect += Pow(BigInt(a), i) * c.at(i, s - i);
          }
          if (thick.coeff(s) != expect) return false;
        }
        return true;
      });
    }
  }
}

// Criterion 4: the fair-tree system is nonsingular, alpha_k / 2^k = M_k.
void FairTreeSystemCriterion(Tally& t) {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; k <= 5; ++k) {
      t.Run("A nonsingular n=" + std::to_string(n) + " k=" + std::to_string(k),
            [&] {
              std::vector<std::vector<Rational>> a;
              for (const auto& row : FairTreeSystem(n, k)) {
                a.emplace_back(row.begin(), row.end());
              }
              return RationalRank(a) == k;
            });
    }
  }
  const auto wt = ExactWeightedTreeOracle();
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    for (int k = 1; k <= 3 && 2 * k <= g.num_vertices(); ++k) {
      t.Run(Label(g) + " alpha k=" + std::to_string(k), [&] {
        const PipelineResult r = MatchingsViaWeightedTrees(g, k, wt);
        const TraceValue* alpha = r.trace.Find("alpha");
        if (alpha == nullptr) return false;
        const BigInt ak = std::get<std::vector<BigInt>>(*alpha).at(k - 1);
        const BigInt two_k = Pow(BigInt(2), k);
        return ak % two_k == 0 && ak / two_k == CountKMatchings(g, k) &&
               r.trace.oracle_calls.size() ==
                   static_cast<std::size_t>(k * (2 * k + 1));
      });
    }
  }
}

// Criterion 5: 2^z + 1 calls, and composition with the correction disabled.
void WeightedTreeBudget(Tally& t) {
  const auto trees = ExactTreeOracle();
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const ApexWeightedGraph apexed = AddApex(g);
    for (int k = 1; k <= 3; ++k) {
      for (int z = 1; z <= k; ++z) {
        t.Run(Label(g) + " budget k=" + std::to_string(k) +
                  " z=" + std::to_string(z),
              [&] {
                const PipelineResult r =
                    WeightedTreesViaTrees(apexed, k, z, trees);
                return r.trace.oracle_calls.size() == (1u << z) + 1;
              });
      }
    }
  }
  WeightedTreeOptions off;
  off.include_apex_avoiding = false;
  const auto without = WeightedTreeOracleFromTrees(trees, off);
  const auto with = WeightedTreeOracleFromTrees(trees);
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const int n = g.num_vertices();
    for (int k = 1; k <= 2 && 2 * k <= n; ++k) {
      if (k == 2 && n > 5) continue;
      t.Run(Label(g) + " composed k=" + std::to_string(k), [&] {
        const Count m = CountKMatchings(g, k);
        return MatchingsViaWeightedTrees(g, k, without).count == m &&
               MatchingsViaWeightedTrees(g, k, with).count == m;
      });
    }
  }
}

std::vector<std::vector<int>> Complements(
    const std::vector<std::vector<int>>& bases, int m) {
  std::vector<std::vector<int>> out;
  for (const auto& b : bases) {
    std::vector<int> c;
    std::size_t i = 0;
    for (int e = 0; e < m; ++e) {
      if (i < b.size() && b[i] == e) {
        ++i;
      } else {
        c.push_back(e);
      }
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Criterion 6: normalize -> truncate -> (dualize) -> count bases.
void MatroidChain(Tally& t) {
  for (const Multigraph& g : ConnectedGraphsUpTo(kMaxN)) {
    const LinearMatroid normal = Normalize(FromIncidence(g));
    const int rank = MatroidRank(normal);
    for (int k = 1; k <= rank; ++k) {
      const Count forests = CountKForests(g, k);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        t.Run(Label(g) + " k=" + std::to_string(k) +
                  " seed=" + std::to_string(seed),
              [&] {
                const LinearMatroid tr = Truncate(normal, k, 40, seed);
                if (!VerifyTruncation(normal, tr, k)) return false;
                const LinearMatroid dual = Dualize(tr);
                return CountBases(tr, BaseCountMethod::kAuto) == forests &&
                       CountBases(dual, BaseCountMethod::kAuto) == forests;
              });
      }
      t.Run(Label(g) + " k=" + std::to_string(k) + " dual bases", [&] {
        const LinearMatroid tr = Truncate(normal, k, 40, 99);
        const LinearMatroid dual = Dualize(tr);
        const auto bases = EnumerateBases(tr);
        return EnumerateBases(dual) == Complements(bases, tr.size()) &&
               EnumerateBases(Dualize(dual)) == bases;
      });
    }
  }
}

// Criterion 7: distinct-column base count against brute force.
void FptBaseCountCriterion(Tally& t) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec field = FieldSpec::OfDegree(trial % 2 == 0 ? 1 : 2);
    const int r = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 12);
    FFMatrix rep(field, r, m);
    const std::uint64_t mask = (std::uint64_t{1} << field.degree()) - 1;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < m; ++j) rep.set(i, j, {rng() & mask});
    }
    const LinearMatroid mat = Normalize(LinearMatroid(rep));
    t.Run("random matroid " + std::to_string(trial), [&] {
      const FptBaseCount fpt = CountBasesFpt(mat);
      const int k = MatroidRank(mat);
      const BigInt s = BigInt(1) << field.degree();
      const BigInt bound = Binomial(Pow(s, k), k);
      return fpt.bases == CountBasesBrute(mat) &&
             BigInt(fpt.subsets_scanned) <= bound;
    });
  }
}

// Criterion 8: spanning trees of K_4 and K_5.
void CayleyCrossCheck(Tally& t) {
  const auto bases = ExactBaseCountOracle();
  for (int n : {4, 5}) {
    const Multigraph kn = CompleteGraph(n);
    const BigInt expect = Pow(BigInt(n), n - 2);
    t.Run("K_" + std::to_string(n) + " brute", [&] {
      return CountKTrees(kn, n - 1) == expect;
    });
    for (BaseParameter p : {BaseParameter::kRank, BaseParameter::kNullity}) {
      t.Run("K_" + std::to_string(n) + " via bases", [&] {
        BasesPipelineOptions options;
        options.param = p;
        return ForestsViaBases(kn, n - 1, bases, options).count == expect;
      });
    }
  }
}

}  // namespace
}  // namespace pcount

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    void (*run)(pcount::Tally&);
  };
  const Criterion criteria[] = {
      {"pipeline exactness on the corpus", pcount::PipelineExactness},
      {"matching identity from C_k", pcount::MatchingIdentity},
      {"prefix reconstruction and thickening", pcount::PrefixAndThickening},
      {"fair-tree system and alpha_k", pcount::FairTreeSystemCriterion},
      {"weighted-tree call budget and composition",
       pcount::WeightedTreeBudget},
      {"matroid chain", pcount::MatroidChain},
      {"distinct-column base count", pcount::FptBaseCountCriterion},
      {"spanning-tree closed form", pcount::CayleyCrossCheck},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    pcount::Tally tally;
    const auto start = Clock::now();
    c.run(tally);
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %d: %s  %s  (%ld checks, %ld failed, %.1fs)\n",
                index, tally.ok() ? "PASS" : "FAIL", c.name, tally.checks(),
                tally.failed(), secs);
    for (const std::string& f : tally.failures()) {
      std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    if (!tally.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
