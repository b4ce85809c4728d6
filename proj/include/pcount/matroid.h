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

#ifndef PCOUNT_MATROID_H_
#define PCOUNT_MATROID_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcount/bigint.h"
#include "pcount/gf2k.h"
#include "pcount/graph.h"

namespace pcount {

// Guards for the exponential scans. Exceeding one throws CapExceeded.
struct ScanLimits {
  // Bound on the number of column subsets a scan may have to decide.
  std::uint64_t max_subsets = 10'000'000;
  // Bound on s^k, the number of possible distinct columns in the
  // distinct-column base count.
  std::uint64_t max_column_values = 10'000'000;
};

// A matroid given by a representation matrix. Column j represents the
// ground element ground()[j]; ground() is always a permutation of 0..m-1.
class LinearMatroid {
 public:
  LinearMatroid() = default;
  explicit LinearMatroid(FFMatrix rep);
  LinearMatroid(FFMatrix rep, std::vector<int> ground,
                std::optional<std::vector<int>> perm = std::nullopt);

  const FieldSpec& field() const { return rep_.field(); }
  const FFMatrix& rep() const { return rep_; }
  const std::vector<int>& ground() const { return ground_; }
  // Column order of the standard form [I | D] used by the last dualization.
  const std::optional<std::vector<int>>& perm() const { return perm_; }
  int size() const { return rep_.cols(); }

 private:
  FFMatrix rep_;
  std::vector<int> ground_;
  std::optional<std::vector<int>> perm_;
};

// Incidence matrix over F_2: column j has ones at the endpoints of edge j.
LinearMatroid FromIncidence(const Multigraph& g);

// Reduced row echelon form with zero rows removed.
LinearMatroid Normalize(const LinearMatroid& m);
bool IsNormalized(const LinearMatroid& m);

int MatroidRank(const LinearMatroid& m);
int Nullity(const LinearMatroid& m);

// Representation of the dual matroid over the same field: bring the matrix
// to standard form [I_r | D] and return [D^T | I_{m-r}] with columns placed
// back at their original positions, so ground elements keep their identity.
LinearMatroid Dualize(const LinearMatroid& m);

// Smallest b with 2^b >= 2^sigma * k * C(m, k). Throws CapExceeded above
// kMaxFieldDegree.
int TruncationFieldDegree(int num_columns, int k, int sigma);

// Randomized k-truncation: T * rep over F_{2^b} with T a k x r matrix of
// uniform entries drawn from a seeded mt19937_64. Every column subset of size
// at most k keeps its independence verdict except with probability at most
// 2^-sigma. Throws RankTooSmall when rank(m) < k.
LinearMatroid Truncate(const LinearMatroid& m, int k, int sigma,
                       std::uint64_t seed);

// True iff every column subset of size <= k has the same independence
// verdict in both matrices.
bool VerifyTruncation(const LinearMatroid& original,
                      const LinearMatroid& truncated, int k,
                      const ScanLimits& limits = {});

Count CountBasesBrute(const LinearMatroid& m, const ScanLimits& limits = {});

// All bases, each as a sorted list of ground labels; lexicographic order.
std::vector<std::vector<int>> EnumerateBases(const LinearMatroid& m,
                                             const ScanLimits& limits = {});

struct FptBaseCount {
  Count bases;
  int distinct_columns = 0;
  // k-subsets of distinct column values tested for independence.
  std::uint64_t subsets_scanned = 0;
};

// Base count for a rank-k representation over a field of size s: duplicate
// columns are collapsed into at most s^k distinct values with
// multiplicities, then every independent k-subset of distinct values
// contributes the product of its multiplicities.
FptBaseCount CountBasesFpt(const LinearMatroid& m,
                           const ScanLimits& limits = {});

enum class BaseCountMethod { kBrute, kFpt, kAuto };

// kAuto uses the distinct-column route when s^k fits the limits.
Count CountBases(const LinearMatroid& m, BaseCountMethod method,
                 const ScanLimits& limits = {});

// Matroid file: the matrix format followed by `ground <l_0> ... <l_{m-1}>`.
std::string FormatMatroid(const LinearMatroid& m);
LinearMatroid ParseMatroid(std::istream& in);
LinearMatroid ParseMatroid(const std::string& text);

}  // namespace pcount

#endif  // PCOUNT_MATROID_H_
