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

#include "pcount/matroid.h"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pcount/errors.h"
#include "pcount/poly.h"

namespace pcount {
namespace {

std::vector<int> IdentityLabels(int m) {
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  return labels;
}

void CheckSubsetBudget(const BigInt& subsets, const ScanLimits& limits,
                       const std::string& what) {
  if (subsets > limits.max_subsets) {
    throw CapExceeded(what + " needs " + subsets.str() +
                      " subset checks, above the cap of " +
                      std::to_string(limits.max_subsets));
  }
}

// Depth-first scan over r-subsets of columns in increasing order. Dependent
// prefixes are pruned, since every superset is dependent too.
class BaseScan {
 public:
  BaseScan(const FFMatrix& rep, int r) : rep_(rep), r_(r), basis_(rep) {}

  template <typename OnBase>
  void Run(OnBase&& on_base) {
    chosen_.clear();
    Extend(0, on_base);
  }

 private:
  template <typename OnBase>
  void Extend(int start, OnBase& on_base) {
    const int depth = static_cast<int>(chosen_.size());
    if (depth == r_) {
      on_base(chosen_);
      return;
    }
    for (int c = start; c + (r_ - depth) <= rep_.cols(); ++c) {
      if (!basis_.Push(c)) continue;
      chosen_.push_back(c);
      Extend(c + 1, on_base);
      chosen_.pop_back();
      basis_.Pop();
    }
  }

  const FFMatrix& rep_;
  const int r_;
  ColumnBasis basis_;
  std::vector<int> chosen_;
};

}  // namespace

LinearMatroid::LinearMatroid(FFMatrix rep)
    : LinearMatroid(rep, IdentityLabels(rep.cols())) {}

LinearMatroid::LinearMatroid(FFMatrix rep, std::vector<int> ground,
                             std::optional<std::vector<int>> perm)
    : rep_(std::move(rep)), ground_(std::move(ground)), perm_(std::move(perm)) {
  if (static_cast<int>(ground_.size()) != rep_.cols()) {
    throw std::invalid_argument("one ground label per column required");
  }
  std::vector<int> sorted = ground_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != IdentityLabels(rep_.cols())) {
    throw std::invalid_argument("ground labels must be a permutation of 0..m-1");
  }
}

LinearMatroid FromIncidence(const Multigraph& g) {
  FFMatrix rep(FieldSpec(), g.num_vertices(), g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    rep.set(g.edge(e).u, e, {1});
    rep.set(g.edge(e).v, e, {1});
  }
  return LinearMatroid(std::move(rep));
}

LinearMatroid Normalize(const LinearMatroid& m) {
  RrefResult rref = Rref(m.rep());
  return LinearMatroid(rref.matrix.SelectRows(rref.rank), m.ground(), m.perm());
}

bool IsNormalized(const LinearMatroid& m) {
  RrefResult rref = Rref(m.rep());
  return rref.rank == m.rep().rows() && rref.matrix == m.rep();
}

int MatroidRank(const LinearMatroid& m) { return Rank(m.rep()); }

int Nullity(const LinearMatroid& m) { return m.size() - MatroidRank(m); }

LinearMatroid Dualize(const LinearMatroid& m) {
  const RrefResult rref = Rref(m.rep());
  const FFMatrix& a = rref.matrix;
  const int r = rref.rank;
  const int cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : rref.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  // Standard form order: pivot columns (the identity block), then the rest.
  std::vector<int> perm = rref.pivots;
  perm.insert(perm.end(), free_cols.begin(), free_cols.end());

  // In characteristic 2, -D^T = D^T.
  FFMatrix dual(a.field(), cols - r, cols);
  for (int j = 0; j < cols - r; ++j) {
    for (int i = 0; i < r; ++i) {
      dual.set(j, rref.pivots[i], a.at(i, free_cols[j]));
    }
    dual.set(j, free_cols[j], {1});
  }
  return LinearMatroid(std::move(dual), m.ground(), std::move(perm));
}

int TruncationFieldDegree(int num_columns, int k, int sigma) {
  if (sigma < 0) throw std::invalid_argument("sigma must be non-negative");
  const BigInt target = Pow(BigInt(2), sigma) * k * Binomial(num_columns, k);
  int b = 1;
  while (Pow(BigInt(2), b) < target) {
    ++b;
    if (b > kMaxFieldDegree) {
      throw CapExceeded("truncation needs a field of degree above " +
                        std::to_string(kMaxFieldDegree) +
                        "; lower sigma or use a smaller instance");
    }
  }
  return b;
}

LinearMatroid Truncate(const LinearMatroid& m, int k, int sigma,
                       std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const LinearMatroid normal = IsNormalized(m) ? m : Normalize(m);
  const int r = normal.rep().rows();
  if (r < k) {
    throw RankTooSmall("cannot " + std::to_string(k) +
                       "-truncate a matroid of rank " + std::to_string(r));
  }
  if (!normal.field().is_binary()) {
    throw std::invalid_argument("truncation expects an F_2 representation");
  }
  const FieldSpec field = FieldSpec::OfDegree(
      TruncationFieldDegree(normal.size(), k, sigma));
  const std::uint64_t mask = (std::uint64_t{1} << field.degree()) - 1;
  std::mt19937_64 rng(seed);
  FFMatrix t(field, k, r);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) t.set(i, j, {rng() & mask});
  }
  return LinearMatroid(Multiply(t, Embed(normal.rep(), field)), m.ground());
}

bool VerifyTruncation(const LinearMatroid& original,
                      const LinearMatroid& truncated, int k,
                      const ScanLimits& limits) {
  const int m = original.size();
  if (truncated.size() != m) {
    throw std::invalid_argument("truncation changed the number of columns");
  }
  BigInt subsets = 0;
  for (int j = 0; j <= k && j <= m; ++j) subsets += Binomial(m, j);
  CheckSubsetBudget(subsets, limits, "truncation check");

  ColumnBasis before(original.rep());
  ColumnBasis after(truncated.rep());
  // Pushing onto both bases in lockstep; a subset dependent in both has only
  // dependent supersets, so the scan descends through independent sets only.
  auto scan = [&](auto&& self, int start, int depth) -> bool {
    if (depth == k) return true;
    for (int c = start; c < m; ++c) {
      const bool a = before.Push(c);
      const bool b = after.Push(c);
      if (a != b) {
        if (a) before.Pop();
        if (b) after.Pop();
        return false;
      }
      if (!a) continue;
      const bool ok = self(self, c + 1, depth + 1);
      before.Pop();
      after.Pop();
      if (!ok) return false;
    }
    return true;
  };
  return scan(scan, 0, 0);
}

Count CountBasesBrute(const LinearMatroid& m, const ScanLimits& limits) {
  const int r = MatroidRank(m);
  CheckSubsetBudget(Binomial(m.size(), r), limits, "base enumeration");
  std::uint64_t count = 0;
  BaseScan(m.rep(), r).Run([&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<int>> EnumerateBases(const LinearMatroid& m,
                                             const ScanLimits& limits) {
  const int r = MatroidRank(m);
  CheckSubsetBudget(Binomial(m.size(), r), limits, "base enumeration");
  std::vector<std::vector<int>> bases;
  BaseScan(m.rep(), r).Run([&](const std::vector<int>& cols) {
    std::vector<int> labels;
    for (int c : cols) labels.push_back(m.ground()[c]);
    std::sort(labels.begin(), labels.end());
    bases.push_back(std::move(labels));
  });
  std::sort(bases.begin(), bases.end());
  return bases;
}

FptBaseCount CountBasesFpt(const LinearMatroid& m, const ScanLimits& limits) {
  const LinearMatroid normal = IsNormalized(m) ? m : Normalize(m);
  const FFMatrix& rep = normal.rep();
  const int k = rep.rows();
  const int b = rep.field().degree();
  if (static_cast<long long>(b) * k >= 64 ||
      (std::uint64_t{1} << (b * k)) > limits.max_column_values) {
    throw CapExceeded("field too large for the distinct-column count: s^k = 2^" +
                      std::to_string(b * k));
  }

  std::map<std::vector<std::uint64_t>, std::uint64_t> multiplicity;
  for (int c = 0; c < rep.cols(); ++c) {
    std::vector<std::uint64_t> column(k);
    for (int r = 0; r < k; ++r) column[r] = rep.at(r, c).bits;
    ++multiplicity[column];
  }
  std::vector<std::uint64_t> weights;
  FFMatrix distinct(rep.field(), k, static_cast<int>(multiplicity.size()));
  for (const auto& [column, count] : multiplicity) {
    const int c = static_cast<int>(weights.size());
    for (int r = 0; r < k; ++r) distinct.set(r, c, {column[r]});
    weights.push_back(count);
  }

  FptBaseCount result;
  result.distinct_columns = distinct.cols();
  const int d = distinct.cols();
  if (k > d) return result;
  CheckSubsetBudget(Binomial(d, k), limits, "distinct-column base count");
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    ++result.subsets_scanned;
    if (ColumnsIndependent(distinct, subset)) {
      Count product = 1;
      for (int c : subset) product *= weights[c];
      result.bases += product;
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == d - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return result;
}

Count CountBases(const LinearMatroid& m, BaseCountMethod method,
                 const ScanLimits& limits) {
  switch (method) {
    case BaseCountMethod::kBrute:
      return CountBasesBrute(m, limits);
    case BaseCountMethod::kFpt:
      return CountBasesFpt(m, limits).bases;
    case BaseCountMethod::kAuto:
      break;
  }
  const int k = MatroidRank(m);
  const int b = m.field().degree();
  if (static_cast<long long>(b) * k < 64 &&
      (std::uint64_t{1} << (b * k)) <= limits.max_column_values) {
    return CountBasesFpt(m, limits).bases;
  }
  return CountBasesBrute(m, limits);
}

std::string FormatMatroid(const LinearMatroid& m) {
  std::ostringstream out;
  out << FormatMatrix(m.rep()) << "ground";
  for (int label : m.ground()) out << ' ' << label;
  out << '\n';
  return out.str();
}

LinearMatroid ParseMatroid(std::istream& in) {
  FFMatrix rep = ParseMatrix(in);
  std::vector<int> ground;
  bool have_ground = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword != "ground" || have_ground) {
      throw ParseError("unexpected line after matrix: '" + line + "'");
    }
    have_ground = true;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      int label = -1;
      try {
        label = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("invalid ground label '" + token + "'");
      }
      ground.push_back(label);
    }
  }
  if (!have_ground) ground = IdentityLabels(rep.cols());
  try {
    return LinearMatroid(std::move(rep), std::move(ground));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LinearMatroid ParseMatroid(const std::string& text) {
  std::istringstream in(text);
  return ParseMatroid(in);
}

}  // namespace pcount
