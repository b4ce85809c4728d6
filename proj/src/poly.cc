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

#include "pcount/poly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pcount/errors.h"

namespace pcount {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  Normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  Normalize();
}

IntPoly IntPoly::Constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::Monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::OnePlusZPower(int e) {
  std::vector<BigInt> coeffs(e + 1);
  for (int i = 0; i <= e; ++i) coeffs[i] = Binomial(e, i);
  return IntPoly(std::move(coeffs));
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

IntPoly IntPoly::Truncated(int max_degree) const {
  if (max_degree >= degree()) return *this;
  if (max_degree < 0) return {};
  return IntPoly(std::vector<BigInt>(coeffs_.begin(),
                                     coeffs_.begin() + max_degree + 1));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  Normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  Normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (BigInt& c : coeffs_) c *= scalar;
  Normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return MultiplyTruncated(a, b, a.degree() + b.degree());
}

void IntPoly::Normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::ToString() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt c = coeffs_[i];
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i > 0) out << "z";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

IntPoly MultiplyTruncated(const IntPoly& a, const IntPoly& b,
                          int max_degree) {
  if (a.is_zero() || b.is_zero() || max_degree < 0) return {};
  const int top = std::min(max_degree, a.degree() + b.degree());
  std::vector<BigInt> out(top + 1);
  for (int i = 0; i <= a.degree() && i <= top; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (int j = 0; j <= b.degree() && i + j <= top; ++j) {
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return IntPoly(std::move(out));
}

BigInt Evaluate(const IntPoly& p, const BigInt& v) {
  BigInt acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * v + p.coeffs()[i];
  return acc;
}

BigInt Binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    // result holds C(n, i); the product below is divisible by i + 1.
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

namespace {

// p(z + c) by Horner's rule on the linear factor (z + c).
IntPoly Translate(const IntPoly& p, long c) {
  std::vector<BigInt> acc;
  for (int i = p.degree(); i >= 0; --i) {
    // acc <- acc * (z + c) + p_i
    acc.emplace_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j) {
      acc[j] = acc[j - 1] + acc[j] * c;
    }
    acc[0] = acc[0] * c + p.coeffs()[i];
  }
  return IntPoly(std::move(acc));
}

}  // namespace

IntPoly ShiftSub(const IntPoly& p) { return Translate(p, -1); }

IntPoly ShiftAdd(const IntPoly& p) { return Translate(p, 1); }

IntPoly DivideByPower(const IntPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  for (int i = 0; i < e; ++i) {
    if (p.coeff(i) != 0) {
      throw ArithmeticError("polynomial is not divisible by y^" +
                            std::to_string(e) + ": coefficient " +
                            std::to_string(i) + " is " + p.coeff(i).str());
    }
  }
  if (p.degree() < e) return {};
  return IntPoly(std::vector<BigInt>(p.coeffs().begin() + e, p.coeffs().end()));
}

IntPoly DivideByOnePlusZPower(const IntPoly& p, int e) {
  std::vector<BigInt> current = p.coeffs();
  for (int step = 0; step < e && !current.empty(); ++step) {
    // Synthetic division by (z + 1), from the top coefficient down.
    const std::size_t d = current.size() - 1;
    if (d == 0) {
      throw ArithmeticError("nonzero constant is not divisible by (1 + z)");
    }
    std::vector<BigInt> quotient(d);
    // q_{d-1} = c_d, q_{i-1} = c_i - q_i.
    quotient[d - 1] = current[d];
    for (std::size_t i = d - 1; i >= 1; --i) {
      quotient[i - 1] = current[i] - quotient[i];
    }
    if (current[0] - quotient[0] != 0) {
      throw ArithmeticError("polynomial is not divisible by (1 + z)^" +
                            std::to_string(e));
    }
    current = std::move(quotient);
  }
  return IntPoly(std::move(current));
}

std::vector<Rational> SolveExact(const RatSystem& system) {
  const std::size_t n = system.matrix.size();
  if (system.rhs.size() != n) {
    throw ArithmeticError("right-hand side size does not match the matrix");
  }
  for (const auto& row : system.matrix) {
    if (row.size() != n) throw ArithmeticError("matrix is not square");
  }
  std::vector<std::vector<Rational>> a = system.matrix;
  std::vector<Rational> b = system.rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ArithmeticError("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += system.matrix[r][j] * b[j];
    if (lhs != system.rhs[r]) {
      throw ArithmeticError("back-substitution check failed");
    }
  }
  return b;
}

int RationalRank(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(a.size());
       ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<BigInt> RequireIntegral(std::span<const Rational> values,
                                    const std::string& what) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!IsIntegral(values[i])) {
      throw ArithmeticError(what + ": entry " + std::to_string(i) +
                            " is not an integer (" + values[i].str() + ")");
    }
    out.push_back(Numerator(values[i]));
  }
  return out;
}

IntPoly Interpolate(std::span<const std::pair<BigInt, BigInt>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("duplicate interpolation node " +
                                    points[i].first.str());
      }
    }
  }
  RatSystem system;
  for (const auto& [node, value] : points) {
    std::vector<Rational> row(n);
    BigInt power = 1;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = Rational(power);
      power *= node;
    }
    system.matrix.push_back(std::move(row));
    system.rhs.emplace_back(value);
  }
  if (n == 0) return {};
  return IntPoly(RequireIntegral(SolveExact(system), "interpolation"));
}

PrefixReconstruction ReconstructFromPrefixDetailed(
    std::span<const BigInt> prefix, int full_degree, int divisibility) {
  if (prefix.empty()) throw std::invalid_argument("empty prefix");
  const int k = static_cast<int>(prefix.size()) - 1;
  if (divisibility < 0 || full_degree < divisibility ||
      full_degree - divisibility != k) {
    throw std::invalid_argument(
        "prefix reconstruction needs D >= Dp >= 0 and D - Dp = prefix size - 1");
  }
  // Row t: sum over i in [Dp, D] of f'_i * C(i, t) = f_t.
  RatSystem system;
  for (int t = 0; t <= k; ++t) {
    std::vector<Rational> row;
    for (int i = divisibility; i <= full_degree; ++i) {
      row.emplace_back(Binomial(i, t));
    }
    system.matrix.push_back(std::move(row));
    system.rhs.emplace_back(prefix[t]);
  }
  PrefixReconstruction out;
  out.full_degree = full_degree;
  out.divisibility = divisibility;
  out.prefix.assign(prefix.begin(), prefix.end());
  out.fprime = RequireIntegral(SolveExact(system), "prefix reconstruction");
  for (int j = 0; j <= k; ++j) {
    out.poly += IntPoly::OnePlusZPower(divisibility + j) * out.fprime[j];
  }
  for (int t = 0; t <= k; ++t) {
    if (out.poly.coeff(t) != prefix[t]) {
      throw ArithmeticError("reconstruction does not reproduce the prefix");
    }
  }
  return out;
}

IntPoly ReconstructFromPrefix(std::span<const BigInt> prefix, int full_degree,
                              int divisibility) {
  return ReconstructFromPrefixDetailed(prefix, full_degree, divisibility).poly;
}

}  // namespace pcount
