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

#ifndef PCOUNT_POLY_H_
#define PCOUNT_POLY_H_

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcount/bigint.h"

namespace pcount {

// Univariate polynomial with arbitrary-precision integer coefficients,
// coefficient i multiplying z^i. Trailing zeros are always stripped, so the
// zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly Constant(const BigInt& c);
  static IntPoly Monomial(const BigInt& c, int degree);
  // (1 + z)^e
  static IntPoly OnePlusZPower(int e);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of z^i; zero beyond the degree.
  BigInt coeff(int i) const;

  // Keeps only the coefficients of z^0..z^max_degree.
  IntPoly Truncated(int max_degree) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string ToString() const;
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.ToString();
  }

 private:
  void Normalize();
  std::vector<BigInt> coeffs_;
};

// Product of two polynomials truncated to degree `max_degree`.
IntPoly MultiplyTruncated(const IntPoly& a, const IntPoly& b, int max_degree);

BigInt Evaluate(const IntPoly& p, const BigInt& v);

// Generalized binomial coefficient n (n-1) ... (n-k+1) / k!, valid for any
// integer n, so it is zero for 0 <= n < k and a polynomial in n of degree k.
BigInt Binomial(const BigInt& n, int k);

// Substitutes z -> y - 1 (exact Taylor shift).
IntPoly ShiftSub(const IntPoly& p);
// Substitutes y -> z + 1, the inverse of ShiftSub.
IntPoly ShiftAdd(const IntPoly& p);

// Divides by y^e. Throws ArithmeticError if any of the coefficients of
// y^0..y^{e-1} is nonzero.
IntPoly DivideByPower(const IntPoly& p, int e);

// Exact quotient by (1 + z)^e; throws ArithmeticError on a nonzero remainder.
IntPoly DivideByOnePlusZPower(const IntPoly& p, int e);

// Dense square system A x = b over the rationals.
struct RatSystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
};

// Gauss-Jordan elimination with the answer checked by substituting it back.
// Throws ArithmeticError for singular or non-square systems.
std::vector<Rational> SolveExact(const RatSystem& system);

// Rank over the rationals, for any rectangular matrix.
int RationalRank(std::vector<std::vector<Rational>> matrix);

// Rationals that must be integers; throws ArithmeticError otherwise.
std::vector<BigInt> RequireIntegral(std::span<const Rational> values,
                                    const std::string& what);

// The unique polynomial of degree < points.size() through the given
// (node, value) pairs, solved over the rationals. Throws std::invalid_argument
// on duplicate nodes and ArithmeticError if a coefficient is not an integer.
IntPoly Interpolate(std::span<const std::pair<BigInt, BigInt>> points);

// Reconstruction of a polynomial of degree <= D that is divisible by
// (1 + z)^Dp from its first D - Dp + 1 coefficients. The solved coordinates
// in the basis {(1 + z)^i : Dp <= i <= D} are kept for inspection.
struct PrefixReconstruction {
  int full_degree = 0;          // D
  int divisibility = 0;         // Dp
  std::vector<BigInt> prefix;   // f_0..f_k with k = D - Dp
  std::vector<BigInt> fprime;   // f'_Dp..f'_D
  IntPoly poly;
};

PrefixReconstruction ReconstructFromPrefixDetailed(
    std::span<const BigInt> prefix, int full_degree, int divisibility);

IntPoly ReconstructFromPrefix(std::span<const BigInt> prefix, int full_degree,
                              int divisibility);

}  // namespace pcount

#endif  // PCOUNT_POLY_H_
