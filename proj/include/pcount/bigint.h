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

#ifndef PCOUNT_BIGINT_H_
#define PCOUNT_BIGINT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace pcount {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exact counts are plain arbitrary-precision integers; never negative.
using Count = BigInt;

inline std::string ToDecimal(const BigInt& v) { return v.str(); }

inline bool IsIntegral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt Numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt Pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace pcount

#endif  // PCOUNT_BIGINT_H_
