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

#ifndef PCOUNT_GF2K_H_
#define PCOUNT_GF2K_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pcount {

// Field elements are polynomial residues over F_2 packed into a word:
// bit i is the coefficient of x^i.
struct FFElem {
  std::uint64_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend bool operator==(FFElem, FFElem) = default;
};

// Extension degrees are limited so that products fit in 128 bits.
inline constexpr int kMaxFieldDegree = 63;

// True iff `poly` (bit pattern, leading bit = degree) is irreducible over
// F_2, by Rabin's test: x^(2^b) = x mod f and gcd(x^(2^(b/p)) - x, f) = 1
// for every prime p dividing b.
bool IsIrreducible(std::uint64_t poly);

// Smallest monic irreducible of degree b in the natural bit order.
// b = 1 gives x, b = 2 gives x^2+x+1, b = 3 gives x^3+x+1.
std::uint64_t FindIrreducible(int b);

// Carry-less product of two polynomials of degree < 64 over F_2.
unsigned __int128 ClMul(std::uint64_t a, std::uint64_t b);

// Degree of a bit-packed polynomial; -1 for zero.
int PolyDegree(std::uint64_t poly);

// F_{2^b} = F_2[x] / (modulus).
class FieldSpec {
 public:
  // F_2, modulus x.
  FieldSpec();
  // Throws std::invalid_argument unless modulus is irreducible of degree
  // 1..kMaxFieldDegree.
  explicit FieldSpec(std::uint64_t modulus);
  // Field of degree b with the FindIrreducible modulus.
  static FieldSpec OfDegree(int b);

  int degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_binary() const { return degree_ == 1; }
  // 2^b as a double, for bounds only.
  double size() const;

  FFElem Add(FFElem a, FFElem b) const { return {a.bits ^ b.bits}; }
  FFElem Mul(FFElem a, FFElem b) const;
  // Throws std::domain_error for zero.
  FFElem Inv(FFElem a) const;
  FFElem Pow(FFElem a, std::uint64_t e) const;
  bool Contains(FFElem a) const { return PolyDegree(a.bits) < degree_; }
  FFElem Reduce(unsigned __int128 wide) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  int degree_ = 1;
  std::uint64_t modulus_ = 2;
};

// Dense matrix over one FieldSpec. Over F_2 rows are packed 64 entries per
// word; over extensions each entry occupies a word.
class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(FieldSpec field, int rows, int cols);
  static FFMatrix Identity(FieldSpec field, int n);
  // Entries given row by row as raw residues.
  static FFMatrix FromRows(FieldSpec field,
                           const std::vector<std::vector<std::uint64_t>>& rows);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FFElem at(int r, int c) const;
  void set(int r, int c, FFElem value);

  FFMatrix SelectColumns(std::span<const int> cols) const;
  FFMatrix SelectRows(int count) const;  // the first `count` rows
  FFMatrix Transposed() const;
  bool IsZeroRow(int r) const;

  // this <- row r += factor * row s
  void AddScaledRow(int target, int source, FFElem factor);
  void ScaleRow(int r, FFElem factor);
  void SwapRows(int a, int b);

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  std::size_t Words() const { return (static_cast<std::size_t>(cols_) + 63) / 64; }

  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

FFMatrix Multiply(const FFMatrix& a, const FFMatrix& b);

struct RrefResult {
  FFMatrix matrix;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by row operations only, so every column
// dependency of the input survives unchanged.
RrefResult Rref(const FFMatrix& m);
int Rank(const FFMatrix& m);
bool ColumnsIndependent(const FFMatrix& m, std::span<const int> cols);

// Constant embedding of an F_2 matrix into an extension field.
FFMatrix Embed(const FFMatrix& m, const FieldSpec& target);

// Echelon basis of column vectors that grows and shrinks like a stack, for
// depth-first subset scans. Push reports whether the new column was
// independent of those already held; dependent columns are not stored and
// must not be popped.
class ColumnBasis {
 public:
  explicit ColumnBasis(const FFMatrix& m);

  bool Push(int col);
  void Pop();
  int size() const { return static_cast<int>(pivots_.size()); }

 private:
  std::vector<std::uint64_t> Column(int col) const;

  const FFMatrix& m_;
  std::size_t width_;  // words per stored vector
  std::vector<std::vector<std::uint64_t>> vectors_;
  std::vector<int> pivots_;
};

// Text format:
//   matrix <rows> <cols> gf2^<b> mod <modulus in hex>
//   one line per row, entries as hex residues
std::string FormatMatrix(const FFMatrix& m);
FFMatrix ParseMatrix(std::istream& in);
FFMatrix ParseMatrix(const std::string& text);
std::string ToHex(std::uint64_t v);

}  // namespace pcount

#endif  // PCOUNT_GF2K_H_
