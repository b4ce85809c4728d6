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

#include "pcount/gf2k.h"

#include <bit>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <wmmintrin.h>

#include "pcount/errors.h"

namespace pcount {
namespace {

using u128 = unsigned __int128;

int WideDegree(u128 v) {
  const auto high = static_cast<std::uint64_t>(v >> 64);
  if (high != 0) return 127 - std::countl_zero(high);
  return PolyDegree(static_cast<std::uint64_t>(v));
}

// x^degree = low (mod modulus), so the part above degree folds down by one
// carry-less product per round.
std::uint64_t ReduceBy(u128 wide, std::uint64_t modulus, int degree) {
  const std::uint64_t low = modulus ^ (std::uint64_t{1} << degree);
  const u128 mask = (u128{1} << degree) - 1;
  while (true) {
    const u128 high = wide >> degree;
    if (high == 0) return static_cast<std::uint64_t>(wide);
    wide &= mask;
    const auto high_lo = static_cast<std::uint64_t>(high);
    const auto high_hi = static_cast<std::uint64_t>(high >> 64);
    wide ^= ClMul(high_lo, low);
    if (high_hi != 0) wide ^= ClMul(high_hi, low) << 64;
  }
}

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus,
                     int degree) {
  return ReduceBy(ClMul(a, b), modulus, degree);
}

std::uint64_t PolyMod(std::uint64_t a, std::uint64_t b) {
  const int db = PolyDegree(b);
  for (int da = PolyDegree(a); da >= db; da = PolyDegree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

std::uint64_t PolyGcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = PolyMod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::vector<int> PrimeDivisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// x^(2^times) mod f
std::uint64_t FrobeniusOfX(std::uint64_t f, int degree, int times) {
  std::uint64_t h = ReduceBy(2, f, degree);
  for (int i = 0; i < times; ++i) h = MulMod(h, h, f, degree);
  return h;
}

}  // namespace

int PolyDegree(std::uint64_t poly) {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

namespace {

__attribute__((target("pclmul,sse2"))) u128 ClMulHardware(std::uint64_t a,
                                                          std::uint64_t b) {
  const __m128i x = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i y = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i p = _mm_clmulepi64_si128(x, y, 0);
  const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
  const auto hi =
      static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
  return (static_cast<u128>(hi) << 64) | lo;
}

const bool kHavePclmul = __builtin_cpu_supports("pclmul");

}  // namespace

unsigned __int128 ClMul(std::uint64_t a, std::uint64_t b) {
  if (kHavePclmul) return ClMulHardware(a, b);
  u128 result = 0;
  const u128 wide_b = b;
  while (a != 0) {
    result ^= wide_b << std::countr_zero(a);
    a &= a - 1;
  }
  return result;
}

bool IsIrreducible(std::uint64_t poly) {
  const int b = PolyDegree(poly);
  if (b < 1 || b > kMaxFieldDegree) return false;
  const std::uint64_t x = ReduceBy(2, poly, b);
  if (FrobeniusOfX(poly, b, b) != x) return false;
  for (int p : PrimeDivisors(b)) {
    const std::uint64_t h = FrobeniusOfX(poly, b, b / p);
    if (PolyGcd(poly, h ^ x) != 1) return false;
  }
  return true;
}

std::uint64_t FindIrreducible(int b) {
  if (b < 1 || b > kMaxFieldDegree) {
    throw std::invalid_argument("field degree must be in 1.." +
                                std::to_string(kMaxFieldDegree));
  }
  for (std::uint64_t candidate = std::uint64_t{1} << b;; ++candidate) {
    if (IsIrreducible(candidate)) return candidate;
  }
}

FieldSpec::FieldSpec() = default;

FieldSpec::FieldSpec(std::uint64_t modulus)
    : degree_(PolyDegree(modulus)), modulus_(modulus) {
  if (!IsIrreducible(modulus)) {
    throw std::invalid_argument("modulus 0x" + ToHex(modulus) +
                                " is not an irreducible of degree 1.." +
                                std::to_string(kMaxFieldDegree));
  }
}

FieldSpec FieldSpec::OfDegree(int b) { return FieldSpec(FindIrreducible(b)); }

double FieldSpec::size() const { return std::ldexp(1.0, degree_); }

FFElem FieldSpec::Reduce(unsigned __int128 wide) const {
  return {ReduceBy(wide, modulus_, degree_)};
}

FFElem FieldSpec::Mul(FFElem a, FFElem b) const {
  if (degree_ == 1) return {a.bits & b.bits};
  return Reduce(ClMul(a.bits, b.bits));
}

FFElem FieldSpec::Pow(FFElem a, std::uint64_t e) const {
  FFElem result{1};
  while (e != 0) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

FFElem FieldSpec::Inv(FFElem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (degree_ == 1) return a;
  // Extended Euclid: keep s * a = r (mod modulus).
  u128 r0 = modulus_, r1 = a.bits;
  u128 s0 = 0, s1 = 1;
  auto degree = [](u128 v) { return WideDegree(v); };
  while (r1 != 1) {
    u128 q = 0;
    u128 r = r0;
    const int d1 = degree(r1);
    for (int d = degree(r); d >= d1; d = degree(r)) {
      q ^= u128{1} << (d - d1);
      r ^= r1 << (d - d1);
    }
    u128 s = s0;
    for (u128 bits = q; bits != 0; bits &= bits - 1) {
      const int shift = static_cast<int>(
          bits >> 64 ? 64 + std::countr_zero(static_cast<std::uint64_t>(bits >> 64))
                     : std::countr_zero(static_cast<std::uint64_t>(bits)));
      s ^= s1 << shift;
    }
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  return {ReduceBy(s1, modulus_, degree_)};
}

FFMatrix::FFMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  data_.assign(field_.is_binary() ? rows * Words()
                                  : static_cast<std::size_t>(rows) * cols,
               0);
}

FFMatrix FFMatrix::Identity(FieldSpec field, int n) {
  FFMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, {1});
  return m;
}

FFMatrix FFMatrix::FromRows(
    FieldSpec field, const std::vector<std::vector<std::uint64_t>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  FFMatrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m.set(r, c, {rows[r][c]});
  }
  return m;
}

FFElem FFMatrix::at(int r, int c) const {
  if (field_.is_binary()) {
    return {(data_[r * Words() + c / 64] >> (c % 64)) & 1};
  }
  return {data_[static_cast<std::size_t>(r) * cols_ + c]};
}

void FFMatrix::set(int r, int c, FFElem value) {
  if (!field_.Contains(value)) {
    throw std::invalid_argument("entry 0x" + ToHex(value.bits) +
                                " is not a reduced field element");
  }
  if (field_.is_binary()) {
    std::uint64_t& word = data_[r * Words() + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    word = value.bits ? (word | bit) : (word & ~bit);
    return;
  }
  data_[static_cast<std::size_t>(r) * cols_ + c] = value.bits;
}

FFMatrix FFMatrix::SelectColumns(std::span<const int> cols) const {
  FFMatrix out(field_, rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= cols_) {
        throw std::invalid_argument("column index out of range");
      }
      out.set(r, static_cast<int>(j), at(r, cols[j]));
    }
  }
  return out;
}

FFMatrix FFMatrix::SelectRows(int count) const {
  FFMatrix out(field_, count, cols_);
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
  }
  return out;
}

FFMatrix FFMatrix::Transposed() const {
  FFMatrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  }
  return out;
}

bool FFMatrix::IsZeroRow(int r) const {
  for (int c = 0; c < cols_; ++c) {
    if (!at(r, c).is_zero()) return false;
  }
  return true;
}

void FFMatrix::AddScaledRow(int target, int source, FFElem factor) {
  if (factor.is_zero()) return;
  if (field_.is_binary()) {
    const std::size_t w = Words();
    for (std::size_t i = 0; i < w; ++i) {
      data_[target * w + i] ^= data_[source * w + i];
    }
    return;
  }
  const std::size_t t = static_cast<std::size_t>(target) * cols_;
  const std::size_t s = static_cast<std::size_t>(source) * cols_;
  for (int c = 0; c < cols_; ++c) {
    data_[t + c] ^= field_.Mul({data_[s + c]}, factor).bits;
  }
}

void FFMatrix::ScaleRow(int r, FFElem factor) {
  if (field_.is_binary()) {
    if (factor.is_zero()) {
      for (std::size_t i = 0; i < Words(); ++i) data_[r * Words() + i] = 0;
    }
    return;
  }
  const std::size_t base = static_cast<std::size_t>(r) * cols_;
  for (int c = 0; c < cols_; ++c) {
    data_[base + c] = field_.Mul({data_[base + c]}, factor).bits;
  }
}

void FFMatrix::SwapRows(int a, int b) {
  if (a == b) return;
  const std::size_t w = field_.is_binary() ? Words() : cols_;
  for (std::size_t i = 0; i < w; ++i) std::swap(data_[a * w + i], data_[b * w + i]);
}

FFMatrix Multiply(const FFMatrix& a, const FFMatrix& b) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument("matrix product across different fields");
  }
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  const FieldSpec& f = a.field();
  FFMatrix out(f, a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      FFElem acc{0};
      for (int i = 0; i < a.cols(); ++i) {
        acc = f.Add(acc, f.Mul(a.at(r, i), b.at(i, c)));
      }
      out.set(r, c, acc);
    }
  }
  return out;
}

RrefResult Rref(const FFMatrix& m) {
  RrefResult result{m, 0, {}};
  FFMatrix& a = result.matrix;
  const FieldSpec& f = a.field();
  for (int col = 0; col < a.cols() && result.rank < a.rows(); ++col) {
    int pivot = result.rank;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.SwapRows(pivot, result.rank);
    a.ScaleRow(result.rank, f.Inv(a.at(result.rank, col)));
    for (int r = 0; r < a.rows(); ++r) {
      if (r != result.rank) a.AddScaledRow(r, result.rank, a.at(r, col));
    }
    result.pivots.push_back(col);
    ++result.rank;
  }
  return result;
}

int Rank(const FFMatrix& m) { return Rref(m).rank; }

bool ColumnsIndependent(const FFMatrix& m, std::span<const int> cols) {
  ColumnBasis basis(m);
  for (int c : cols) {
    if (c < 0 || c >= m.cols()) {
      throw std::invalid_argument("column index out of range");
    }
    if (!basis.Push(c)) return false;
  }
  return true;
}

FFMatrix Embed(const FFMatrix& m, const FieldSpec& target) {
  if (!m.field().is_binary()) {
    throw std::invalid_argument("only F_2 matrices can be embedded");
  }
  FFMatrix out(target, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  }
  return out;
}

ColumnBasis::ColumnBasis(const FFMatrix& m)
    : m_(m),
      width_(m.field().is_binary()
                 ? (static_cast<std::size_t>(m.rows()) + 63) / 64
                 : static_cast<std::size_t>(m.rows())) {}

std::vector<std::uint64_t> ColumnBasis::Column(int col) const {
  std::vector<std::uint64_t> v(width_, 0);
  for (int r = 0; r < m_.rows(); ++r) {
    const std::uint64_t bits = m_.at(r, col).bits;
    if (m_.field().is_binary()) {
      v[r / 64] |= bits << (r % 64);
    } else {
      v[r] = bits;
    }
  }
  return v;
}

bool ColumnBasis::Push(int col) {
  std::vector<std::uint64_t> v = Column(col);
  const FieldSpec& f = m_.field();
  const bool binary = f.is_binary();
  auto entry = [&](const std::vector<std::uint64_t>& u, int row) {
    return binary ? (u[row / 64] >> (row % 64)) & 1 : u[row];
  };
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const std::uint64_t coeff = entry(v, pivots_[i]);
    if (coeff == 0) continue;
    const auto& basis = vectors_[i];
    if (binary) {
      for (std::size_t w = 0; w < width_; ++w) v[w] ^= basis[w];
    } else {
      for (std::size_t r = 0; r < width_; ++r) {
        v[r] ^= f.Mul({basis[r]}, {coeff}).bits;
      }
    }
  }
  int pivot = -1;
  for (int r = 0; r < m_.rows() && pivot < 0; ++r) {
    if (entry(v, r) != 0) pivot = r;
  }
  if (pivot < 0) return false;
  if (!binary) {
    const FFElem inv = f.Inv({v[pivot]});
    for (auto& x : v) x = f.Mul({x}, inv).bits;
  }
  vectors_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

void ColumnBasis::Pop() {
  vectors_.pop_back();
  pivots_.pop_back();
}

std::string ToHex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

std::string FormatMatrix(const FFMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.rows() << ' ' << m.cols() << " gf2^"
      << m.field().degree() << " mod " << ToHex(m.field().modulus()) << '\n';
  if (m.cols() == 0) return out.str();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << ToHex(m.at(r, c).bits);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::uint64_t ParseHex(const std::string& token) {
  std::string digits = token;
  if (digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits = digits.substr(2);
  }
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(digits, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size()) {
    throw ParseError("invalid hex value '" + token + "'");
  }
  return value;
}

int ParseDimension(const std::string& token) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0) {
    throw ParseError("invalid matrix dimension '" + token + "'");
  }
  return value;
}

bool NextContentLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

FFMatrix ParseMatrix(std::istream& in) {
  std::string line;
  if (!NextContentLine(in, line)) throw ParseError("empty matrix file");
  std::istringstream header(line);
  std::string keyword, rows_token, cols_token, field_token, mod_keyword,
      mod_token, extra;
  if (!(header >> keyword >> rows_token >> cols_token >> field_token >>
        mod_keyword >> mod_token) ||
      keyword != "matrix" || mod_keyword != "mod" || (header >> extra)) {
    throw ParseError(
        "expected 'matrix <rows> <cols> gf2^<b> mod <modulus>' header");
  }
  if (field_token.rfind("gf2^", 0) != 0) {
    throw ParseError("field must be written gf2^<b>");
  }
  const int rows = ParseDimension(rows_token);
  const int cols = ParseDimension(cols_token);
  const int b = ParseDimension(field_token.substr(4));
  const std::uint64_t modulus = ParseHex(mod_token);
  if (PolyDegree(modulus) != b) {
    throw ParseError("modulus degree does not match gf2^" +
                     std::to_string(b));
  }
  FieldSpec field;
  try {
    field = FieldSpec(modulus);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  FFMatrix m(field, rows, cols);
  if (cols == 0) return m;
  for (int r = 0; r < rows; ++r) {
    if (!NextContentLine(in, line)) {
      throw ParseError("matrix has fewer than " + std::to_string(rows) +
                       " rows");
    }
    std::istringstream fields(line);
    std::string token;
    int c = 0;
    while (fields >> token) {
      if (c == cols) {
        throw ParseError("row " + std::to_string(r) + " has too many entries");
      }
      const std::uint64_t value = ParseHex(token);
      if (!field.Contains({value})) {
        throw ParseError("entry '" + token + "' is not reduced modulo " +
                         mod_token);
      }
      m.set(r, c++, {value});
    }
    if (c != cols) {
      throw ParseError("row " + std::to_string(r) + " has " +
                       std::to_string(c) + " entries, expected " +
                       std::to_string(cols));
    }
  }
  return m;
}

FFMatrix ParseMatrix(const std::string& text) {
  std::istringstream in(text);
  return ParseMatrix(in);
}

}  // namespace pcount
