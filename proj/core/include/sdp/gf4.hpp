// Copyright 2026 The sdp Authors.
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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdp {

/// Element of GF(4) = {0, 1, a, a+1} with a^2 = a + 1.
///
/// The 2-bit code is the coordinate vector over the basis {1, a}: bit 0 is the
/// coefficient of 1 and bit 1 the coefficient of a. Codes 0/1/2/3 therefore
/// denote 0/1/a/a+1, addition is XOR and multiplication is a table lookup.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  static constexpr FieldElement from_code(std::uint8_t code) {
    if (code > 3) throw std::out_of_range("GF(4) code must be in 0..3");
    return FieldElement(code);
  }
  static constexpr FieldElement zero() { return FieldElement(0); }
  static constexpr FieldElement one() { return FieldElement(1); }
  static constexpr FieldElement alpha() { return FieldElement(2); }
  static constexpr FieldElement alpha_plus_one() { return FieldElement(3); }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(kAdd[a.code_][b.code_]);
  }
  // Characteristic 2: subtraction and negation coincide with addition and the
  // identity, but they are spelled out so formulas can be transcribed as written.
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) {
    return a + b;
  }
  constexpr FieldElement operator-() const { return *this; }
  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) {
    return FieldElement(kMul[a.code_][b.code_]);
  }
  constexpr FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
  constexpr FieldElement& operator*=(FieldElement b) { return *this = *this * b; }

  constexpr FieldElement inverse() const {
    if (code_ == 0) throw std::domain_error("inverse of zero in GF(4)");
    return FieldElement(kInv[code_]);
  }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

  static constexpr std::array<std::array<std::uint8_t, 4>, 4> kAdd = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<std::uint8_t, 4>, 4> kMul = {{
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  }};
  static constexpr std::array<std::uint8_t, 4> kInv = {0, 1, 3, 2};

 private:
  constexpr explicit FieldElement(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

inline constexpr std::array<FieldElement, 4> kFieldElements = {
    FieldElement::zero(), FieldElement::one(), FieldElement::alpha(),
    FieldElement::alpha_plus_one()};

std::string to_string(FieldElement x);

/// 2x2 matrix over GF(4), row-major.
struct Mat2 {
  std::array<FieldElement, 4> e{};

  static constexpr Mat2 zero() { return Mat2{}; }
  static constexpr Mat2 identity() {
    return Mat2{{FieldElement::one(), FieldElement::zero(), FieldElement::zero(),
                 FieldElement::one()}};
  }
  static constexpr Mat2 scalar(FieldElement a) {
    return Mat2{{a, FieldElement::zero(), FieldElement::zero(), a}};
  }
  static constexpr Mat2 of(FieldElement a, FieldElement b, FieldElement c,
                           FieldElement d) {
    return Mat2{{a, b, c, d}};
  }
  /// Builds a matrix from 2-bit codes, row-major.
  static constexpr Mat2 from_codes(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                                   std::uint8_t d) {
    return Mat2{{FieldElement::from_code(a), FieldElement::from_code(b),
                 FieldElement::from_code(c), FieldElement::from_code(d)}};
  }
  /// Index in 0..255 with entry (0,0) in the lowest two bits.
  static constexpr Mat2 from_index(unsigned index) {
    return from_codes(index & 3, (index >> 2) & 3, (index >> 4) & 3, (index >> 6) & 3);
  }
  constexpr unsigned index() const {
    return e[0].code() | (e[1].code() << 2) | (e[2].code() << 4) | (e[3].code() << 6);
  }

  constexpr FieldElement operator()(int r, int c) const { return e[2 * r + c]; }
  constexpr FieldElement& operator()(int r, int c) { return e[2 * r + c]; }

  constexpr FieldElement trace() const { return e[0] + e[3]; }
  constexpr FieldElement det() const { return e[0] * e[3] - e[1] * e[2]; }
  constexpr bool is_scalar() const {
    return e[1].is_zero() && e[2].is_zero() && e[0] == e[3];
  }
  constexpr bool is_zero() const { return index() == 0; }

  friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  constexpr Mat2 operator-() const {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = -e[i];
    return r;
  }
  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
  }
  friend constexpr Mat2 operator*(FieldElement s, const Mat2& a) {
    return Mat2{{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
  }

  /// Throws std::domain_error when singular.
  constexpr Mat2 inverse() const {
    const FieldElement inv_det = det().inverse();
    return Mat2{{inv_det * e[3], -inv_det * e[1], -inv_det * e[2], inv_det * e[0]}};
  }
  /// Conjugate a^{-1} * this * a.
  constexpr Mat2 conjugated_by(const Mat2& a) const { return a.inverse() * *this * a; }

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Four code digits, row-major, e.g. "1001" for the identity.
std::string to_literal(const Mat2& m);
/// Parses four digits in 0..3. Throws std::invalid_argument.
Mat2 parse_mat2(std::string_view text);

/// All 256 matrices in GF(4)^{2x2}, ordered by Mat2::index().
std::vector<Mat2> enumerate_all_mat2();
/// Trace-zero matrices, the set T.
std::vector<Mat2> enumerate_T();
/// SL(2,4), the determinant-one matrices.
std::vector<Mat2> enumerate_SL2();

/// The GF(4)-basis {I, E12, E21} of the trace-zero matrices.
std::array<Mat2, 3> trace_zero_basis();
/// The natural GF(4)-basis of GF(4)^{2x2}.
std::array<Mat2, 4> matrix_unit_basis();

/// Rank over GF(4) of a list of coordinate vectors (all of equal length),
/// by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(std::vector<std::vector<FieldElement>> rows);

/// Dimension of the GF(4)-span of `mats`, each read as a vector in GF(4)^4.
std::size_t span_dim(std::span<const Mat2> mats);

/// {-B + B^A : B in T, A in SL(2,4)}.
std::vector<Mat2> conjugation_differences();
/// {B C : B, C in T}.
std::vector<Mat2> trace_zero_products();

}  // namespace sdp
