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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdp/element.hpp"
#include "sdp/gf4.hpp"

namespace sdp {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square matrix over GF(4) of dimension at most 16, with 2x2 block access.
///
/// Row r is packed into a 32-bit word, column c occupying bits 2c and 2c+1
/// (same code as FieldElement). A row vector in GF(4)^dim packs the same way,
/// and that packed value is the Point the matrix acts on: image(v) = v * M.
/// Hence dimension-d matrices act on the 4^d points 0 .. 4^d - 1, the zero
/// vector is always the fixed point 0, and the standard basis vector e_c is
/// the point 1 << 2c.
class Matrix {
 public:
  static constexpr int kMaxDim = 16;

  Matrix() = default;
  static Matrix zero(int dim);
  static Matrix identity(int dim);
  /// Row-major entries; throws std::invalid_argument on size mismatch.
  static Matrix from_entries(int dim, std::span<const FieldElement> entries);

  int dim() const { return dim_; }
  FieldElement at(int r, int c) const {
    return FieldElement::from_code(static_cast<std::uint8_t>((rows_[r] >> (2 * c)) & 3u));
  }
  void set(int r, int c, FieldElement x) {
    rows_[r] = (rows_[r] & ~(3u << (2 * c))) | (std::uint32_t{x.code()} << (2 * c));
  }
  std::uint32_t row(int r) const { return rows_[r]; }

  /// v * M for the packed row vector v.
  Point image(Point v) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const { return *this + other; }
  Matrix operator-() const { return *this; }
  Matrix scaled(FieldElement s) const;

  FieldElement determinant() const;
  std::optional<Matrix> try_inverse() const;
  /// Throws SingularMatrixError.
  Matrix inverse() const;
  bool is_identity() const;

  int block_count() const { return dim_ / 2; }
  Mat2 block(int i, int j) const;
  void set_block(int i, int j, const Mat2& m);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  explicit Matrix(int dim);

  std::array<std::uint32_t, kMaxDim> rows_{};
  std::uint8_t dim_ = 0;
};

inline Matrix identity_like(const Matrix& m) { return Matrix::identity(m.dim()); }
inline std::uint64_t domain_size(const Matrix& m) {
  return std::uint64_t{1} << (2 * m.dim());
}
/// First point of `prefer` moved by m, else the first moved basis vector.
std::optional<Point> first_moved_point(const Matrix& m, std::span<const Point> prefer = {});
std::size_t hash_value(const Matrix& m);

/// The basis vector e_c as a point.
constexpr Point basis_point(int c) { return Point{1} << (2 * c); }

/// Multiplies a packed GF(4) vector by a scalar.
std::uint32_t scale_packed(std::uint32_t v, FieldElement s);

// --- Block constructors (0-based block indices). ---

Matrix block_identity(int n);
/// Identity blocks on the diagonal and `a` at block (i, j), i != j.
Matrix elementary_block(int n, int i, int j, const Mat2& a);
/// n copies of `a` along the block diagonal.
Matrix block_diagonal(int n, const Mat2& a);
/// Row-major block list of length n*n.
Matrix from_blocks(int n, std::span<const Mat2> blocks);

bool is_block_upper_unitriangular(const Matrix& x);
/// Inverse of a block upper unitriangular matrix by block back-substitution,
/// V_ij = -sum_{i<k<=j} U_ik V_kj. For n = 3 this gives the familiar
/// upper-right block BC - D. Throws std::invalid_argument on other input.
Matrix unitriangular_block_inverse(const Matrix& x);
/// Matrix of the block direct sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Whitespace-separated 4-digit 2x2 blocks in row-major block order.
std::string to_literal(const Matrix& m);
/// Parses a block literal of the given (even) dimension.
Matrix parse_matrix_literal(std::string_view text, int dim);

/// Permutation images of the right action v -> vM on all 4^dim vectors.
std::vector<Point> action_images(const Matrix& m);

}  // namespace sdp
