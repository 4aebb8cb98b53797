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

#include "sdp/matrix.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace sdp {
namespace {

constexpr std::uint32_t kLowBits = 0x55555555u;

inline std::uint32_t times_alpha(std::uint32_t v) {
  // (b0 + b1 a) * a = b1 + (b0 + b1) a, lane-wise.
  const std::uint32_t lo = v & kLowBits;
  const std::uint32_t hi = (v >> 1) & kLowBits;
  return hi | ((lo ^ hi) << 1);
}

void check_dim(int dim) {
  if (dim < 0 || dim > Matrix::kMaxDim) {
    throw std::invalid_argument("matrix dimension must be in 0..16");
  }
}

}  // namespace

std::uint32_t scale_packed(std::uint32_t v, FieldElement s) {
  switch (s.code()) {
    case 0:
      return 0;
    case 1:
      return v;
    case 2:
      return times_alpha(v);
    default:
      return v ^ times_alpha(v);
  }
}

Matrix::Matrix(int dim) : dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

Matrix Matrix::zero(int dim) { return Matrix(dim); }

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.rows_[i] = basis_point(i);
  return m;
}

Matrix Matrix::from_entries(int dim, std::span<const FieldElement> entries) {
  Matrix m(dim);
  if (entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument("entry count does not match dimension");
  }
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m.set(r, c, entries[r * dim + c]);
  }
  return m;
}

Point Matrix::image(Point v) const {
  std::uint32_t acc = 0;
  for (int j = 0; v != 0; ++j, v >>= 2) {
    switch (v & 3u) {
      case 0:
        break;
      case 1:
        acc ^= rows_[j];
        break;
      case 2:
        acc ^= times_alpha(rows_[j]);
        break;
      default:
        acc ^= rows_[j] ^ times_alpha(rows_[j]);
        break;
    }
  }
  return acc;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  std::array<std::array<std::uint32_t, 4>, kMaxDim> table;
  for (int k = 0; k < dim_; ++k) {
    const std::uint32_t r = other.rows_[k];
    const std::uint32_t ra = times_alpha(r);
    table[k] = {0u, r, ra, r ^ ra};
  }
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    std::uint32_t acc = 0;
    std::uint32_t v = rows_[i];
    for (int k = 0; v != 0; ++k, v >>= 2) acc ^= table[k][v & 3u];
    out.rows_[i] = acc;
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i) out.rows_[i] = rows_[i] ^ other.rows_[i];
  return out;
}

Matrix Matrix::scaled(FieldElement s) const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i) out.rows_[i] = scale_packed(rows_[i], s);
  return out;
}

FieldElement Matrix::determinant() const {
  // Row swaps do not change the sign in characteristic 2.
  std::array<std::uint32_t, kMaxDim> rows = rows_;
  FieldElement det = FieldElement::one();
  for (int c = 0; c < dim_; ++c) {
    int pivot = c;
    while (pivot < dim_ && ((rows[pivot] >> (2 * c)) & 3u) == 0) ++pivot;
    if (pivot == dim_) return FieldElement::zero();
    std::swap(rows[c], rows[pivot]);
    const auto p = FieldElement::from_code(static_cast<std::uint8_t>((rows[c] >> (2 * c)) & 3u));
    det *= p;
    const std::uint32_t normalized = scale_packed(rows[c], p.inverse());
    for (int r = c + 1; r < dim_; ++r) {
      const auto f = FieldElement::from_code(static_cast<std::uint8_t>((rows[r] >> (2 * c)) & 3u));
      if (!f.is_zero()) rows[r] ^= scale_packed(normalized, f);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::try_inverse() const {
  std::array<std::uint32_t, kMaxDim> a = rows_;
  Matrix inv = identity(dim_);
  auto& b = inv.rows_;
  for (int c = 0; c < dim_; ++c) {
    int pivot = c;
    while (pivot < dim_ && ((a[pivot] >> (2 * c)) & 3u) == 0) ++pivot;
    if (pivot == dim_) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    const auto p = FieldElement::from_code(static_cast<std::uint8_t>((a[c] >> (2 * c)) & 3u));
    const FieldElement pinv = p.inverse();
    a[c] = scale_packed(a[c], pinv);
    b[c] = scale_packed(b[c], pinv);
    for (int r = 0; r < dim_; ++r) {
      if (r == c) continue;
      const auto f = FieldElement::from_code(static_cast<std::uint8_t>((a[r] >> (2 * c)) & 3u));
      if (f.is_zero()) continue;
      a[r] ^= scale_packed(a[c], f);
      b[r] ^= scale_packed(b[c], f);
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw SingularMatrixError("matrix is singular");
  return *inv;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < dim_; ++i) {
    if (rows_[i] != basis_point(i)) return false;
  }
  return true;
}

Mat2 Matrix::block(int i, int j) const {
  return Mat2{{at(2 * i, 2 * j), at(2 * i, 2 * j + 1), at(2 * i + 1, 2 * j),
               at(2 * i + 1, 2 * j + 1)}};
}

void Matrix::set_block(int i, int j, const Mat2& m) {
  set(2 * i, 2 * j, m(0, 0));
  set(2 * i, 2 * j + 1, m(0, 1));
  set(2 * i + 1, 2 * j, m(1, 0));
  set(2 * i + 1, 2 * j + 1, m(1, 1));
}

std::optional<Point> first_moved_point(const Matrix& m, std::span<const Point> prefer) {
  for (Point p : prefer) {
    if (m.image(p) != p) return p;
  }
  for (int c = 0; c < m.dim(); ++c) {
    if (m.image(basis_point(c)) != basis_point(c)) return basis_point(c);
  }
  return std::nullopt;
}

std::size_t hash_value(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    h ^= m.row(i);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Matrix block_identity(int n) { return Matrix::identity(2 * n); }

Matrix elementary_block(int n, int i, int j, const Mat2& a) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("elementary block needs distinct indices in range");
  }
  Matrix m = block_identity(n);
  m.set_block(i, j, a);
  return m;
}

Matrix block_diagonal(int n, const Mat2& a) {
  Matrix m = Matrix::zero(2 * n);
  for (int i = 0; i < n; ++i) m.set_block(i, i, a);
  return m;
}

Matrix from_blocks(int n, std::span<const Mat2> blocks) {
  if (blocks.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("block count does not match block dimension");
  }
  Matrix m = Matrix::zero(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set_block(i, j, blocks[i * n + j]);
  }
  return m;
}

bool is_block_upper_unitriangular(const Matrix& x) {
  if (x.dim() % 2 != 0) return false;
  const int n = x.block_count();
  for (int i = 0; i < n; ++i) {
    if (x.block(i, i) != Mat2::identity()) return false;
    for (int j = 0; j < i; ++j) {
      if (!x.block(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix unitriangular_block_inverse(const Matrix& x) {
  if (!is_block_upper_unitriangular(x)) {
    throw std::invalid_argument("matrix is not block upper unitriangular");
  }
  const int n = x.block_count();
  Matrix v = block_identity(n);
  for (int gap = 1; gap < n; ++gap) {
    for (int i = 0; i + gap < n; ++i) {
      const int j = i + gap;
      Mat2 sum = Mat2::zero();
      for (int k = i + 1; k <= j; ++k) sum = sum + x.block(i, k) * v.block(k, j);
      v.set_block(i, j, -sum);
    }
  }
  return v;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  const int dim = a.dim() + b.dim();
  if (dim > Matrix::kMaxDim) throw std::invalid_argument("direct sum exceeds dimension 16");
  Matrix m = Matrix::zero(dim);
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) m.set(r, c, a.at(r, c));
  }
  for (int r = 0; r < b.dim(); ++r) {
    for (int c = 0; c < b.dim(); ++c) m.set(a.dim() + r, a.dim() + c, b.at(r, c));
  }
  return m;
}

std::string to_literal(const Matrix& m) {
  if (m.dim() % 2 != 0) throw std::invalid_argument("block literal needs an even dimension");
  std::string out;
  const int n = m.block_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!out.empty()) out += ' ';
      out += to_literal(m.block(i, j));
    }
  }
  return out;
}

Matrix parse_matrix_literal(std::string_view text, int dim) {
  if (dim % 2 != 0 || dim <= 0 || dim > Matrix::kMaxDim) {
    throw std::invalid_argument("block literal needs an even dimension in 2..16");
  }
  const int n = dim / 2;
  std::vector<Mat2> blocks;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    blocks.push_back(parse_mat2(text.substr(i, j - i)));
    i = j;
  }
  if (blocks.size() != static_cast<std::size_t>(n) * n) {
    std::ostringstream os;
    os << "expected " << n * n << " blocks for dimension " << dim << ", got "
       << blocks.size();
    throw std::invalid_argument(os.str());
  }
  return from_blocks(n, blocks);
}

std::vector<Point> action_images(const Matrix& m) {
  const std::uint64_t size = domain_size(m);
  std::vector<Point> images(size);
  for (std::uint64_t v = 0; v < size; ++v) images[v] = m.image(static_cast<Point>(v));
  return images;
}

}  // namespace sdp
