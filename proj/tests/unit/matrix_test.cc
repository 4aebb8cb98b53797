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

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace sdp {
namespace {

using Entries = std::vector<std::vector<FieldElement>>;

Entries entries(const Matrix& m) {
  Entries e(m.dim(), std::vector<FieldElement>(m.dim()));
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) e[r][c] = m.at(r, c);
  }
  return e;
}

Entries naive_product(const Entries& a, const Entries& b) {
  const std::size_t n = a.size();
  Entries out(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Cofactor expansion along the first row.
FieldElement naive_det(const Entries& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  FieldElement out;
  for (std::size_t c = 0; c < n; ++c) {
    Entries minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<FieldElement> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    out += a[0][c] * naive_det(minor);  // signs vanish in characteristic 2
  }
  return out;
}

Matrix random_matrix(int dim, std::mt19937& rng) {
  std::vector<FieldElement> e;
  for (int i = 0; i < dim * dim; ++i) e.push_back(FieldElement::from_code(static_cast<std::uint8_t>(rng() % 4)));
  return Matrix::from_entries(dim, e);
}

std::vector<FieldElement> unpack(Point v, int dim) {
  std::vector<FieldElement> out;
  for (int c = 0; c < dim; ++c) out.push_back(FieldElement::from_code(static_cast<std::uint8_t>((v >> (2 * c)) & 3)));
  return out;
}

TEST(MatrixTest, ProductMatchesNaiveProduct) {
  std::mt19937 rng(7);
  for (int dim : {1, 2, 3, 5, 8, 16}) {
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(dim, rng), b = random_matrix(dim, rng);
      EXPECT_EQ(entries(a * b), naive_product(entries(a), entries(b)));
    }
  }
}

TEST(MatrixTest, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int dim : {1, 2, 3, 4, 5}) {
    for (int t = 0; t < 30; ++t) {
      const Matrix a = random_matrix(dim, rng);
      EXPECT_EQ(a.determinant(), naive_det(entries(a)));
    }
  }
}

TEST(MatrixTest, InverseOfInvertibleMatrices) {
  std::mt19937 rng(3);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    const Matrix a = random_matrix(4, rng);
    const auto inv = a.try_inverse();
    EXPECT_EQ(inv.has_value(), !a.determinant().is_zero());
    if (!inv) {
      EXPECT_THROW(a.inverse(), SingularMatrixError);
      continue;
    }
    ++invertible;
    EXPECT_TRUE((a * *inv).is_identity());
    EXPECT_TRUE((*inv * a).is_identity());
  }
  EXPECT_GT(invertible, 50);
}

TEST(MatrixTest, ImageIsRowVectorTimesMatrix) {
  std::mt19937 rng(5);
  const int dim = 3;
  const Matrix m = random_matrix(dim, rng);
  for (Point v = 0; v < (Point{1} << (2 * dim)); ++v) {
    const auto x = unpack(v, dim);
    const auto y = unpack(m.image(v), dim);
    for (int c = 0; c < dim; ++c) {
      FieldElement s;
      for (int r = 0; r < dim; ++r) s += x[r] * m.at(r, c);
      EXPECT_EQ(y[c], s);
    }
  }
}

TEST(MatrixTest, ActionIsRightAction) {
  std::mt19937 rng(9);
  const Matrix a = random_matrix(2, rng), b = random_matrix(2, rng);
  for (Point v = 0; v < 16; ++v) EXPECT_EQ((a * b).image(v), b.image(a.image(v)));
  EXPECT_EQ(basis_point(1), Point{4});
}

TEST(MatrixTest, ActionImagesFormPermutationForInvertibleMatrix) {
  const Matrix m = elementary_block(2, 0, 1, Mat2::identity());
  const auto images = action_images(m);
  ASSERT_EQ(images.size(), 256u);
  EXPECT_EQ(std::set<Point>(images.begin(), images.end()).size(), 256u);
}

TEST(MatrixTest, BlockHelpers) {
  const Mat2 a = Mat2::from_codes(2, 0, 0, 3);
  const Matrix d = block_diagonal(3, a);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(d.block(i, j), i == j ? a : Mat2::zero());
  }
  const Matrix e = elementary_block(3, 0, 2, Mat2::identity());
  EXPECT_EQ(e.block(0, 2), Mat2::identity());
  EXPECT_TRUE(is_block_upper_unitriangular(e));
  EXPECT_FALSE(is_block_upper_unitriangular(d));
  EXPECT_TRUE((e * unitriangular_block_inverse(e)).is_identity());
  EXPECT_EQ(block_identity(2), Matrix::identity(4));
}

TEST(MatrixTest, UnitriangularBlockInverseMatchesGeneralInverse) {
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    std::vector<Mat2> blocks;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        blocks.push_back(i == j ? Mat2::identity() : i < j ? Mat2::from_index(rng() % 256) : Mat2::zero());
      }
    }
    const Matrix x = from_blocks(3, blocks);
    EXPECT_EQ(unitriangular_block_inverse(x), x.inverse());
  }
}

TEST(MatrixTest, DirectSumIsBlockDiagonal) {
  std::mt19937 rng(17);
  const Matrix a = random_matrix(2, rng), b = random_matrix(3, rng);
  const Matrix s = direct_sum(a, b);
  ASSERT_EQ(s.dim(), 5);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      const FieldElement want = r < 2 && c < 2   ? a.at(r, c)
                                : r >= 2 && c >= 2 ? b.at(r - 2, c - 2)
                                                   : FieldElement{};
      EXPECT_EQ(s.at(r, c), want);
    }
  }
}

TEST(MatrixTest, LiteralRoundTrip) {
  std::mt19937 rng(19);
  const Matrix m = random_matrix(6, rng);
  EXPECT_EQ(parse_matrix_literal(to_literal(m), 6), m);
  EXPECT_THROW(parse_matrix_literal("1001 0000", 4), std::invalid_argument);
  EXPECT_THROW(to_literal(Matrix::identity(3)), std::invalid_argument);
}

}  // namespace
}  // namespace sdp
