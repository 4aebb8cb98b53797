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

#include "sdp/gf4.hpp"

#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace sdp {
namespace {

// GF(2)[x]/(x^2 + x + 1) on two-bit codes, written out independently.
unsigned ref_add(unsigned a, unsigned b) { return a ^ b; }
unsigned ref_mul(unsigned a, unsigned b) {
  const unsigned a1 = a >> 1, a0 = a & 1, b1 = b >> 1, b0 = b & 1;
  const unsigned x2 = a1 & b1;
  const unsigned x1 = (a1 & b0) ^ (a0 & b1);
  const unsigned x0 = a0 & b0;
  return ((x1 ^ x2) << 1) | (x0 ^ x2);
}

FieldElement fe(unsigned code) { return FieldElement::from_code(static_cast<std::uint8_t>(code)); }

// Size of the GF(4)-span of a set of 2x2 matrices, by closing under
// addition and scalar multiplication.
std::size_t span_size(const std::vector<Mat2>& mats) {
  std::set<unsigned> seen{0};
  std::vector<unsigned> frontier{0};
  while (!frontier.empty()) {
    const Mat2 x = Mat2::from_index(frontier.back());
    frontier.pop_back();
    for (const Mat2& m : mats) {
      for (FieldElement s : kFieldElements) {
        const unsigned y = (x + s * m).index();
        if (seen.insert(y).second) frontier.push_back(y);
      }
    }
  }
  return seen.size();
}

TEST(FieldElementTest, TablesMatchPolynomialArithmetic) {
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      EXPECT_EQ((fe(a) + fe(b)).code(), ref_add(a, b));
      EXPECT_EQ((fe(a) * fe(b)).code(), ref_mul(a, b));
      EXPECT_EQ((fe(a) - fe(b)).code(), ref_add(a, b));
    }
  }
}

TEST(FieldElementTest, CharacteristicTwoAndAlpha) {
  const FieldElement a = FieldElement::alpha();
  for (FieldElement x : kFieldElements) EXPECT_TRUE((x + x).is_zero());
  EXPECT_EQ(a * a, a + FieldElement::one());
  EXPECT_EQ(a * a * a, FieldElement::one());
  EXPECT_EQ(a * FieldElement::alpha_plus_one(), FieldElement::one());
}

TEST(FieldElementTest, InversesAndAxioms) {
  for (FieldElement x : kFieldElements) {
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), FieldElement::one());
    for (FieldElement y : kFieldElements) {
      for (FieldElement z : kFieldElements) {
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
      }
    }
  }
}

TEST(FieldElementTest, NonzeroElementsFormCyclicGroupOfOrderThree) {
  std::set<std::uint8_t> powers;
  FieldElement p = FieldElement::one();
  for (int i = 0; i < 3; ++i) {
    powers.insert(p.code());
    p *= FieldElement::alpha();
  }
  EXPECT_EQ(powers.size(), 3u);
  EXPECT_EQ(p, FieldElement::one());
}

TEST(Mat2Test, DeterminantIsMultiplicativeAndTraceAdditive) {
  const auto all = enumerate_all_mat2();
  ASSERT_EQ(all.size(), 256u);
  for (const Mat2& a : all) {
    for (const Mat2& b : all) {
      EXPECT_EQ((a * b).det(), a.det() * b.det());
      EXPECT_EQ((a + b).trace(), a.trace() + b.trace());
    }
  }
}

TEST(Mat2Test, ConjugationPreservesTrace) {
  const auto sl2 = enumerate_SL2();
  for (const Mat2& b : enumerate_all_mat2()) {
    for (const Mat2& a : sl2) EXPECT_EQ(b.conjugated_by(a).trace(), b.trace());
  }
}

TEST(Mat2Test, InverseAndIndexRoundTrip) {
  for (unsigned i = 0; i < 256; ++i) {
    const Mat2 m = Mat2::from_index(i);
    EXPECT_EQ(m.index(), i);
    if (!m.det().is_zero()) EXPECT_EQ(m * m.inverse(), Mat2::identity());
  }
}

TEST(Mat2Test, EnumerationsMatchFiltering) {
  std::size_t trace_zero = 0, det_one = 0;
  for (const Mat2& m : enumerate_all_mat2()) {
    trace_zero += m.trace().is_zero() ? 1 : 0;
    det_one += m.det() == FieldElement::one() ? 1 : 0;
  }
  EXPECT_EQ(enumerate_T().size(), trace_zero);
  EXPECT_EQ(enumerate_T().size(), 64u);
  EXPECT_EQ(enumerate_SL2().size(), det_one);
  EXPECT_EQ(enumerate_SL2().size(), 60u);
}

TEST(Mat2Test, LiteralRoundTrip) {
  for (const Mat2& m : enumerate_all_mat2()) EXPECT_EQ(parse_mat2(to_literal(m)), m);
  EXPECT_EQ(to_literal(Mat2::identity()), "1001");
  EXPECT_THROW(parse_mat2("10z1"), std::invalid_argument);
  EXPECT_THROW(parse_mat2("101"), std::invalid_argument);
}

TEST(SpanTest, RankAgreesWithSpanSize) {
  const auto t_basis = trace_zero_basis();
  const auto unit_basis = matrix_unit_basis();
  const std::vector<std::vector<Mat2>> sets = {
      {}, {Mat2::identity()}, {Mat2::identity(), FieldElement::alpha() * Mat2::identity()},
      {t_basis.begin(), t_basis.end()},
      {unit_basis.begin(), unit_basis.end()}};
  for (const auto& s : sets) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < span_dim(s); ++i) expected *= 4;
    EXPECT_EQ(span_size(s), expected);
  }
}

TEST(SpanTest, ConjugationDifferencesSpanTraceZeroSpace) {
  const auto diffs = conjugation_differences();
  for (const Mat2& d : diffs) EXPECT_TRUE(d.trace().is_zero());
  EXPECT_EQ(span_dim(diffs), 3u);
  EXPECT_EQ(span_size(diffs), 64u);
}

TEST(SpanTest, TraceZeroProductsSpanEverything) {
  const auto products = trace_zero_products();
  EXPECT_EQ(span_dim(products), 4u);
  EXPECT_EQ(span_size(products), 256u);
}

TEST(SpanTest, TraceZeroBasisSpansT) {
  const auto basis = trace_zero_basis();
  EXPECT_EQ(span_size({basis.begin(), basis.end()}), enumerate_T().size());
}

}  // namespace
}  // namespace sdp
