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

#include <algorithm>
#include <utility>

namespace sdp {

std::string to_string(FieldElement x) {
  static constexpr std::array<const char*, 4> kNames = {"0", "1", "a", "a+1"};
  return kNames[x.code()];
}

std::string to_literal(const Mat2& m) {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + m.e[i].code());
  return s;
}

Mat2 parse_mat2(std::string_view text) {
  if (text.size() != 4) {
    throw std::invalid_argument("2x2 block literal must have 4 digits, got '" +
                                std::string(text) + "'");
  }
  Mat2 m;
  for (int i = 0; i < 4; ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') {
      throw std::invalid_argument("block literal digit must be 0..3, got '" +
                                  std::string(text) + "'");
    }
    m.e[i] = FieldElement::from_code(static_cast<std::uint8_t>(c - '0'));
  }
  return m;
}

std::vector<Mat2> enumerate_all_mat2() {
  std::vector<Mat2> out;
  out.reserve(256);
  for (unsigned i = 0; i < 256; ++i) out.push_back(Mat2::from_index(i));
  return out;
}

std::vector<Mat2> enumerate_T() {
  std::vector<Mat2> out;
  for (const Mat2& m : enumerate_all_mat2()) {
    if (m.trace().is_zero()) out.push_back(m);
  }
  return out;
}

std::vector<Mat2> enumerate_SL2() {
  std::vector<Mat2> out;
  for (const Mat2& m : enumerate_all_mat2()) {
    if (m.det() == FieldElement::one()) out.push_back(m);
  }
  return out;
}

std::array<Mat2, 3> trace_zero_basis() {
  return {Mat2::identity(), Mat2::from_codes(0, 1, 0, 0), Mat2::from_codes(0, 0, 1, 0)};
}

std::array<Mat2, 4> matrix_unit_basis() {
  return {Mat2::from_codes(1, 0, 0, 0), Mat2::from_codes(0, 1, 0, 0),
          Mat2::from_codes(0, 0, 1, 0), Mat2::from_codes(0, 0, 0, 1)};
}

std::size_t rank(std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldElement inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t span_dim(std::span<const Mat2> mats) {
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(mats.size());
  for (const Mat2& m : mats) rows.emplace_back(m.e.begin(), m.e.end());
  return rank(std::move(rows));
}

std::vector<Mat2> conjugation_differences() {
  std::vector<Mat2> out;
  const auto sl2 = enumerate_SL2();
  for (const Mat2& b : enumerate_T()) {
    for (const Mat2& a : sl2) out.push_back(-b + b.conjugated_by(a));
  }
  return out;
}

std::vector<Mat2> trace_zero_products() {
  std::vector<Mat2> out;
  const auto t = enumerate_T();
  for (const Mat2& b : t) {
    for (const Mat2& c : t) out.push_back(b * c);
  }
  return out;
}

}  // namespace sdp
