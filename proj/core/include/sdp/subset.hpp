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

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace sdp {

/// Largest ground set supported for subset-indexed products.
inline constexpr int kMaxSubsetGround = 12;

/// A subset of [d] = {1, ..., d}; element i is bit i-1 of `mask`.
struct SubsetIndex {
  int d = 0;
  std::uint32_t mask = 0;

  static SubsetIndex empty(int d) { return {d, 0}; }
  static SubsetIndex full(int d) { return {d, (std::uint32_t{1} << d) - 1}; }

  int size() const;
  bool contains(int i) const { return i >= 1 && i <= d && ((mask >> (i - 1)) & 1u); }
  bool is_subset_of(const SubsetIndex& other) const { return (mask & ~other.mask) == 0; }

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

/// Size first, then A < B iff min(A \ B) < min(B \ A). Throws
/// std::invalid_argument for different ground sets.
std::strong_ordering shortlex_compare(const SubsetIndex& a, const SubsetIndex& b);

/// All 2^d masks in short-lex order. Throws for d outside [0, 12].
std::span<const std::uint32_t> shortlex_masks(int d);

/// Position of `mask` in shortlex_masks(d).
std::size_t shortlex_rank(int d, std::uint32_t mask);

/// "{}", "{1,3}".
std::string to_string(const SubsetIndex& s);

}  // namespace sdp
