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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace sdp {

/// A point of a finite domain acted on from the right.
using Point = std::uint32_t;

/// Elements acting faithfully on a finite domain from the right: p^(xy) =
/// (p^x)^y, so `x * y` applies x first. Both Permutation and Matrix (acting on
/// packed row vectors) model this.
template <class E>
concept GroupElement = std::regular<E> && requires(const E& a, const E& b, Point p,
                                                  std::span<const Point> prefer) {
  { a * b } -> std::convertible_to<E>;
  { a.inverse() } -> std::convertible_to<E>;
  { a.image(p) } -> std::convertible_to<Point>;
  { a.is_identity() } -> std::convertible_to<bool>;
  { identity_like(a) } -> std::convertible_to<E>;
  { domain_size(a) } -> std::convertible_to<std::uint64_t>;
  { first_moved_point(a, prefer) } -> std::convertible_to<std::optional<Point>>;
  { hash_value(a) } -> std::convertible_to<std::size_t>;
};

/// [x, y] = x^-1 y^-1 x y.
template <GroupElement E>
E commutator(const E& x, const E& y) {
  return x.inverse() * y.inverse() * x * y;
}

/// x^y = y^-1 x y.
template <GroupElement E>
E conjugate(const E& x, const E& y) {
  return y.inverse() * x * y;
}

template <GroupElement E>
struct ElementHash {
  std::size_t operator()(const E& e) const { return hash_value(e); }
};

}  // namespace sdp
