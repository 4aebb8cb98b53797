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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdp/element.hpp"

namespace sdp {

/// Bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point image(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  /// Composition applying *this first.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

inline Permutation identity_like(const Permutation& p) {
  return Permutation::identity(p.degree());
}
inline std::uint64_t domain_size(const Permutation& p) { return p.degree(); }
/// First point of `prefer` moved by p, else the smallest moved point.
std::optional<Point> first_moved_point(const Permutation& p,
                                       std::span<const Point> prefer = {});
std::size_t hash_value(const Permutation& p);

/// Permutation on the disjoint union: a on [0, deg a), b shifted by deg a.
Permutation direct_sum(const Permutation& a, const Permutation& b);
/// Restriction to the block [offset, offset+degree); p must preserve it.
Permutation restrict_to_block(const Permutation& p, std::size_t offset, std::size_t degree);

/// One-line image array, e.g. "[1 2 0]".
std::string to_string(const Permutation& p);
/// Parses the format written by to_string (brackets optional, commas allowed).
Permutation parse_permutation(std::string_view text);

}  // namespace sdp
