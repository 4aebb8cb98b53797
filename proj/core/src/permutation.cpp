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

#include "sdp/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdp {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw std::invalid_argument("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other.images_[images_[i]];
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::optional<Point> first_moved_point(const Permutation& p, std::span<const Point> prefer) {
  for (Point q : prefer) {
    if (q < p.degree() && p.image(q) != q) return q;
  }
  for (Point q = 0; q < p.degree(); ++q) {
    if (p.image(q) != q) return q;
  }
  return std::nullopt;
}

std::size_t hash_value(const Permutation& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(a.images().begin(), a.images().end());
  const auto shift = static_cast<Point>(a.degree());
  for (Point x : b.images()) images.push_back(x + shift);
  return Permutation(std::move(images));
}

Permutation restrict_to_block(const Permutation& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const Point q = p.image(static_cast<Point>(offset + i));
    if (q < offset || q >= offset + degree) {
      throw std::invalid_argument("permutation does not preserve the block");
    }
    images[i] = static_cast<Point>(q - offset);
  }
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) os << ' ';
    os << p.image(static_cast<Point>(i));
  }
  os << ']';
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<Point> images;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Point value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw std::invalid_argument("bad permutation image");
      images.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
    } else if (c == '[' || c == ']' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in permutation literal");
    }
  }
  return Permutation(std::move(images));
}

}  // namespace sdp
