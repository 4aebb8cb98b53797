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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdp/element.hpp"
#include "sdp/matrix.hpp"
#include "sdp/permutation.hpp"
#include "sdp/random.hpp"
#include "sdp/subset.hpp"

namespace sdp {

/// An element of the direct power G^P(d), one component per subset of [d],
/// stored in short-lex order of the subsets.
///
/// It acts on the disjoint union of the component domains: point
/// c * |domain| + p is point p of copy c. That makes it a GroupElement in its
/// own right, so chains over direct powers run on the same engine.
template <GroupElement E>
class ProductElement {
 public:
  ProductElement() = default;

  ProductElement(int d, std::vector<E> components) : d_(d), components_(std::move(components)) {
    if (d < 0 || d > kMaxSubsetGround + 1 || components_.size() != (std::size_t{1} << d)) {
      throw std::invalid_argument("a product over P([d]) has 2^d components");
    }
    for (const E& c : components_) {
      if (domain_size(c) != domain_size(components_.front())) {
        throw std::invalid_argument("product components act on different domains");
      }
    }
  }

  static ProductElement identity(int d, const E& component_identity) {
    return ProductElement(d, std::vector<E>(std::size_t{1} << d, component_identity));
  }

  int d() const { return d_; }
  std::size_t size() const { return components_.size(); }
  std::span<const E> components() const { return components_; }
  const E& at_rank(std::size_t rank) const { return components_.at(rank); }
  const E& at(const SubsetIndex& a) const {
    check_subset(a);
    return components_[shortlex_rank(d_, a.mask)];
  }
  void set(const SubsetIndex& a, E value) {
    check_subset(a);
    components_[shortlex_rank(d_, a.mask)] = std::move(value);
  }
  std::uint64_t component_domain() const {
    return components_.empty() ? 0 : domain_size(components_.front());
  }

  ProductElement operator*(const ProductElement& other) const {
    if (other.components_.size() != components_.size()) {
      throw std::invalid_argument("product elements of different shapes");
    }
    ProductElement out;
    out.d_ = d_;
    out.components_.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      out.components_.push_back(components_[i] * other.components_[i]);
    }
    return out;
  }

  ProductElement inverse() const {
    ProductElement out;
    out.d_ = d_;
    out.components_.reserve(components_.size());
    for (const E& c : components_) out.components_.push_back(c.inverse());
    return out;
  }

  bool is_identity() const {
    for (const E& c : components_) {
      if (!c.is_identity()) return false;
    }
    return true;
  }

  Point image(Point p) const {
    const std::uint64_t m = component_domain();
    const std::uint64_t copy = p / m;
    return static_cast<Point>(copy * m + components_[copy].image(static_cast<Point>(p % m)));
  }

  friend bool operator==(const ProductElement&, const ProductElement&) = default;

 private:
  void check_subset(const SubsetIndex& a) const {
    if (a.d != d_ || (a.mask >> d_) != 0) throw std::out_of_range("subset out of range");
  }

  int d_ = 0;
  std::vector<E> components_;
};

template <GroupElement E>
ProductElement<E> identity_like(const ProductElement<E>& x) {
  std::vector<E> ids;
  ids.reserve(x.size());
  for (const E& c : x.components()) ids.push_back(identity_like(c));
  return ProductElement<E>(x.d(), std::move(ids));
}

template <GroupElement E>
std::uint64_t domain_size(const ProductElement<E>& x) {
  return x.size() * x.component_domain();
}

template <GroupElement E>
std::optional<Point> first_moved_point(const ProductElement<E>& x, std::span<const Point> prefer) {
  for (Point p : prefer) {
    if (p < domain_size(x) && x.image(p) != p) return p;
  }
  const std::uint64_t m = x.component_domain();
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (auto p = first_moved_point(x.at_rank(c), std::span<const Point>{})) {
      return static_cast<Point>(c * m + *p);
    }
  }
  return std::nullopt;
}

template <GroupElement E>
std::size_t hash_value(const ProductElement<E>& x) {
  std::uint64_t h = derive_seed(0x6a09e667f3bcc909ULL, x.size());
  for (const E& c : x.components()) h = derive_seed(h, hash_value(c));
  return static_cast<std::size_t>(h);
}

/// u at coordinate A, identity elsewhere.
template <GroupElement E>
ProductElement<E> embed(const E& u, const SubsetIndex& a) {
  ProductElement<E> out = ProductElement<E>::identity(a.d, identity_like(u));
  out.set(a, u);
  return out;
}

template <GroupElement E>
const E& project(const ProductElement<E>& x, const SubsetIndex& a) {
  return x.at(a);
}

/// Delta_A(u): u at every coordinate B containing A, identity elsewhere.
template <GroupElement E>
ProductElement<E> delta(const SubsetIndex& a, const E& u) {
  if (a.d < 0 || a.d > kMaxSubsetGround || (a.mask >> a.d) != 0) {
    throw std::out_of_range("subset out of range");
  }
  const E one = identity_like(u);
  std::vector<E> comps;
  comps.reserve(std::size_t{1} << a.d);
  for (std::uint32_t mask : shortlex_masks(a.d)) comps.push_back((mask & a.mask) == a.mask ? u : one);
  return ProductElement<E>(a.d, std::move(comps));
}

/// Concatenation of the components; the disjoint-union action of the result
/// is the direct sum of the two actions.
template <GroupElement E>
ProductElement<E> direct_sum(const ProductElement<E>& a, const ProductElement<E>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("direct sum of unequal products");
  std::vector<E> comps(a.components().begin(), a.components().end());
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return ProductElement<E>(a.d() + 1, std::move(comps));
}

template <GroupElement E>
std::vector<Point> left_block_points(const ProductElement<E>& left_identity) {
  std::vector<Point> out;
  const std::uint64_t m = left_identity.component_domain();
  for (std::size_t c = 0; c < left_identity.size(); ++c) {
    for (Point p : left_block_points(left_identity.at_rank(c))) {
      out.push_back(static_cast<Point>(c * m + p));
    }
  }
  return out;
}

template <GroupElement E>
ProductElement<E> right_component(const ProductElement<E>& sum, const ProductElement<E>& left_identity,
                                  const ProductElement<E>& right_identity) {
  auto comps = sum.components().subspan(left_identity.size(), right_identity.size());
  return ProductElement<E>(right_identity.d(), std::vector<E>(comps.begin(), comps.end()));
}

/// Disjoint-union permutation of a product of permutations.
Permutation flatten(const ProductElement<Permutation>& x);
/// Block-diagonal matrix of a product of matrices; throws std::invalid_argument
/// past 16 rows.
Matrix flatten(const ProductElement<Matrix>& x);

}  // namespace sdp
