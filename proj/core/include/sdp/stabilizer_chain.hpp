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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdp/element.hpp"
#include "sdp/matrix.hpp"
#include "sdp/order.hpp"
#include "sdp/permutation.hpp"
#include "sdp/random.hpp"

namespace sdp {

struct ChainOptions {
  std::uint64_t seed = 0;
  /// Domains larger than this get a randomized pre-pass before the
  /// deterministic completion.
  std::uint64_t random_threshold = 512;
  /// Consecutive random elements that must sift before the pre-pass stops.
  int random_stop = 40;
  /// Levels created up front, in order, even when their orbits are trivial.
  std::vector<Point> initial_base;
  /// Candidates tried first whenever the base has to be extended.
  std::vector<Point> preferred_base;
};

/// Point -> orbit position. Dense for small domains, hashed otherwise.
class OrbitIndex {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;

  explicit OrbitIndex(std::uint64_t domain_size = 0) {
    if (domain_size <= kDenseLimit) dense_.assign(domain_size, -1);
    use_dense_ = domain_size <= kDenseLimit;
  }
  std::int64_t find(Point p) const {
    if (use_dense_) return p < dense_.size() ? dense_[p] : -1;
    auto it = sparse_.find(p);
    return it == sparse_.end() ? -1 : static_cast<std::int64_t>(it->second);
  }
  void insert(Point p, std::uint32_t position) {
    if (use_dense_) {
      dense_[p] = static_cast<std::int32_t>(position);
    } else {
      sparse_.emplace(p, position);
    }
  }

 private:
  bool use_dense_ = true;
  std::vector<std::int32_t> dense_;
  std::unordered_map<Point, std::uint32_t> sparse_;
};

/// Base and strong generating set with explicit transversals.
///
/// Level l stores the strong generators S_l fixing b_0..b_{l-1}, the orbit of
/// b_l under <S_l> and, for each orbit point p, a coset representative u_p with
/// b_l^{u_p} = p together with its inverse. Construction is deterministic
/// Schreier-Sims, optionally preceded by a randomized pass (product
/// replacement); the chain is always certified by checking every Schreier
/// generator, so orders and membership are exact.
template <GroupElement E>
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<E> generators;
    std::vector<E> generators_inv;
    std::vector<Point> orbit;
    std::vector<E> transversal;
    std::vector<E> transversal_inv;
    OrbitIndex index;
    std::size_t closed_gens = 0;
    std::size_t checked_points = 0;
    std::size_t checked_gens = 0;
  };

  struct SiftResult {
    E residue;
    /// Level at which sifting stopped; depth() when every level was passed.
    std::size_t level;
  };

  explicit StabilizerChain(E identity)
      : identity_(std::move(identity)), domain_size_(domain_size(identity_)) {}

  static StabilizerChain build(const E& identity, std::span<const E> generators,
                               const ChainOptions& options = {}) {
    StabilizerChain chain(identity);
    for (Point p : options.initial_base) chain.push_level(p);
    chain.extend(generators, options);
    return chain;
  }

  /// Rebuilds levels from a declared base and strong generating set without
  /// running the completion; callers must re-verify what they rely on.
  static StabilizerChain from_strong_generators(const E& identity, std::span<const Point> base,
                                                std::span<const E> strong) {
    StabilizerChain chain(identity);
    for (Point p : base) chain.push_level(p);
    for (const E& g : strong) {
      if (g.is_identity()) continue;
      std::size_t fixed = 0;
      while (fixed < chain.levels_.size() && g.image(chain.levels_[fixed].base) ==
                                                  chain.levels_[fixed].base) {
        ++fixed;
      }
      if (fixed == chain.levels_.size()) {
        throw std::invalid_argument("strong generator fixes the whole base");
      }
      for (std::size_t l = 0; l <= fixed; ++l) chain.add_generator(l, g);
      chain.group_generators_.push_back(g);
    }
    for (std::size_t l = 0; l < chain.levels_.size(); ++l) chain.grow_orbit(l);
    return chain;
  }

  const E& identity() const { return identity_; }
  std::uint64_t domain() const { return domain_size_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t l) const { return levels_.at(l); }

  std::vector<Point> base() const {
    std::vector<Point> out;
    out.reserve(levels_.size());
    for (const Level& l : levels_) out.push_back(l.base);
    return out;
  }

  Order order() const { return stabilizer_order(0); }

  /// Order of the pointwise stabilizer of the first `from_level` base points.
  Order stabilizer_order(std::size_t from_level) const {
    Order n = 1;
    for (std::size_t l = from_level; l < levels_.size(); ++l) n *= levels_[l].orbit.size();
    return n;
  }

  std::vector<E> strong_generators() const {
    return levels_.empty() ? std::vector<E>{} : levels_.front().generators;
  }

  /// Generators of the pointwise stabilizer of the first `l` base points.
  std::vector<E> stabilizer_generators(std::size_t l) const {
    return l < levels_.size() ? levels_[l].generators : std::vector<E>{};
  }

  SiftResult sift(E g, std::size_t from_level = 0) const {
    for (std::size_t l = from_level; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      const std::int64_t pos = L.index.find(g.image(L.base));
      if (pos < 0) return {std::move(g), l};
      if (pos > 0) g = g * L.transversal_inv[static_cast<std::size_t>(pos)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const E& g) const { return sift(g).residue.is_identity(); }

  /// A uniformly distributed element, given uniform draws from `rng`.
  E random_element(Rng& rng) const {
    E g = identity_;
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const Level& L = levels_[l];
      g = g * L.transversal[static_cast<std::size_t>(rng.below(L.orbit.size()))];
    }
    return g;
  }

  /// Adds generators to the group and completes the chain.
  void extend(std::span<const E> generators, const ChainOptions& options) {
    bool changed = false;
    for (const E& g : generators) {
      if (g.is_identity()) continue;
      group_generators_.push_back(g);
      auto r = sift(g);
      if (!r.residue.is_identity()) {
        insert(std::move(r.residue), r.level, options);
        changed = true;
      }
    }
    if (!changed) return;
    if (domain_size_ > options.random_threshold) {
      Rng rng(options.seed, extensions_++);
      random_pass(rng, options);
    }
    complete(options);
  }

  /// Generators the chain was built from (identity elements dropped).
  const std::vector<E>& group_generators() const { return group_generators_; }

 private:
  void push_level(Point p) {
    Level L;
    L.base = p;
    L.orbit.push_back(p);
    L.transversal.push_back(identity_);
    L.transversal_inv.push_back(identity_);
    L.index = OrbitIndex(domain_size_);
    L.index.insert(p, 0);
    levels_.push_back(std::move(L));
  }

  void add_generator(std::size_t l, const E& h) {
    levels_[l].generators.push_back(h);
    levels_[l].generators_inv.push_back(h.inverse());
  }

  void insert(E h, std::size_t level, const ChainOptions& options) {
    if (level == levels_.size()) {
      auto p = first_moved_point(h, std::span<const Point>(options.preferred_base));
      if (!p) throw std::logic_error("non-identity residue fixes every point");
      push_level(*p);
    }
    const E h_inv = h.inverse();
    for (std::size_t l = 0; l <= level; ++l) {
      levels_[l].generators.push_back(h);
      levels_[l].generators_inv.push_back(h_inv);
      grow_orbit(l);
    }
  }

  void try_extend_orbit(Level& L, std::size_t i, std::size_t j) {
    const Point q = L.generators[j].image(L.orbit[i]);
    if (L.index.find(q) >= 0) return;
    E u = L.transversal[i] * L.generators[j];
    E u_inv = L.generators_inv[j] * L.transversal_inv[i];
    L.index.insert(q, static_cast<std::uint32_t>(L.orbit.size()));
    L.orbit.push_back(q);
    L.transversal.push_back(std::move(u));
    L.transversal_inv.push_back(std::move(u_inv));
  }

  void grow_orbit(std::size_t l) {
    Level& L = levels_[l];
    const std::size_t old_size = L.orbit.size();
    for (std::size_t j = L.closed_gens; j < L.generators.size(); ++j) {
      for (std::size_t i = 0; i < old_size; ++i) try_extend_orbit(L, i, j);
    }
    for (std::size_t i = old_size; i < L.orbit.size(); ++i) {
      for (std::size_t j = 0; j < L.generators.size(); ++j) try_extend_orbit(L, i, j);
    }
    L.closed_gens = L.generators.size();
  }

  void random_pass(Rng& rng, const ChainOptions& options) {
    // Product replacement with an accumulator ("rattle").
    std::vector<E> slots = group_generators_;
    while (slots.size() < 10) slots.push_back(group_generators_[slots.size() % group_generators_.size()]);
    E acc = identity_;
    auto step = [&]() -> const E& {
      const std::size_t i = rng.below(slots.size());
      std::size_t j = rng.below(slots.size() - 1);
      if (j >= i) ++j;
      const bool left = rng.below(2) == 1;
      const E s = rng.below(2) == 1 ? slots[j] : slots[j].inverse();
      slots[i] = left ? s * slots[i] : slots[i] * s;
      acc = acc * slots[i];
      return acc;
    };
    for (int k = 0; k < 50; ++k) step();
    int streak = 0;
    while (streak < options.random_stop) {
      auto r = sift(step());
      if (r.residue.is_identity()) {
        ++streak;
      } else {
        insert(std::move(r.residue), r.level, options);
        streak = 0;
      }
    }
  }

  std::optional<SiftResult> check_level(std::size_t l) const {
    const Level& L = levels_[l];
    const std::size_t points = L.orbit.size();
    const std::size_t gens = L.generators.size();
    for (std::size_t i = 0; i < points; ++i) {
      const std::size_t j0 = i < L.checked_points ? L.checked_gens : 0;
      for (std::size_t j = j0; j < gens; ++j) {
        const std::int64_t pos = L.index.find(L.generators[j].image(L.orbit[i]));
        E s = L.transversal[i] * L.generators[j] * L.transversal_inv[static_cast<std::size_t>(pos)];
        if (s.is_identity()) continue;
        auto r = sift(std::move(s), l + 1);
        if (!r.residue.is_identity()) return r;
      }
    }
    return std::nullopt;
  }

  // Bottom-up Schreier-Sims completion. Pairs (orbit point, generator) already
  // certified are skipped; transversals only ever grow, so those stay valid.
  void complete(const ChainOptions& options) {
    std::size_t next = levels_.size();
    while (next > 0) {
      const std::size_t l = next - 1;
      if (auto failure = check_level(l)) {
        const std::size_t at = failure->level;
        insert(std::move(failure->residue), at, options);
        next = at + 1;
      } else {
        levels_[l].checked_points = levels_[l].orbit.size();
        levels_[l].checked_gens = levels_[l].generators.size();
        --next;
      }
    }
  }

  E identity_;
  std::uint64_t domain_size_;
  std::vector<Level> levels_;
  std::vector<E> group_generators_;
  std::uint64_t extensions_ = 0;
};

extern template class StabilizerChain<Permutation>;
extern template class StabilizerChain<Matrix>;

}  // namespace sdp
