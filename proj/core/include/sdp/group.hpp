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
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdp/chain_cache.hpp"
#include "sdp/element.hpp"
#include "sdp/order.hpp"
#include "sdp/random.hpp"
#include "sdp/stabilizer_chain.hpp"

namespace sdp {

/// Knobs shared by every group computation in a run.
struct EngineConfig {
  std::uint64_t seed = 0;
  std::uint64_t random_threshold = 512;
  int random_stop = 40;
  /// Upper bound on nilpotency classes searched before giving up.
  int class_bound = 16;
  /// Directory for persisted chains; empty disables the cache.
  std::string cache_dir;

  ChainOptions chain_options(std::uint64_t stream) const {
    ChainOptions o;
    o.seed = derive_seed(seed, stream);
    o.random_threshold = random_threshold;
    o.random_stop = random_stop;
    return o;
  }
};

template <GroupElement E>
std::uint64_t generator_stream(std::span<const E> generators) {
  std::uint64_t h = 0x51ed270b27a3f0c1ULL;
  for (const E& g : generators) h = derive_seed(h, hash_value(g));
  return h;
}

/// A finitely generated group acting on a finite domain.
///
/// Copies share one lazily built stabilizer chain; the chain is built at most
/// once and the handle is otherwise immutable. An optional structural
/// membership predicate can be attached for groups too large for chains.
template <GroupElement E>
class Group {
 public:
  using Element = E;
  using Chain = StabilizerChain<E>;
  using Oracle = std::function<bool(const E&)>;

  Group(E identity, std::vector<E> generators, std::string label = {})
      : identity_(std::move(identity)),
        generators_(std::move(generators)),
        label_(std::move(label)),
        slot_(std::make_shared<Slot>()) {}

  Group(E identity, std::vector<E> generators, std::shared_ptr<const Chain> chain,
        std::string label = {})
      : Group(std::move(identity), std::move(generators), std::move(label)) {
    slot_->chain = std::move(chain);
  }

  const E& identity() const { return identity_; }
  std::span<const E> generators() const { return generators_; }
  const std::string& label() const { return label_; }
  std::uint64_t domain() const { return domain_size(identity_); }

  Group with_label(std::string label) const {
    Group g = *this;
    g.label_ = std::move(label);
    return g;
  }
  Group with_oracle(Oracle oracle) const {
    Group g = *this;
    g.oracle_ = std::move(oracle);
    return g;
  }
  const Oracle& oracle() const { return oracle_; }

  bool has_chain() const {
    std::lock_guard<std::mutex> lock(slot_->mu);
    return slot_->chain != nullptr;
  }

  std::shared_ptr<const Chain> chain_ptr(const EngineConfig& config = {}) const {
    std::lock_guard<std::mutex> lock(slot_->mu);
    if (!slot_->chain) slot_->chain = make_chain(config);
    return slot_->chain;
  }
  const Chain& chain(const EngineConfig& config = {}) const { return *chain_ptr(config); }

  Order order(const EngineConfig& config = {}) const { return chain(config).order(); }
  bool contains(const E& x, const EngineConfig& config = {}) const {
    return chain(config).contains(x);
  }

  bool generators_trivial() const {
    for (const E& g : generators_) {
      if (!g.is_identity()) return false;
    }
    return true;
  }

 private:
  struct Slot {
    std::mutex mu;
    std::shared_ptr<const Chain> chain;
  };

  std::shared_ptr<const Chain> make_chain(const EngineConfig& config) const {
    const std::uint64_t stream = generator_stream<E>(generators_);
    if constexpr (kChainCacheSupported<E>) {
      const bool use_cache = !config.cache_dir.empty() && domain() > config.random_threshold;
      if (use_cache) {
        if (auto cached = load_cached_chain<E>(config.cache_dir, identity_, generators_, config.seed)) {
          return std::make_shared<const Chain>(std::move(*cached));
        }
      }
      auto chain = std::make_shared<const Chain>(
          Chain::build(identity_, generators_, config.chain_options(stream)));
      if (use_cache) save_cached_chain<E>(config.cache_dir, *chain, generators_, config.seed);
      return chain;
    } else {
      return std::make_shared<const Chain>(Chain::build(identity_, generators_, config.chain_options(stream)));
    }
  }

  E identity_;
  std::vector<E> generators_;
  std::string label_;
  Oracle oracle_;
  std::shared_ptr<Slot> slot_;
};

}  // namespace sdp
