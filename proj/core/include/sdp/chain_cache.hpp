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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <type_traits>

#include "sdp/stabilizer_chain.hpp"

namespace sdp {

/// On-disk chain cache.
///
/// One JSON file per (element type, generator list, seed):
///   {"format": "sdp-chain", "version": 1, "element": "perm" | "matrix",
///    "domain": <points>, "base": [...], "strong_generators": [...],
///    "order": "<decimal>"}
/// Loading rebuilds the levels, checks that the product of the orbit lengths
/// equals the recorded order and that every strong and every declared group
/// generator sifts to the identity; any mismatch discards the file.
inline constexpr int kChainCacheVersion = 1;

class Permutation;
class Matrix;

/// Element types with an on-disk format.
template <typename E>
inline constexpr bool kChainCacheSupported = std::is_same_v<E, Permutation> || std::is_same_v<E, Matrix>;

template <GroupElement E>
std::string chain_cache_key(std::span<const E> generators, std::uint64_t seed);

template <GroupElement E>
std::optional<StabilizerChain<E>> load_cached_chain(const std::filesystem::path& dir,
                                                    const E& identity,
                                                    std::span<const E> generators,
                                                    std::uint64_t seed);

/// Writes atomically (temporary file + rename). Errors are swallowed: the
/// cache is an optimization only.
template <GroupElement E>
void save_cached_chain(const std::filesystem::path& dir, const StabilizerChain<E>& chain,
                       std::span<const E> generators, std::uint64_t seed);

/// Serializes one chain to the cache format (exposed for tests).
template <GroupElement E>
std::string serialize_chain(const StabilizerChain<E>& chain);
/// Parses and re-verifies; nullopt on any inconsistency.
template <GroupElement E>
std::optional<StabilizerChain<E>> deserialize_chain(const std::string& text, const E& identity,
                                                    std::span<const E> generators);

}  // namespace sdp
