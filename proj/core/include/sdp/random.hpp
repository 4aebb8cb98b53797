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
#include <random>
#include <string_view>

namespace sdp {

/// Mixes a run seed with a stream index so that every task draws from its own
/// independent, reproducible stream regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
/// Stream index derived from a task name.
std::uint64_t stream_id(std::string_view name);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive. Rejection sampling keeps
  /// the stream identical across standard library implementations.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sdp
