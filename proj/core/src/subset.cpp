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

#include "sdp/subset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace sdp {
namespace {

bool shortlex_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

struct Tables {
  std::array<std::vector<std::uint32_t>, kMaxSubsetGround + 1> order;
  std::array<std::vector<std::uint32_t>, kMaxSubsetGround + 1> rank;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (int d = 0; d <= kMaxSubsetGround; ++d) {
      auto& order = out.order[d];
      order.resize(std::size_t{1} << d);
      for (std::uint32_t m = 0; m < order.size(); ++m) order[m] = m;
      std::sort(order.begin(), order.end(), shortlex_less);
      auto& rank = out.rank[d];
      rank.resize(order.size());
      for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    }
    return out;
  }();
  return t;
}

void check_ground(int d) {
  if (d < 0 || d > kMaxSubsetGround) throw std::invalid_argument("subset ground set out of range");
}

}  // namespace

int SubsetIndex::size() const { return std::popcount(mask); }

std::strong_ordering shortlex_compare(const SubsetIndex& a, const SubsetIndex& b) {
  if (a.d != b.d) throw std::invalid_argument("subsets of different ground sets");
  if (a.mask == b.mask) return std::strong_ordering::equal;
  return shortlex_less(a.mask, b.mask) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::span<const std::uint32_t> shortlex_masks(int d) {
  check_ground(d);
  return tables().order[d];
}

std::size_t shortlex_rank(int d, std::uint32_t mask) {
  check_ground(d);
  if (mask >> d) throw std::out_of_range("subset outside the ground set");
  return tables().rank[d][mask];
}

std::string to_string(const SubsetIndex& s) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= s.d; ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace sdp
