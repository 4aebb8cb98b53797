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

#include "sdp/gamma.hpp"

#include <set>
#include <stdexcept>

namespace sdp {

BlockLayout BlockLayout::uniform(std::size_t count, std::size_t degree) {
  BlockLayout layout;
  for (std::size_t i = 0; i < count; ++i) {
    layout.offsets.push_back(i * degree);
    layout.degrees.push_back(degree);
  }
  return layout;
}

Group<Permutation> project_block(const Group<Permutation>& s, const BlockLayout& layout,
                                 std::size_t coordinate) {
  const std::size_t offset = layout.offsets.at(coordinate);
  const std::size_t degree = layout.degrees.at(coordinate);
  std::vector<Permutation> gens;
  for (const Permutation& x : s.generators()) gens.push_back(restrict_to_block(x, offset, degree));
  return Group<Permutation>(Permutation::identity(degree), std::move(gens));
}

bool is_subdirect(const Group<Permutation>& s, const Group<Permutation>& factor,
                  const BlockLayout& layout, std::size_t coordinate, const EngineConfig& config) {
  const Group<Permutation> image = project_block(s, layout, coordinate);
  return is_subgroup(image, factor, config) && image.order(config) == factor.order(config);
}

SubdirectnessError::SubdirectnessError(std::string which, std::size_t coordinate)
    : std::invalid_argument(which + " does not project onto coordinate " + std::to_string(coordinate)),
      coordinate_(coordinate) {}

Theorem1Report theorem1_check(const Group<Permutation>& s, const Group<Permutation>& n,
                              std::span<const Group<Permutation>> factors, const BlockLayout& layout,
                              const EngineConfig& config) {
  if (factors.size() != layout.size() || factors.empty()) {
    throw std::invalid_argument("one factor per block is required");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_subdirect(s, factors[i], layout, i, config)) throw SubdirectnessError("S", i);
    if (!is_subdirect(n, factors[i], layout, i, config)) throw SubdirectnessError("N", i);
  }
  require_normal(n, s, config);
  Theorem1Report report;
  report.num_factors = factors.size();
  const Group<Permutation> top = lower_central_term(s, static_cast<int>(factors.size()), config);
  report.gamma_n_in_n = is_subgroup(top, n, config);
  report.nilpotency_class = quotient_nilpotency_class(s, n, config);
  report.holds = report.gamma_n_in_n && report.nilpotency_class &&
                 *report.nilpotency_class <= static_cast<int>(factors.size()) - 1;
  return report;
}

bool acts_regularly(std::span<const std::vector<std::size_t>> generators, std::size_t size) {
  for (const auto& g : generators) {
    if (g.size() != size) throw std::invalid_argument("permutation of the wrong degree");
  }
  std::vector<std::size_t> id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = i;
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    auto x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : generators) {
      std::vector<std::size_t> y(size);
      for (std::size_t i = 0; i < size; ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) frontier.push_back(std::move(y));
      if (seen.size() > size) return false;
    }
  }
  std::vector<bool> reached(size, false);
  for (const auto& x : seen) reached[x[0]] = true;
  for (bool r : reached) {
    if (!r) return false;
  }
  return seen.size() == size;
}

namespace {

Permutation tuple_element(std::span<const Permutation> parts) {
  Permutation out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

}  // namespace

std::optional<SubdirectPair> random_subdirect_pair(const Group<Permutation>& factor, std::size_t count,
                                                   Rng& rng, const EngineConfig& config, int attempts) {
  if (count == 0) throw std::invalid_argument("need at least one factor");
  const auto& chain = factor.chain(config);
  const BlockLayout layout = BlockLayout::uniform(count, factor.identity().degree());
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Permutation> twist;
    twist.push_back(factor.identity());
    for (std::size_t i = 1; i < count; ++i) twist.push_back(chain.random_element(rng));
    std::vector<Permutation> s_gens;
    for (const Permutation& g : factor.generators()) {
      std::vector<Permutation> parts;
      for (const Permutation& a : twist) parts.push_back(conjugate(g, a));
      s_gens.push_back(tuple_element(parts));
    }
    const std::size_t extras = rng.below(3);
    for (std::size_t e = 0; e < extras; ++e) {
      std::vector<Permutation> parts;
      for (std::size_t i = 0; i < count; ++i) {
        parts.push_back(rng.below(2) == 0 ? factor.identity() : chain.random_element(rng));
      }
      s_gens.push_back(tuple_element(parts));
    }
    Group<Permutation> s(tuple_element(std::vector<Permutation>(count, factor.identity())), std::move(s_gens));
    bool s_subdirect = true;
    for (std::size_t i = 0; i < count && s_subdirect; ++i) s_subdirect = is_subdirect(s, factor, layout, i, config);
    if (!s_subdirect) continue;
    std::vector<Permutation> seeds;
    const std::size_t seed_count = 1 + rng.below(2);
    for (std::size_t j = 0; j < seed_count; ++j) seeds.push_back(s.chain(config).random_element(rng));
    Group<Permutation> n = normal_closure(s, std::span<const Permutation>(seeds), config);
    bool n_subdirect = true;
    for (std::size_t i = 0; i < count && n_subdirect; ++i) n_subdirect = is_subdirect(n, factor, layout, i, config);
    if (!n_subdirect) continue;
    return SubdirectPair{std::move(s), std::move(n), layout};
  }
  return std::nullopt;
}

}  // namespace sdp
