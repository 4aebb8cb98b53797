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

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sdp/group.hpp"

namespace sdp {

template <GroupElement E>
Group<E> trivial_group(const E& identity) {
  return Group<E>(identity, {}, "1");
}

/// <a, b> without computing a chain.
template <GroupElement E>
Group<E> join(const Group<E>& a, const Group<E>& b) {
  std::vector<E> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group<E>(a.identity(), std::move(gens));
}

/// True iff every generator of `sub` lies in `sup`.
template <GroupElement E>
bool is_subgroup(const Group<E>& sub, const Group<E>& sup, const EngineConfig& config = {}) {
  const auto& chain = sup.chain(config);
  for (const E& g : sub.generators()) {
    if (!chain.contains(g)) return false;
  }
  return true;
}

/// Equality as subgroups: inclusion one way plus equal orders.
template <GroupElement E>
bool same_group(const Group<E>& a, const Group<E>& b, const EngineConfig& config = {}) {
  return a.order(config) == b.order(config) && is_subgroup(a, b, config);
}

/// A conjugate x^g (x a generator of `sub`, g a generator of `ambient`) that
/// escapes `sub`, or nullopt when `sub` is normalized by `ambient`.
template <GroupElement E>
std::optional<E> normality_witness(const Group<E>& sub, const Group<E>& ambient,
                                   const EngineConfig& config = {}) {
  const auto& chain = sub.chain(config);
  for (const E& x : sub.generators()) {
    for (const E& g : ambient.generators()) {
      E c = conjugate(x, g);
      if (!chain.contains(c)) return c;
    }
  }
  return std::nullopt;
}

/// Smallest subgroup normalized by `ambient` that contains `sub`.
///
/// Only elements that enlarge the current subgroup are kept as generators,
/// so the generating set stays short (at most log2 of the order).
template <GroupElement E>
Group<E> normal_closure(const Group<E>& ambient, std::span<const E> sub,
                        const EngineConfig& config = {}) {
  auto chain = std::make_shared<StabilizerChain<E>>(ambient.identity());
  const ChainOptions options = config.chain_options(generator_stream<E>(sub) ^ 0x9d1c5a3fULL);
  std::vector<E> gens;
  auto absorb = [&](const E& x) {
    if (x.is_identity() || chain->contains(x)) return;
    gens.push_back(x);
    chain->extend(std::span<const E>(&gens.back(), 1), options);
  };
  for (const E& x : sub) absorb(x);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const E& a : ambient.generators()) absorb(conjugate(gens[i], a));
  }
  return Group<E>(ambient.identity(), std::move(gens),
                  std::shared_ptr<const StabilizerChain<E>>(std::move(chain)));
}

/// [H, K]: commutators of generator pairs, closed to normality in <H, K>.
template <GroupElement E>
Group<E> commutator_group(const Group<E>& h, const Group<E>& k, const EngineConfig& config = {}) {
  std::vector<E> comms;
  std::unordered_set<E, ElementHash<E>> seen;
  for (const E& a : h.generators()) {
    for (const E& b : k.generators()) {
      E c = commutator(a, b);
      if (!c.is_identity() && seen.insert(c).second) comms.push_back(std::move(c));
    }
  }
  return normal_closure(join(h, k), std::span<const E>(comms), config);
}

/// Uniform random element of g, drawn through its chain.
template <GroupElement E>
E random_element(const Group<E>& g, Rng& rng, const EngineConfig& config = {}) {
  return g.chain(config).random_element(rng);
}

// --- Direct-sum plumbing used by the graph construction. ---

/// Points whose pointwise stabilizer in a direct sum a (+) b is 1 (+) b.
std::vector<Point> left_block_points(const Permutation& left_identity);
std::vector<Point> left_block_points(const Matrix& left_identity);
/// The second summand of an element of a (+) b.
Permutation right_component(const Permutation& sum, const Permutation& left_identity,
                            const Permutation& right_identity);
Matrix right_component(const Matrix& sum, const Matrix& left_identity,
                       const Matrix& right_identity);

/// Outcome of the graph test for a generator map g_i -> images_i.
template <GroupElement E>
struct HomomorphismCheck {
  bool is_homomorphism = false;
  /// The images generate exactly the domain group (automorphism test for
  /// endomorphisms); false when the images live on another domain.
  bool images_generate_domain = false;
  Order domain_order;
  Order graph_order;
  Order image_order;
  E left_identity;
  E right_identity;
  std::size_t left_levels = 0;
  std::shared_ptr<const StabilizerChain<E>> graph_chain;

  /// Image of x under the extended map; nullopt if x is outside the domain or
  /// the map is not a homomorphism.
  std::optional<E> apply(const E& x) const {
    if (!is_homomorphism) return std::nullopt;
    auto r = graph_chain->sift(direct_sum(x, right_identity));
    if (r.level < left_levels) return std::nullopt;
    // The residue is (1, phi(x)^-1) once the left coordinates are cleared.
    return right_component(r.residue, left_identity, right_identity).inverse();
  }
};

/// Decides whether the generator map extends to a homomorphism by comparing
/// |<(g_i, images_i)>| with |domain|. Throws std::invalid_argument when the
/// counts differ.
template <GroupElement E>
HomomorphismCheck<E> hom_by_graph(const Group<E>& domain, std::span<const E> images,
                                  const EngineConfig& config = {}) {
  if (images.size() != domain.generators().size()) {
    throw std::invalid_argument("one image per domain generator is required");
  }
  HomomorphismCheck<E> out;
  out.left_identity = domain.identity();
  out.right_identity = images.empty() ? domain.identity() : identity_like(images.front());
  std::vector<E> graph_gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    graph_gens.push_back(direct_sum(domain.generators()[i], images[i]));
  }
  ChainOptions options = config.chain_options(generator_stream<E>(graph_gens));
  options.initial_base = left_block_points(out.left_identity);
  out.left_levels = options.initial_base.size();
  out.graph_chain = std::make_shared<const StabilizerChain<E>>(StabilizerChain<E>::build(
      direct_sum(out.left_identity, out.right_identity), graph_gens, options));
  out.domain_order = domain.order(config);
  out.graph_order = out.graph_chain->order();
  out.is_homomorphism = out.graph_order == out.domain_order;
  Group<E> image_group(out.right_identity, std::vector<E>(images.begin(), images.end()));
  out.image_order = image_group.order(config);
  if (domain_size(out.right_identity) == domain.domain()) {
    bool inside = true;
    for (const E& y : images) inside = inside && domain.contains(y, config);
    out.images_generate_domain = inside && out.image_order == out.domain_order;
  }
  return out;
}

/// Permutation action of invertible matrices on all 4^dim row vectors,
/// v -> vM. Throws SingularMatrixError / std::invalid_argument.
Group<Permutation> matrix_to_perm(std::span<const Matrix> generators, int dim,
                                  std::string label = {});

}  // namespace sdp
