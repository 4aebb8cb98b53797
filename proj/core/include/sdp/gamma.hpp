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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdp/group_algorithms.hpp"
#include "sdp/product_element.hpp"
#include "sdp/series.hpp"
#include "sdp/subset.hpp"

namespace sdp {

/// Membership through the attached structural predicate when there is one,
/// otherwise through the chain.
template <GroupElement E>
bool member(const Group<E>& g, const E& x, const EngineConfig& config = {}) {
  if (g.oracle()) return g.oracle()(x);
  return g.contains(x, config);
}

enum class FactorKind { kIteratedCommutator, kLowerCentral };

/// Factor sitting at the subsets of one size: [G, s N] below k, gamma_s(N)
/// from k on.
template <GroupElement E>
struct GammaFactor {
  int size;
  FactorKind kind;
  Group<E> group;
};

/// Gamma_k(G, N) <= G^P([d]): the short-lex product over A of
/// Delta_A([G, |A| N]) for |A| < k and Delta_A(gamma_|A|(N)) for |A| >= k.
template <GroupElement E>
struct GammaSpec {
  Group<E> g;
  Group<E> n;
  int d = 0;
  int k = 1;
  /// Indexed by subset size 0..d.
  std::vector<GammaFactor<E>> factors;
  std::vector<ProductElement<E>> generators;
  /// generators[i] == delta(origins[i].first, origins[i].second).
  std::vector<std::pair<SubsetIndex, E>> origins;

  const GammaFactor<E>& factor(const SubsetIndex& a) const { return factors.at(a.size()); }
  ProductElement<E> identity() const { return ProductElement<E>::identity(d, g.identity()); }
  Group<ProductElement<E>> group(std::string label = {}) const {
    return Group<ProductElement<E>>(identity(), generators, std::move(label));
  }
};

/// Assembles the spec from precomputed terms: iterated[s] = [G, s N] for
/// s < k and lower_central[s] = gamma_s(N) for k <= s <= d (other entries are
/// ignored and may be absent). Factor groups may carry structural oracles.
template <GroupElement E>
GammaSpec<E> gamma_spec_from_terms(const Group<E>& g, const Group<E>& n, int d, int k,
                                   std::span<const Group<E>> iterated,
                                   std::span<const Group<E>> lower_central) {
  if (d < 0 || d > kMaxSubsetGround) throw std::invalid_argument("d out of range");
  if (k < 1 || k > d + 1) throw std::invalid_argument("k must lie in [1, d+1]");
  GammaSpec<E> spec{g, n, d, k, {}, {}, {}};
  for (int s = 0; s <= d; ++s) {
    if (s < k) {
      spec.factors.push_back({s, FactorKind::kIteratedCommutator, iterated[static_cast<std::size_t>(s)]});
    } else {
      spec.factors.push_back({s, FactorKind::kLowerCentral, lower_central[static_cast<std::size_t>(s)]});
    }
  }
  for (std::uint32_t mask : shortlex_masks(d)) {
    const SubsetIndex a{d, mask};
    for (const E& u : spec.factor(a).group.generators()) {
      if (u.is_identity()) continue;
      spec.generators.push_back(delta(a, u));
      spec.origins.emplace_back(a, u);
    }
  }
  return spec;
}

/// Computes every factor with the series module. Throws NormalityError when
/// N is not normal in G.
template <GroupElement E>
GammaSpec<E> gamma_spec(const Group<E>& g, const Group<E>& n, int d, int k,
                        const EngineConfig& config = {}) {
  if (k < 1 || k > d + 1) throw std::invalid_argument("k must lie in [1, d+1]");
  require_normal(n, g, config);
  std::vector<Group<E>> iterated{g};
  for (int s = 1; s < k; ++s) iterated.push_back(commutator_group(iterated.back(), n, config));
  std::vector<Group<E>> lower{n, n};
  for (int s = 2; s <= d; ++s) lower.push_back(commutator_group(lower.back(), n, config));
  return gamma_spec_from_terms<E>(g, n, d, k, iterated, lower);
}

struct PeelResult {
  bool member = false;
  /// First coordinate whose value fell outside its factor.
  std::optional<SubsetIndex> rejected_at;
};

/// Decides x in Gamma_k by clearing coordinates in short-lex order: the value
/// u at A must lie in the A-factor and is removed by Delta_A(u)^-1, which
/// only touches coordinates after A.
template <GroupElement E>
PeelResult peel(ProductElement<E> x, const GammaSpec<E>& spec, const EngineConfig& config = {}) {
  if (x.d() != spec.d) throw std::invalid_argument("product over a different ground set");
  const auto masks = shortlex_masks(spec.d);
  std::vector<E> comps(x.components().begin(), x.components().end());
  for (std::size_t r = 0; r < masks.size(); ++r) {
    const E u = comps[r];
    if (u.is_identity()) continue;
    const SubsetIndex a{spec.d, masks[r]};
    if (!member(spec.factor(a).group, u, config)) return {false, a};
    const E u_inv = u.inverse();
    for (std::size_t b = r; b < masks.size(); ++b) {
      if ((masks[b] & a.mask) == a.mask) comps[b] = u_inv * comps[b];
    }
  }
  for (const E& c : comps) {
    if (!c.is_identity()) return {false, std::nullopt};
  }
  return {true, std::nullopt};
}

template <GroupElement E>
bool peel_membership(const ProductElement<E>& x, const GammaSpec<E>& spec,
                     const EngineConfig& config = {}) {
  return peel(x, spec, config).member;
}

/// Every generator of the generated group lies in the set product; together
/// with Delta_A(F_A) <= <generators> this identifies the two.
template <GroupElement E>
bool generators_peel(std::span<const ProductElement<E>> gens, const GammaSpec<E>& spec,
                     const EngineConfig& config = {}) {
  for (const auto& x : gens) {
    if (!peel_membership(x, spec, config)) return false;
  }
  return true;
}

/// Projection of a product group onto coordinate A.
template <GroupElement E>
Group<E> project_group(const Group<ProductElement<E>>& s, const SubsetIndex& a) {
  std::vector<E> gens;
  for (const auto& x : s.generators()) gens.push_back(x.at(a));
  return Group<E>(s.identity().at(a), std::move(gens));
}

/// The projection of s onto coordinate A is all of `factor`.
template <GroupElement E>
bool is_subdirect(const Group<ProductElement<E>>& s, const Group<E>& factor, const SubsetIndex& a,
                  const EngineConfig& config = {}) {
  const Group<E> image = project_group(s, a);
  return is_subgroup(image, factor, config) && image.order(config) == factor.order(config);
}

/// Disjoint blocks of points of a permutation group living in a direct
/// product G_1 x ... x G_n.
struct BlockLayout {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> degrees;

  static BlockLayout uniform(std::size_t count, std::size_t degree);
  std::size_t size() const { return offsets.size(); }
};

Group<Permutation> project_block(const Group<Permutation>& s, const BlockLayout& layout,
                                 std::size_t coordinate);
bool is_subdirect(const Group<Permutation>& s, const Group<Permutation>& factor,
                  const BlockLayout& layout, std::size_t coordinate,
                  const EngineConfig& config = {});

class SubdirectnessError : public std::invalid_argument {
 public:
  SubdirectnessError(std::string which, std::size_t coordinate);
  std::size_t coordinate() const { return coordinate_; }

 private:
  std::size_t coordinate_;
};

struct Theorem1Report {
  std::size_t num_factors = 0;
  /// gamma_n(S) <= N, checked on generators.
  bool gamma_n_in_n = false;
  /// Smallest c with gamma_{c+1}(S) <= N, when found within the bound.
  std::optional<int> nilpotency_class;
  bool holds = false;
};

/// S and N subdirect in G_1 x ... x G_n (n = factors.size()), N normal in S:
/// S/N is nilpotent of class at most n - 1. Throws SubdirectnessError naming
/// the first non-surjective coordinate and NormalityError if N is not normal.
Theorem1Report theorem1_check(const Group<Permutation>& s, const Group<Permutation>& n,
                              std::span<const Group<Permutation>> factors,
                              const BlockLayout& layout, const EngineConfig& config = {});

/// Same check for S, N inside a direct power G^P([d]), all coordinates
/// projecting onto `factor`.
template <GroupElement E>
Theorem1Report theorem1_check(const Group<ProductElement<E>>& s, const Group<ProductElement<E>>& n,
                              const Group<E>& factor, const EngineConfig& config = {}) {
  const int d = s.identity().d();
  const auto masks = shortlex_masks(d);
  for (std::size_t r = 0; r < masks.size(); ++r) {
    if (!is_subdirect(s, factor, SubsetIndex{d, masks[r]}, config)) throw SubdirectnessError("S", r);
    if (!is_subdirect(n, factor, SubsetIndex{d, masks[r]}, config)) throw SubdirectnessError("N", r);
  }
  require_normal(n, s, config);
  Theorem1Report report;
  report.num_factors = masks.size();
  const auto top = lower_central_term(s, static_cast<int>(masks.size()), config);
  report.gamma_n_in_n = is_subgroup(top, n, config);
  report.nilpotency_class = quotient_nilpotency_class(s, n, config);
  report.holds = report.gamma_n_in_n && report.nilpotency_class &&
                 *report.nilpotency_class <= static_cast<int>(masks.size()) - 1;
  return report;
}

struct SubdirectPair {
  Group<Permutation> s;
  Group<Permutation> n;
  BlockLayout layout;
};

/// A seeded pair N <= S <= factor^count with N normal in S and both subdirect.
/// S is generated by twisted diagonals (g^{a_1}, ..., g^{a_count}) over the
/// factor generators plus a few random tuples with some coordinates cleared;
/// N is the normal closure in S of random elements of S. Returns nullopt when
/// no subdirect N turned up within `attempts` draws.
std::optional<SubdirectPair> random_subdirect_pair(const Group<Permutation>& factor, std::size_t count,
                                                   Rng& rng, const EngineConfig& config = {},
                                                   int attempts = 32);

template <GroupElement E>
struct LccTerm {
  int k;
  Order lcs_order;    // |gamma_k(Gamma_1)|
  Order gamma_order;  // |Gamma_k|
  bool equal = false;
};

template <GroupElement E>
struct LccReport {
  int d = 0;
  std::vector<LccTerm<E>> terms;
  bool holds = false;
};

/// For perfect G and N normal in G: gamma_k(Gamma_1) = Gamma_k for
/// k = 1..d+1, certified by equal orders and mutual generator membership.
/// Throws std::domain_error when G is not perfect.
template <GroupElement E>
LccReport<E> verify_lcc(const Group<E>& g, const Group<E>& n, int d, const EngineConfig& config = {}) {
  if (!is_perfect(g, config)) throw std::domain_error("G is not perfect");
  require_normal(n, g, config);
  LccReport<E> report;
  report.d = d;
  report.holds = true;
  using P = ProductElement<E>;
  const Group<P> s = gamma_spec(g, n, d, 1, config).group("Gamma_1");
  Group<P> lcs_term = s;
  for (int k = 1; k <= d + 1; ++k) {
    if (k > 1) lcs_term = commutator_group(lcs_term, s, config);
    const Group<P> gamma = gamma_spec(g, n, d, k, config).group();
    LccTerm<E> t{k, lcs_term.order(config), gamma.order(config), false};
    t.equal = t.lcs_order == t.gamma_order && is_subgroup(lcs_term, gamma, config) &&
              is_subgroup(gamma, lcs_term, config);
    report.holds = report.holds && t.equal;
    report.terms.push_back(std::move(t));
  }
  return report;
}

/// r_i as a map on generators: Delta_A(u) is fixed when i is not in A and
/// sent to Delta_{A\{i}}(u) Delta_A(u)^-1 otherwise.
template <GroupElement E>
std::vector<ProductElement<E>> r_images(const GammaSpec<E>& spec, int i) {
  if (i < 1 || i > spec.d) throw std::out_of_range("i must lie in [1, d]");
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  std::vector<ProductElement<E>> out;
  for (const auto& [a, u] : spec.origins) {
    if ((a.mask & bit) == 0) {
      out.push_back(delta(a, u));
    } else {
      out.push_back(delta(SubsetIndex{a.d, a.mask & ~bit}, u) * delta(a, u).inverse());
    }
  }
  return out;
}

template <GroupElement E>
struct RAutomorphismReport {
  int i = 0;
  bool homomorphism = false;
  bool bijective = false;
  bool involution = false;
  /// kernel_image[rank(A)] = rank(B) when r_i maps the kernel of the
  /// projection to A into the kernel of the projection to B (and B is unique).
  std::vector<std::optional<std::size_t>> kernel_image;
  bool symmetric_difference = false;
  Order order;

  bool holds() const { return homomorphism && bijective && involution && symmetric_difference; }
};

/// Kernels of the coordinate projections of a product group, as groups.
template <GroupElement E>
std::vector<Group<ProductElement<E>>> projection_kernels(const Group<ProductElement<E>>& s,
                                                         const EngineConfig& config = {}) {
  using P = ProductElement<E>;
  std::vector<Group<P>> out;
  const P& id = s.identity();
  const std::uint64_t m = id.component_domain();
  for (std::size_t r = 0; r < id.size(); ++r) {
    // Base the chain on the points of copy r first; the stabilizer of those
    // points is exactly the kernel of the projection to copy r.
    ChainOptions options = config.chain_options(generator_stream<P>(s.generators()) + r);
    for (Point p : left_block_points(id.at_rank(r))) options.initial_base.push_back(static_cast<Point>(r * m + p));
    auto chain = StabilizerChain<P>::build(id, s.generators(), options);
    const std::size_t fixed = options.initial_base.size();
    auto gens = chain.stabilizer_generators(fixed);
    // Not a normal closure: the level generators already generate the stabilizer.
    auto kchain = std::make_shared<const StabilizerChain<P>>(
        StabilizerChain<P>::build(id, gens, config.chain_options(r)));
    out.emplace_back(id, std::move(gens), kchain);
  }
  return out;
}

/// Checks that r_i extends to an involutive automorphism of Gamma_1 and
/// permutes the projection kernels by A -> A symmetric-difference {i}.
template <GroupElement E>
RAutomorphismReport<E> r_automorphism_check(const GammaSpec<E>& spec, int i,
                                            const EngineConfig& config = {}) {
  if (spec.k != 1) throw std::invalid_argument("r_i acts on Gamma_1");
  using P = ProductElement<E>;
  RAutomorphismReport<E> report;
  report.i = i;
  const Group<P> s = spec.group("Gamma_1");
  const std::vector<P> images = r_images(spec, i);
  const auto hom = hom_by_graph<P>(s, images, config);
  report.order = hom.domain_order;
  report.homomorphism = hom.is_homomorphism;
  report.bijective = hom.images_generate_domain;
  if (!report.homomorphism) return report;
  report.involution = true;
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto twice = hom.apply(images[j]);
    report.involution = report.involution && twice && *twice == s.generators()[j];
  }
  const auto kernels = projection_kernels(s, config);
  const auto masks = shortlex_masks(spec.d);
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  report.symmetric_difference = true;
  for (std::size_t r = 0; r < kernels.size(); ++r) {
    std::vector<P> mapped;
    for (const P& x : kernels[r].generators()) mapped.push_back(*hom.apply(x));
    std::optional<std::size_t> target;
    bool unique = true;
    for (std::size_t b = 0; b < kernels.size(); ++b) {
      bool inside = kernels[b].order(config) == kernels[r].order(config);
      for (const P& y : mapped) inside = inside && y.at_rank(b).is_identity();
      if (!inside) continue;
      if (target) unique = false;
      target = b;
    }
    report.kernel_image.push_back(unique ? target : std::nullopt);
    const std::size_t expected = shortlex_rank(spec.d, masks[r] ^ bit);
    report.symmetric_difference = report.symmetric_difference && unique && target == expected;
  }
  return report;
}

/// True iff the permutations (each a vector of images on 0..size-1) generate
/// a group acting regularly: transitive with exactly `size` elements.
bool acts_regularly(std::span<const std::vector<std::size_t>> generators, std::size_t size);

template <GroupElement E>
struct Theorem2Report {
  int d = 0;
  bool in_gamma_d = false;
  bool in_gamma_d_plus_1 = false;
  std::optional<SubsetIndex> rejected_at;
  bool holds() const { return in_gamma_d && !in_gamma_d_plus_1; }
};

/// Peels Delta_[d](w) against Gamma_d and Gamma_{d+1}; the witness separates
/// the two exactly when w lies in gamma_d(N) but not in [G, d N].
template <GroupElement E>
Theorem2Report<E> theorem2_witness(const GammaSpec<E>& gamma_d, const GammaSpec<E>& gamma_d1,
                                   const E& w, const EngineConfig& config = {}) {
  if (gamma_d.d != gamma_d1.d || gamma_d.k != gamma_d.d || gamma_d1.k != gamma_d.d + 1) {
    throw std::invalid_argument("expected Gamma_d and Gamma_{d+1} over the same ground set");
  }
  Theorem2Report<E> report;
  report.d = gamma_d.d;
  const auto x = delta(SubsetIndex::full(gamma_d.d), w);
  report.in_gamma_d = peel_membership(x, gamma_d, config);
  const auto r = peel(x, gamma_d1, config);
  report.in_gamma_d_plus_1 = r.member;
  report.rejected_at = r.rejected_at;
  return report;
}

}  // namespace sdp
