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

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gtest/gtest.h"
#include "sdp/families.hpp"
#include "support/brute_force.hpp"
#include "support/corpus.hpp"

namespace sdp {
namespace {

using testing::closure;
using testing::ElementSet;
using P = ProductElement<Permutation>;

Group<Permutation> perm(const std::string& name) { return std::get<Group<Permutation>>(cli::resolve_group(name).group); }

ElementSet<Permutation> elements(const Group<Permutation>& g) {
  return closure<Permutation>(g.identity(), std::vector<Permutation>(g.generators().begin(), g.generators().end()));
}

// Factor sets by enumeration: [G, s N] below k and gamma_s(N) from k on.
std::vector<ElementSet<Permutation>> brute_factors(const Group<Permutation>& g, const Group<Permutation>& n,
                                                   int d, int k) {
  const auto g_all = elements(g);
  const auto n_all = elements(n);
  std::vector<ElementSet<Permutation>> iterated{g_all};
  std::vector<ElementSet<Permutation>> lower{n_all, n_all};
  for (int s = 1; s <= d; ++s) iterated.push_back(testing::commutator_closure(g.identity(), iterated.back(), n_all));
  for (int s = 2; s <= d; ++s) lower.push_back(testing::commutator_closure(g.identity(), lower.back(), n_all));
  std::vector<ElementSet<Permutation>> out;
  for (int s = 0; s <= d; ++s) out.push_back(s < k ? iterated[s] : lower[s]);
  return out;
}

// The short-lex set product of Delta_A(F_|A|), listed element by element.
ElementSet<P> set_product(const std::vector<ElementSet<Permutation>>& factors, int d, const Permutation& id) {
  ElementSet<P> current{P::identity(d, id)};
  for (std::uint32_t mask : shortlex_masks(d)) {
    const SubsetIndex a{d, mask};
    ElementSet<P> next;
    for (const P& x : current) {
      for (const Permutation& u : factors[a.size()]) next.insert(x * delta(a, u));
    }
    current = std::move(next);
  }
  return current;
}

// Every element of G^P([d]).
std::vector<P> full_power(const ElementSet<Permutation>& g, int d) {
  const std::vector<Permutation> list(g.begin(), g.end());
  const std::size_t coords = std::size_t{1} << d;
  std::vector<P> out;
  std::vector<std::size_t> idx(coords, 0);
  while (true) {
    std::vector<Permutation> comps;
    for (std::size_t c = 0; c < coords; ++c) comps.push_back(list[idx[c]]);
    out.emplace_back(d, std::move(comps));
    std::size_t c = 0;
    while (c < coords && ++idx[c] == list.size()) idx[c++] = 0;
    if (c == coords) break;
  }
  return out;
}

struct PeelCase {
  std::string name;
  Group<Permutation> g;
  Group<Permutation> n;
  int d;
};

std::vector<PeelCase> peel_cases() {
  const auto pairs = testing::normal_pairs();
  return {{"(S4,V4) d=1", pairs[0].g, pairs[0].n, 1},
          {"(S4,A4) d=1", pairs[1].g, pairs[1].n, 1},
          {"(D8,C4) d=1", pairs[4].g, pairs[4].n, 1},
          {"(S3,A3) d=2", pairs[5].g, pairs[5].n, 2},
          {"(D8,C4) d=2", pairs[4].g, pairs[4].n, 2}};
}

TEST(GammaTest, PeelMatchesEnumeratedSetProduct) {
  for (const auto& c : peel_cases()) {
    const auto g_all = elements(c.g);
    const auto everything = full_power(g_all, c.d);
    for (int k = 1; k <= c.d + 1; ++k) {
      const auto spec = gamma_spec(c.g, c.n, c.d, k);
      const auto product = set_product(brute_factors(c.g, c.n, c.d, k), c.d, c.g.identity());
      std::size_t members = 0;
      for (const P& x : everything) {
        const bool in = peel_membership(x, spec);
        ASSERT_EQ(in, product.contains(x)) << c.name << " k=" << k;
        members += in;
      }
      EXPECT_EQ(members, product.size()) << c.name << " k=" << k;
    }
  }
}

TEST(GammaTest, SetProductIsTheGeneratedSubgroup) {
  for (const auto& c : peel_cases()) {
    for (int k = 1; k <= c.d + 1; ++k) {
      const auto spec = gamma_spec(c.g, c.n, c.d, k);
      const auto generated = closure<P>(spec.identity(), spec.generators);
      const auto product = set_product(brute_factors(c.g, c.n, c.d, k), c.d, c.g.identity());
      EXPECT_EQ(generated, product) << c.name << " k=" << k;
      EXPECT_EQ(spec.group().order(), Order(product.size())) << c.name << " k=" << k;
      EXPECT_TRUE(generators_peel<Permutation>(spec.generators, spec));
    }
  }
}

TEST(GammaTest, OriginsDescribeGenerators) {
  const auto pairs = testing::normal_pairs();
  const auto spec = gamma_spec(pairs[0].g, pairs[0].n, 2, 2);
  ASSERT_EQ(spec.generators.size(), spec.origins.size());
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    EXPECT_EQ(spec.generators[i], delta(spec.origins[i].first, spec.origins[i].second));
  }
  EXPECT_EQ(spec.factors[0].kind, FactorKind::kIteratedCommutator);
  EXPECT_EQ(spec.factors[1].kind, FactorKind::kIteratedCommutator);
  EXPECT_EQ(spec.factors[2].kind, FactorKind::kLowerCentral);
}

TEST(GammaTest, PeelReportsRejectedCoordinate) {
  const auto pairs = testing::normal_pairs();
  const auto spec = gamma_spec(pairs[0].g, pairs[0].n, 1, 2);
  // The {1} factor is gamma_1(V4) = V4; a transposition there is rejected.
  const Permutation t = Permutation::from_cycles(4, {{0, 1}});
  const auto r = peel(embed(t, SubsetIndex{1, 1}), spec);
  EXPECT_FALSE(r.member);
  ASSERT_TRUE(r.rejected_at.has_value());
  EXPECT_EQ(*r.rejected_at, (SubsetIndex{1, 1}));
  EXPECT_THROW(peel(P::identity(2, Permutation::identity(4)), spec), std::invalid_argument);
}

TEST(GammaTest, SpecValidation) {
  const auto pairs = testing::normal_pairs();
  EXPECT_THROW(gamma_spec(pairs[0].g, pairs[0].n, 2, 0), std::invalid_argument);
  EXPECT_THROW(gamma_spec(pairs[0].g, pairs[0].n, 2, 4), std::invalid_argument);
  const auto s4 = perm("sym:4");
  const Group<Permutation> c3(s4.identity(), {Permutation::from_cycles(4, {{0, 1, 2}})});
  EXPECT_THROW(gamma_spec(s4, c3, 1, 1), NormalityError<Permutation>);
}

TEST(GammaTest, LowerCentralSeriesOfGammaOneForPerfectGroups) {
  const auto a5 = perm("a5:natural");
  for (int d = 1; d <= 2; ++d) {
    const auto report = verify_lcc(a5, a5, d);
    EXPECT_TRUE(report.holds) << "d=" << d;
    ASSERT_EQ(report.terms.size(), static_cast<std::size_t>(d + 1));
    for (const auto& t : report.terms) EXPECT_EQ(t.lcs_order, t.gamma_order);
  }
  EXPECT_THROW(verify_lcc(perm("sym:4"), perm("alt:4"), 1), std::domain_error);
}

TEST(GammaTest, ReflectionAutomorphisms) {
  const auto pairs = testing::normal_pairs();
  for (const auto& pair : {pairs[0], pairs[1], pairs[3]}) {
    for (int d = 1; d <= 2; ++d) {
      const auto spec = gamma_spec(pair.g, pair.n, d, 1);
      for (int i = 1; i <= d; ++i) {
        const auto report = r_automorphism_check(spec, i);
        EXPECT_TRUE(report.holds()) << pair.name << " d=" << d << " i=" << i;
        for (const auto& img : report.kernel_image) EXPECT_TRUE(img.has_value());
      }
    }
  }
  const auto spec2 = gamma_spec(pairs[0].g, pairs[0].n, 1, 2);
  EXPECT_THROW(r_automorphism_check(spec2, 1), std::invalid_argument);
  EXPECT_THROW(r_images(gamma_spec(pairs[0].g, pairs[0].n, 1, 1), 2), std::out_of_range);
}

TEST(GammaTest, ReflectionKernelsFormARegularAction) {
  const auto pairs = testing::normal_pairs();
  const auto spec = gamma_spec(pairs[3].g, pairs[3].n, 2, 1);
  std::vector<std::vector<std::size_t>> gens;
  for (int i = 1; i <= 2; ++i) {
    const auto report = r_automorphism_check(spec, i);
    std::vector<std::size_t> p;
    for (const auto& img : report.kernel_image) p.push_back(*img);
    gens.push_back(p);
  }
  EXPECT_EQ(gens[0], (std::vector<std::size_t>{1, 0, 3, 2}));
  EXPECT_EQ(gens[1], (std::vector<std::size_t>{2, 3, 0, 1}));
  EXPECT_TRUE(acts_regularly(gens, 4));
}

TEST(GammaTest, ActsRegularly) {
  using V = std::vector<std::vector<std::size_t>>;
  EXPECT_TRUE(acts_regularly(V{{1, 0, 3, 2}, {2, 3, 0, 1}}, 4));
  EXPECT_TRUE(acts_regularly(V{{1, 2, 0}}, 3));
  EXPECT_TRUE(acts_regularly(V{}, 1));
  EXPECT_FALSE(acts_regularly(V{{1, 2, 0}, {1, 0, 2}}, 3));
  EXPECT_FALSE(acts_regularly(V{{1, 0, 2}}, 3));
  EXPECT_THROW(acts_regularly(V{{1, 0}}, 3), std::invalid_argument);
}

TEST(GammaTest, SubdirectPairsAgreeWithEnumeration) {
  const auto s4 = perm("sym:4");
  const std::vector<Group<Permutation>> factors{s4, s4};
  Rng rng(5, 9);
  for (int trial = 0; trial < 6; ++trial) {
    const auto pair = random_subdirect_pair(s4, 2, rng);
    ASSERT_TRUE(pair.has_value());
    const auto report = theorem1_check(pair->s, pair->n, factors, pair->layout);
    EXPECT_TRUE(report.holds);
    const auto s_all = elements(pair->s);
    const auto n_all = elements(pair->n);
    EXPECT_TRUE(testing::is_normal(n_all, s_all));
    // gamma_2(S) <= N by enumeration.
    const auto g2 = testing::commutator_closure(pair->s.identity(), s_all, s_all);
    EXPECT_TRUE(testing::is_subset(g2, n_all));
    EXPECT_TRUE(report.gamma_n_in_n);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_EQ(project_block(pair->s, pair->layout, i).order(), Order(24));
      EXPECT_EQ(project_block(pair->n, pair->layout, i).order(), Order(24));
    }
  }
}

TEST(GammaTest, SubdirectCheckRejectsBadInput) {
  const auto s4 = perm("sym:4");
  const auto a4 = perm("alt:4");
  const std::vector<Group<Permutation>> factors{s4, s4};
  const auto layout = BlockLayout::uniform(2, 4);
  const Permutation id4 = Permutation::identity(4);
  std::vector<Permutation> diag, diag_a4, full;
  for (const auto& g : s4.generators()) {
    diag.push_back(direct_sum(g, g));
    full.push_back(direct_sum(g, id4));
    full.push_back(direct_sum(id4, g));
  }
  for (const auto& g : a4.generators()) diag_a4.push_back(direct_sum(g, g));
  const Permutation id8 = Permutation::identity(8);
  const Group<Permutation> s_diag(id8, diag), n_a4(id8, diag_a4), s_full(id8, full);
  try {
    theorem1_check(s_diag, n_a4, factors, layout);
    FAIL() << "expected SubdirectnessError";
  } catch (const SubdirectnessError& e) {
    EXPECT_EQ(e.coordinate(), 0u);
  }
  EXPECT_THROW(theorem1_check(s_full, s_diag, factors, layout), NormalityError<Permutation>);
  EXPECT_THROW(theorem1_check(s_full, s_full, std::vector<Group<Permutation>>{s4}, layout), std::invalid_argument);
  const auto ok = theorem1_check(s_full, s_full, factors, layout);
  EXPECT_TRUE(ok.holds);
  EXPECT_EQ(ok.nilpotency_class, 0);
}

TEST(GammaTest, QuotientClassOfConsecutiveTerms) {
  const auto pairs = testing::normal_pairs();
  // (A5, A5): Gamma_1 = Gamma_2. (D8, C4): Gamma_1 / Gamma_2 has order 2.
  const auto same = theorem1_check(gamma_spec(pairs[3].g, pairs[3].n, 1, 1).group(),
                                   gamma_spec(pairs[3].g, pairs[3].n, 1, 2).group(), pairs[3].g);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.num_factors, 2u);
  EXPECT_EQ(same.nilpotency_class, 0);
  const auto gap = theorem1_check(gamma_spec(pairs[4].g, pairs[4].n, 1, 1).group(),
                                  gamma_spec(pairs[4].g, pairs[4].n, 1, 2).group(), pairs[4].g);
  EXPECT_TRUE(gap.holds);
  EXPECT_EQ(gap.nilpotency_class, 1);
}

TEST(GammaTest, GapWitnessSeparatesConsecutiveTerms) {
  const auto pairs = testing::normal_pairs();
  const auto& d8 = pairs[4];
  const auto gap = strict_gap(d8.g, d8.n, 1);
  ASSERT_TRUE(gap.witness.has_value());
  const auto g1 = gamma_spec(d8.g, d8.n, 1, 1);
  const auto g2 = gamma_spec(d8.g, d8.n, 1, 2);
  const auto report = theorem2_witness(g1, g2, *gap.witness);
  EXPECT_TRUE(report.holds());
  EXPECT_TRUE(report.rejected_at.has_value());
  // Enumeration: Delta_{1}(w) lies in the Gamma_1 set but not the Gamma_2 set.
  const auto x = delta(SubsetIndex::full(1), *gap.witness);
  EXPECT_TRUE(set_product(brute_factors(d8.g, d8.n, 1, 1), 1, d8.g.identity()).contains(x));
  EXPECT_FALSE(set_product(brute_factors(d8.g, d8.n, 1, 2), 1, d8.g.identity()).contains(x));
  EXPECT_FALSE(theorem2_witness(g1, g2, d8.g.identity()).holds());
  EXPECT_THROW(theorem2_witness(g2, g1, *gap.witness), std::invalid_argument);
}

TEST(GammaTest, FamilyWitnessAtSmallRank) {
  const FamilySpec fam = build_family(2);
  const auto g1 = family_gamma_spec(fam, 1, 1);
  const auto g2 = family_gamma_spec(fam, 1, 2);
  EXPECT_TRUE(theorem2_witness(g1, g2, family_gap_witness(fam, 1)).holds());
}

TEST(GammaTest, ProductSubdirectness) {
  const auto pairs = testing::normal_pairs();
  const auto s = gamma_spec(pairs[0].g, pairs[0].n, 1, 2).group();
  EXPECT_TRUE(is_subdirect(s, pairs[0].g, SubsetIndex{1, 0}));
  EXPECT_TRUE(is_subdirect(s, pairs[0].g, SubsetIndex{1, 1}));
  std::vector<P> gens;
  for (const auto& v : pairs[0].n.generators()) gens.push_back(embed(v, SubsetIndex{1, 1}));
  const Group<P> small(P::identity(1, pairs[0].g.identity()), gens);
  EXPECT_FALSE(is_subdirect(small, pairs[0].g, SubsetIndex{1, 1}));
  EXPECT_FALSE(is_subdirect(small, pairs[0].g, SubsetIndex{1, 0}));
}

}  // namespace
}  // namespace sdp
