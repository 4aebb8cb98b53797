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

#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>

#include "sdp/families.hpp"
#include "sdp/gamma.hpp"
#include "sdp/gf4.hpp"
#include "sdp/group_algorithms.hpp"
#include "sdp/series.hpp"

namespace sdp::cli {
namespace {

using Perm = Permutation;

constexpr int kMinFamilyN = 2;
constexpr int kMaxFamilyN = 6;
constexpr int kPeelSamples = 500;
constexpr int kSubgroupSamples = 40;
constexpr int kTheorem1Pairs = 50;

Group<Perm> perm_group(std::size_t degree, std::vector<std::vector<std::vector<Point>>> gens,
                       std::string label) {
  std::vector<Perm> perms;
  for (const auto& cycles : gens) perms.push_back(Perm::from_cycles(degree, cycles));
  return Group<Perm>(Perm::identity(degree), std::move(perms), std::move(label));
}

/// Shared state of one run: engine settings and groups reused across claims.
class Context {
 public:
  explicit Context(const RunSettings& settings) : settings_(settings) {
    config_.seed = settings.seed;
    config_.random_threshold = settings.threshold;
    config_.class_bound = settings.class_bound;
    if (const char* dir = std::getenv("SDP_CACHE_DIR")) config_.cache_dir = dir;
  }

  const RunSettings& settings() const { return settings_; }
  const EngineConfig& config() const { return config_; }
  Rng rng(std::string_view claim) const { return Rng(settings_.seed, stream_id(claim)); }
  bool chains_for(int n) const { return n <= settings_.max_chain_n; }

  FamilyGroups& family(int n) {
    auto& slot = families_[n];
    if (!slot) slot = std::make_unique<FamilyGroups>(build_family(n), config_);
    return *slot;
  }

  /// SL(2, 4) on the 16 vectors of GF(4)^2.
  const Group<Perm>& a5() {
    if (!a5_) {
      const auto gens = sl2_generators();
      const std::vector<Matrix> ms{block_diagonal(1, gens[0]), block_diagonal(1, gens[1])};
      a5_ = matrix_to_perm(ms, 2, "A5");
    }
    return *a5_;
  }
  const Group<Perm>& a5_natural() {
    if (!a5_natural_) a5_natural_ = perm_group(5, {{{0, 1, 2, 3, 4}}, {{0, 1, 2}}}, "A5");
    return *a5_natural_;
  }
  const Group<Perm>& s4() {
    if (!s4_) s4_ = perm_group(4, {{{0, 1, 2, 3}}, {{0, 1}}}, "S4");
    return *s4_;
  }
  const Group<Perm>& a4() {
    if (!a4_) a4_ = perm_group(4, {{{0, 1, 2}}, {{1, 2, 3}}}, "A4");
    return *a4_;
  }
  const Group<Perm>& v4() {
    if (!v4_) v4_ = perm_group(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}, "V4");
    return *v4_;
  }

 private:
  RunSettings settings_;
  EngineConfig config_;
  std::map<int, std::unique_ptr<FamilyGroups>> families_;
  std::optional<Group<Perm>> a5_, a5_natural_, s4_, a4_, v4_;
};

/// Records the first failed condition; later checks keep running so the
/// payload stays complete.
void check(ClaimReport& report, bool ok, const std::string& what) {
  if (ok || report.status == ClaimStatus::kFail) return;
  report.status = ClaimStatus::kFail;
  report.reason = what;
}

std::string dec(const Order& n) { return to_decimal(n); }

/// Block literal for even dimensions, rows of field codes otherwise.
json matrix_json(const Matrix& m) {
  if (m.dim() % 2 == 0) return to_literal(m);
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    std::string row;
    for (int c = 0; c < m.dim(); ++c) row += static_cast<char>('0' + m.at(r, c).code());
    rows.push_back(row);
  }
  return rows;
}

Order pow_order(unsigned base, unsigned exponent) {
  Order out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Generic helpers over direct powers.

template <GroupElement E>
ProductElement<E> random_set_product(const GammaSpec<E>& spec, Rng& rng, const EngineConfig& config) {
  ProductElement<E> x = spec.identity();
  for (std::uint32_t mask : shortlex_masks(spec.d)) {
    const SubsetIndex a{spec.d, mask};
    x = x * delta(a, spec.factor(a).group.chain(config).random_element(rng));
  }
  return x;
}

template <GroupElement E>
ProductElement<E> random_power_element(const Group<E>& g, int d, Rng& rng, const EngineConfig& config) {
  std::vector<E> comps;
  for (std::size_t r = 0; r < (std::size_t{1} << d); ++r) comps.push_back(g.chain(config).random_element(rng));
  return ProductElement<E>(d, std::move(comps));
}

template <GroupElement E>
std::vector<GammaSpec<E>> gamma_specs(const Group<E>& g, const Group<E>& n, int d, const EngineConfig& config) {
  std::vector<GammaSpec<E>> out;
  for (int k = 1; k <= d + 1; ++k) out.push_back(gamma_spec(g, n, d, k, config));
  return out;
}

std::vector<GammaSpec<Matrix>> family_specs(FamilyGroups& fam, int d) {
  std::vector<Group<Matrix>> iterated, lower;
  for (int s = 0; s <= d; ++s) iterated.push_back(fam.iterated(s));
  lower.push_back(fam.n());
  for (int s = 1; s <= d; ++s) lower.push_back(fam.lower_central(s));
  std::vector<GammaSpec<Matrix>> out;
  for (int k = 1; k <= d + 1; ++k) {
    out.push_back(gamma_spec_from_terms<Matrix>(fam.g(), fam.n(), d, k, iterated, lower));
  }
  return out;
}

/// Set product closed under x y^-1 on samples, generators inside the set
/// product, projections onto every coordinate, and Gamma_{k+1} <= Gamma_k.
template <GroupElement E>
json subgroup_instance(const std::vector<GammaSpec<E>>& specs, const std::string& name, Rng& rng,
                       const EngineConfig& config, ClaimReport& report) {
  json out = {{"instance", name}, {"d", specs.front().d}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const GammaSpec<E>& spec = specs[i];
    const std::string where = name + " k=" + std::to_string(spec.k);
    check(report, generators_peel<E>(spec.generators, spec, config), where + ": generator outside the set product");
    if (i + 1 < specs.size()) {
      check(report, generators_peel<E>(specs[i + 1].generators, spec, config),
            where + ": next term not contained");
    }
    int closed = 0;
    for (int s = 0; s < kSubgroupSamples; ++s) {
      const auto x = random_set_product(spec, rng, config);
      const auto y = random_set_product(spec, rng, config);
      if (peel_membership(x * y.inverse(), spec, config)) ++closed;
    }
    check(report, closed == kSubgroupSamples, where + ": set product not closed");
    const auto group = spec.group();
    bool subdirect = true;
    for (std::uint32_t mask : shortlex_masks(spec.d)) {
      subdirect = subdirect && is_subdirect(group, spec.g, SubsetIndex{spec.d, mask}, config);
    }
    check(report, subdirect, where + ": not subdirect");
    out["terms"].push_back({{"k", spec.k}, {"closed_samples", closed}, {"subdirect", subdirect}});
  }
  return out;
}

/// Peel against chain membership on Gamma_k, half the samples drawn from
/// Gamma_1 and half from the whole direct power.
template <GroupElement E>
json peel_instance(const std::vector<GammaSpec<E>>& specs, const std::string& name, Rng& rng,
                   const EngineConfig& config, ClaimReport& report) {
  json out = {{"instance", name}, {"d", specs.front().d}};
  for (const GammaSpec<E>& spec : specs) {
    const auto group = spec.group();
    int accepted = 0, agree = 0;
    for (int s = 0; s < kPeelSamples; ++s) {
      const auto x = s % 2 == 0 ? random_set_product(specs.front(), rng, config)
                                : random_power_element(spec.g, spec.d, rng, config);
      const bool by_peel = peel_membership(x, spec, config);
      const bool by_chain = group.contains(x, config);
      accepted += by_peel ? 1 : 0;
      agree += by_peel == by_chain ? 1 : 0;
    }
    check(report, agree == kPeelSamples, name + " k=" + std::to_string(spec.k) + ": peel disagrees with chain");
    out["terms"].push_back({{"k", spec.k},
                            {"order", dec(group.order(config))},
                            {"samples", kPeelSamples},
                            {"accepted", accepted},
                            {"agree", agree}});
  }
  return out;
}

template <GroupElement E>
json lcc_instance(const Group<E>& g, const Group<E>& n, int d, const std::string& name, const EngineConfig& config,
                  ClaimReport& report) {
  const auto lcc = verify_lcc(g, n, d, config);
  json out = {{"instance", name}, {"d", d}};
  for (const auto& t : lcc.terms) {
    out["terms"].push_back({{"k", t.k}, {"lcs_order", dec(t.lcs_order)}, {"gamma_order", dec(t.gamma_order)},
                            {"equal", t.equal}});
  }
  check(report, lcc.holds, name + ": lower central series differs from Gamma_k");
  return out;
}

template <GroupElement E>
json ri_instance(const GammaSpec<E>& spec, const std::string& name, const EngineConfig& config, ClaimReport& report) {
  json out = {{"instance", name}, {"d", spec.d}};
  std::vector<std::vector<std::size_t>> kernel_perms;
  for (int i = 1; i <= spec.d; ++i) {
    const auto r = r_automorphism_check(spec, i, config);
    const std::string where = name + " r_" + std::to_string(i);
    check(report, r.homomorphism, where + ": not a homomorphism");
    check(report, r.bijective, where + ": not bijective");
    check(report, r.involution, where + ": not an involution");
    check(report, r.symmetric_difference, where + ": kernels not permuted by symmetric difference");
    std::vector<std::size_t> perm;
    for (const auto& b : r.kernel_image) perm.push_back(b.value_or(0));
    kernel_perms.push_back(perm);
    out["maps"].push_back({{"i", i},
                           {"order", dec(r.order)},
                           {"homomorphism", r.homomorphism},
                           {"bijective", r.bijective},
                           {"involution", r.involution},
                           {"kernel_permutation", perm}});
  }
  const bool regular = acts_regularly(kernel_perms, std::size_t{1} << spec.d);
  check(report, regular, name + ": r_1..r_d do not act regularly on the kernels");
  out["regular"] = regular;
  return out;
}

// ---------------------------------------------------------------------------
// span

void claim_lem_a(Context&, ClaimReport& report) {
  const auto diffs = conjugation_differences();
  const auto t = enumerate_T();
  const bool traceless = std::all_of(diffs.begin(), diffs.end(), [](const Mat2& m) { return m.trace().is_zero(); });
  const std::size_t dim = span_dim(diffs);
  report.data = {{"differences", diffs.size()}, {"span_dim", dim}, {"trace_zero_count", t.size()},
                 {"trace_zero_dim", span_dim(t)}};
  check(report, traceless, "a difference has nonzero trace");
  check(report, dim == 3, "span dimension " + std::to_string(dim) + ", expected 3");
}

void claim_lem_b(Context&, ClaimReport& report) {
  const auto products = trace_zero_products();
  const std::size_t dim = span_dim(products);
  report.data = {{"products", products.size()}, {"span_dim", dim}};
  check(report, dim == 4, "span dimension " + std::to_string(dim) + ", expected 4");
}

// ---------------------------------------------------------------------------
// sl6 and sl2n

bool all_det_one(std::span<const Matrix> ms) {
  return std::all_of(ms.begin(), ms.end(), [](const Matrix& m) { return m.determinant() == FieldElement::one(); });
}

void claim_sl6_1(Context& ctx, ClaimReport& report) {
  FamilyGroups& fam = ctx.family(3);
  const auto& cfg = ctx.config();
  const bool det = all_det_one(fam.spec().g);
  const bool m_normal = !normality_witness(fam.m(), fam.g(), cfg);
  const bool n_normal = !normality_witness(fam.n(), fam.g(), cfg);
  const bool n_in_m = is_subgroup(fam.n(), fam.m(), cfg);
  const bool m_in_g = is_subgroup(fam.m(), fam.g(), cfg);
  report.data = {{"generators_det_one", det}, {"M_normal", m_normal}, {"N_normal", n_normal},
                 {"N_in_M", n_in_m}, {"M_in_G", m_in_g}};
  check(report, det, "a generator of G has determinant other than 1");
  check(report, m_in_g && m_normal, "M is not normal in G");
  check(report, n_normal, "N is not normal in G");
  check(report, n_in_m, "N is not contained in M");
}

void claim_sl6_2(Context& ctx, ClaimReport& report) {
  FamilyGroups& fam = ctx.family(3);
  const auto& cfg = ctx.config();
  const Order g = fam.g().order(cfg), h = fam.h().order(cfg), m = fam.m().order(cfg);
  const bool perfect = is_perfect(fam.g(), cfg);
  const Order hm = commutator_group(fam.h(), fam.m(), cfg).order(cfg);
  report.data = {{"G", dec(g)}, {"H", dec(h)}, {"M", dec(m)}, {"perfect", perfect}, {"HM_commutator", dec(hm)}};
  check(report, g == Order(62914560), "|G| = " + dec(g) + ", expected 62914560");
  check(report, h == 60, "|H| = " + dec(h));
  check(report, m == pow_order(4, 10), "|M| = " + dec(m));
  check(report, g == h * m, "H and M do not intersect trivially");
  check(report, hm == m, "[H, M] is not M");
  check(report, perfect, "G is not perfect");
}

void claim_sl6_3(Context& ctx, ClaimReport& report) {
  FamilyGroups& fam = ctx.family(3);
  const auto& cfg = ctx.config();
  const Order n = fam.n().order(cfg);
  const Group<Matrix>& gn = fam.iterated(1);
  bool all_in = true;
  for (const Mat2& p : enumerate_T()) all_in = all_in && gn.contains(elementary_block(3, 0, 2, p), cfg);
  report.data = {{"N", dec(n)}, {"GN", dec(gn.order(cfg))}, {"E13_T_members", all_in}};
  check(report, n == 4096, "|N| = " + dec(n) + ", expected 4096");
  check(report, gn.order(cfg) == 64, "|[G,N]| = " + dec(gn.order(cfg)) + ", expected 64");
  check(report, all_in, "some E13(P), P trace zero, is missing from [G,N]");
}

void claim_sl6_4(Context& ctx, ClaimReport& report) {
  FamilyGroups& fam = ctx.family(3);
  const auto& cfg = ctx.config();
  const Group<Matrix>& nn = fam.lower_central(2);
  const Group<Matrix>& gnn = fam.iterated(2);
  bool scalars_in = true;
  for (FieldElement a : kFieldElements) scalars_in = scalars_in && nn.contains(elementary_block(3, 0, 2, Mat2::scalar(a)), cfg);
  const auto gap = strict_gap(fam.g(), fam.n(), 2, cfg);
  report.data = {{"NN", dec(nn.order(cfg))}, {"GNN", dec(gnn.order(cfg))}, {"E13_scalar_members", scalars_in},
                 {"strict", gap.strict}};
  if (gap.witness) report.data["witness"] = to_literal(*gap.witness);
  check(report, nn.order(cfg) == 4, "|[N,N]| = " + dec(nn.order(cfg)) + ", expected 4");
  check(report, scalars_in, "some E13(aI) is missing from [N,N]");
  check(report, gnn.order(cfg) == 1, "|[G,N,N]| = " + dec(gnn.order(cfg)) + ", expected 1");
  check(report, gap.strict && gap.contained, "[N,N] > [G,N,N] fails");
}

void claim_sl6_perm(Context& ctx, ClaimReport& report) {
  FamilyGroups& fam = ctx.family(3);
  const auto& cfg = ctx.config();
  const Group<Perm> g = matrix_to_perm(fam.spec().g, 6, "G");
  const Group<Perm> n = matrix_to_perm(fam.spec().nn, 6, "N");
  const Order a5 = ctx.a5().order(cfg);
  report.data = {{"degree", g.identity().degree()}, {"G", dec(g.order(cfg))}, {"N", dec(n.order(cfg))},
                 {"A5_degree", ctx.a5().identity().degree()}, {"A5", dec(a5)}};
  check(report, g.order(cfg) == fam.g().order(cfg), "permutation and matrix orders of G differ");
  check(report, n.order(cfg) == fam.n().order(cfg), "permutation and matrix orders of N differ");
  check(report, a5 == 60, "|A5| = " + dec(a5));
}

void claim_sl2n_g(Context& ctx, ClaimReport& report, int n) {
  const auto& cfg = ctx.config();
  if (!ctx.chains_for(n)) {
    const FamilySpec fam = build_family(n);
    report.status = ClaimStatus::kPassStructural;
    report.reason = "chains disabled above n = " + std::to_string(ctx.settings().max_chain_n);
    bool fits = all_det_one(fam.g);
    for (const Matrix& x : fam.g) fits = fits && structural_member(fam, FamilyMember::kG, x);
    for (const Matrix& x : fam.m) fits = fits && structural_member(fam, FamilyMember::kM, x);
    for (const Matrix& x : fam.nn) fits = fits && structural_member(fam, FamilyMember::kN, x);
    bool normal = true;
    for (const Matrix& g : fam.g) {
      for (const Matrix& x : fam.m) normal = normal && structural_member(fam, FamilyMember::kM, conjugate(x, g));
      for (const Matrix& x : fam.nn) normal = normal && structural_member(fam, FamilyMember::kN, conjugate(x, g));
    }
    report.data = {{"n", n}, {"generators_fit", fits}, {"conjugates_fit", normal},
                   {"G_predicted", dec(structural_count(fam, FamilyMember::kG))},
                   {"M_predicted", dec(structural_count(fam, FamilyMember::kM))},
                   {"N_predicted", dec(structural_count(fam, FamilyMember::kN))}};
    check(report, fits, "a generator violates its block predicate");
    check(report, normal, "a conjugate of an M or N generator violates its predicate");
    return;
  }
  FamilyGroups& fam = ctx.family(n);
  const FamilySpec& spec = fam.spec();
  const Order g = fam.g().order(cfg), m = fam.m().order(cfg), nn = fam.n().order(cfg);
  const bool det = all_det_one(spec.g);
  const bool normal = !normality_witness(fam.m(), fam.g(), cfg) && !normality_witness(fam.n(), fam.g(), cfg);
  const bool perfect = is_perfect(fam.g(), cfg);
  const Order g_pred = structural_count(spec, FamilyMember::kG);
  const Order m_pred = structural_count(spec, FamilyMember::kM);
  const Order n_pred = structural_count(spec, FamilyMember::kN);
  report.data = {{"n", n}, {"G", dec(g)}, {"M", dec(m)}, {"N", dec(nn)}, {"G_predicted", dec(g_pred)},
                 {"M_predicted", dec(m_pred)}, {"N_predicted", dec(n_pred)}, {"perfect", perfect}};
  check(report, det, "a generator of G has determinant other than 1");
  check(report, normal, "M or N is not normal in G");
  check(report, perfect, "G is not perfect");
  check(report, g == g_pred && g == 60 * m, "|G| = " + dec(g) + ", predicted " + dec(g_pred));
  check(report, m == m_pred, "|M| = " + dec(m) + ", predicted " + dec(m_pred));
  check(report, nn == n_pred, "|N| = " + dec(nn) + ", predicted " + dec(n_pred));
}

void claim_sl2n_d(Context& ctx, ClaimReport& report, int n, int d) {
  CrossValidation cv;
  if (ctx.chains_for(n)) {
    cv = cross_validate(ctx.family(n), d);
  } else {
    report.status = ClaimStatus::kPassStructural;
    report.reason = "chains disabled above n = " + std::to_string(ctx.settings().max_chain_n);
    cv = cross_validate_structural(build_family(n), d, ctx.config());
  }
  report.data = {{"n", n},
                 {"d", d},
                 {"structural_only", cv.structural_only},
                 {"GN_d_predicted", dec(cv.lower_predicted)},
                 {"gamma_d_N_predicted", dec(cv.upper_predicted)},
                 {"generators_fit", cv.generators_fit},
                 {"samples_member", cv.samples_member},
                 {"strict", cv.strict}};
  if (!cv.structural_only) {
    report.data["GN_d"] = dec(cv.lower_chain_order);
    report.data["gamma_d_N"] = dec(cv.upper_chain_order);
  }
  if (cv.witness) report.data["witness"] = to_literal(*cv.witness);
  if (cv.offending) report.data["offending"] = to_literal(*cv.offending);
  check(report, cv.pass(), cv.failure);
}

// ---------------------------------------------------------------------------
// gamma

void claim_dc(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  Rng rng = ctx.rng(report.id);
  using P = ProductElement<Perm>;
  constexpr int d = 2;
  const auto masks = shortlex_masks(d);
  int element_checks = 0, group_checks = 0;
  const std::vector<std::pair<std::string, std::vector<Group<Perm>>>> families = {
      {"A5", {ctx.a5_natural()}}, {"S4", {ctx.s4(), ctx.a4(), ctx.v4()}}};
  for (const auto& [name, normals] : families) {
    const Group<Perm>& g = normals.front();
    const P id = P::identity(d, g.identity());
    for (const Group<Perm>& k : normals) {
      for (const Group<Perm>& l : normals) {
        const Group<Perm> kl = commutator_group(k, l, cfg);
        for (std::uint32_t a : masks) {
          for (std::uint32_t b : masks) {
            const SubsetIndex sa{d, a}, sb{d, b}, sab{d, a | b};
            for (int s = 0; s < 4; ++s) {
              const Perm x = k.chain(cfg).random_element(rng), y = l.chain(cfg).random_element(rng);
              const bool ok = commutator(delta(sa, x), delta(sb, y)) == delta(sab, commutator(x, y));
              check(report, ok, name + ": elementwise identity fails");
              ++element_checks;
            }
            std::vector<P> ka, lb, rhs;
            for (const Perm& x : k.generators()) ka.push_back(delta(sa, x));
            for (const Perm& y : l.generators()) lb.push_back(delta(sb, y));
            for (const Perm& z : kl.generators()) rhs.push_back(delta(sab, z));
            const Group<P> lhs = commutator_group(Group<P>(id, ka), Group<P>(id, lb), cfg);
            const bool same = same_group(lhs, Group<P>(id, rhs), cfg);
            check(report, same, name + ": [Delta_A(K), Delta_B(L)] differs from Delta_AuB([K,L]) at " +
                                    to_string(sa) + ", " + to_string(sb));
            ++group_checks;
          }
        }
      }
    }
  }
  report.data = {{"d", d}, {"element_checks", element_checks}, {"group_checks", group_checks}};
}

void claim_kl(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  FamilyGroups& fam = ctx.family(3);
  constexpr int d = 2;
  auto iterated = [&](int s) -> const Group<Matrix>& { return fam.iterated(s); };
  auto lower = [&](int s) -> const Group<Matrix>& { return s == 0 ? fam.g() : fam.lower_central(s); };
  // Both arguments are normal in G, so their commutator is generated as a
  // normal subgroup of <K, L> by generator commutators; a normal target
  // containing those contains the whole commutator.
  auto inside = [&](const Group<Matrix>& k, const Group<Matrix>& l, const Group<Matrix>& target) {
    for (const Matrix& x : k.generators()) {
      for (const Matrix& y : l.generators()) {
        if (!target.contains(commutator(x, y), cfg)) return false;
      }
    }
    return true;
  };
  int checks = 0;
  const auto masks = shortlex_masks(d);
  for (std::uint32_t a : masks) {
    for (std::uint32_t b : masks) {
      const int sa = std::popcount(a), sb = std::popcount(b), sab = std::popcount(a | b);
      const std::string where = to_string(SubsetIndex{d, a}) + ", " + to_string(SubsetIndex{d, b});
      check(report, inside(iterated(sa), iterated(sb), iterated(sab)), "item 1 fails at " + where);
      ++checks;
      if (b != 0) {
        check(report, inside(iterated(sa), lower(sb), iterated(sab)), "item 2 fails at " + where);
        ++checks;
      }
      if (a != 0 && b != 0) {
        check(report, inside(lower(sa), lower(sb), lower(sab)), "item 3 fails at " + where);
        ++checks;
      }
    }
  }
  report.data = {{"group", "SL(6,4) block family"}, {"d", d}, {"inclusions", checks}};
}

void claim_subgroup(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  Rng rng = ctx.rng(report.id);
  for (int d : {1, 2}) {
    report.data["instances"].push_back(
        subgroup_instance(gamma_specs(ctx.a5(), ctx.a5(), d, cfg), "(A5,A5)", rng, cfg, report));
  }
  report.data["instances"].push_back(
      subgroup_instance(gamma_specs(ctx.s4(), ctx.v4(), 2, cfg), "(S4,V4)", rng, cfg, report));
  report.data["instances"].push_back(
      subgroup_instance(gamma_specs(ctx.s4(), ctx.a4(), 2, cfg), "(S4,A4)", rng, cfg, report));
  report.data["instances"].push_back(subgroup_instance(family_specs(ctx.family(3), 2), "SL(6,4) (G,N)", rng, cfg, report));
}

void claim_lcc(Context& ctx, ClaimReport& report, int d) {
  const auto& cfg = ctx.config();
  report.data["instances"].push_back(lcc_instance(ctx.a5(), ctx.a5(), d, "(A5,A5)", cfg, report));
  FamilyGroups& fam = ctx.family(2);
  report.data["instances"].push_back(lcc_instance(fam.g(), fam.n(), d, "SL(4,4) (G,N)", cfg, report));
}

void claim_peel(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  Rng rng = ctx.rng(report.id);
  for (int d : {1, 2}) {
    report.data["instances"].push_back(peel_instance(gamma_specs(ctx.a5(), ctx.a5(), d, cfg), "(A5,A5)", rng, cfg, report));
  }
  report.data["instances"].push_back(peel_instance(gamma_specs(ctx.s4(), ctx.v4(), 2, cfg), "(S4,V4)", rng, cfg, report));
  report.data["instances"].push_back(peel_instance(gamma_specs(ctx.s4(), ctx.a4(), 2, cfg), "(S4,A4)", rng, cfg, report));
  for (int d : {1, 2}) {
    report.data["instances"].push_back(peel_instance(family_specs(ctx.family(2), d), "SL(4,4) (G,N)", rng, cfg, report));
  }
}

// ---------------------------------------------------------------------------
// thm1

void claim_thm1(Context& ctx, ClaimReport& report, int count) {
  const auto& cfg = ctx.config();
  Rng rng = ctx.rng(report.id);
  const std::vector<std::pair<std::string, const Group<Perm>*>> factors = {{"A5", &ctx.a5_natural()},
                                                                             {"S4", &ctx.s4()}};
  for (const auto& [name, factor] : factors) {
    std::map<int, int> classes;
    int pairs = 0, holds = 0;
    for (int i = 0; i < kTheorem1Pairs; ++i) {
      const auto pair = random_subdirect_pair(*factor, static_cast<std::size_t>(count), rng, cfg);
      check(report, pair.has_value(), name + ": no subdirect pair found");
      if (!pair) continue;
      ++pairs;
      const std::vector<Group<Perm>> fs(static_cast<std::size_t>(count), *factor);
      const auto r = theorem1_check(pair->s, pair->n, std::span<const Group<Perm>>(fs), pair->layout, cfg);
      holds += r.holds ? 1 : 0;
      ++classes[r.nilpotency_class.value_or(-1)];
    }
    check(report, holds == pairs, name + ": gamma_n(S) <= N fails for some pair");
    json hist = json::object();
    for (const auto& [c, k] : classes) hist[std::to_string(c)] = k;
    report.data["factors"].push_back({{"factor", name}, {"pairs", pairs}, {"holds", holds}, {"class_histogram", hist}});
  }
  report.data["n"] = count;
}

void claim_thm1_gamma(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  for (int n : {2, 3}) {
    constexpr int d = 1;
    FamilyGroups& fam = ctx.family(n);
    const auto specs = family_specs(fam, d);
    const auto s = specs.front().group("Gamma_1");
    const auto top = specs.back().group("Gamma_2");
    const auto r = theorem1_check(s, top, fam.g(), cfg);
    const std::string name = "SL(" + std::to_string(2 * n) + ",4)";
    report.data["instances"].push_back({{"instance", name}, {"d", d}, {"factors", r.num_factors},
                                        {"class", r.nilpotency_class ? json(*r.nilpotency_class) : json()}});
    check(report, r.holds, name + ": class bound fails");
    check(report, r.nilpotency_class == d, name + ": quotient class is not exactly " + std::to_string(d));
  }
}

// ---------------------------------------------------------------------------
// thm2

void claim_thm2(Context& ctx, ClaimReport& report, int n, int d) {
  const FamilySpec fam = build_family(n);
  const auto gd = family_gamma_spec(fam, d, d);
  const auto gd1 = family_gamma_spec(fam, d, d + 1);
  const Matrix w = family_gap_witness(fam, d);
  const auto r = theorem2_witness(gd, gd1, w, ctx.config());
  report.data = {{"n", n}, {"d", d}, {"witness", to_literal(w)}, {"in_gamma_d", r.in_gamma_d},
                 {"in_gamma_d_plus_1", r.in_gamma_d_plus_1}, {"factors", std::size_t{1} << d}};
  if (r.rejected_at) report.data["rejected_at"] = to_string(*r.rejected_at);
  check(report, r.in_gamma_d, "witness not in Gamma_d");
  check(report, !r.in_gamma_d_plus_1, "witness lies in Gamma_{d+1}");
}

// ---------------------------------------------------------------------------
// remark_ri

void claim_ri(Context& ctx, ClaimReport& report, int d) {
  const auto& cfg = ctx.config();
  report.data["instances"].push_back(ri_instance(gamma_spec(ctx.a5(), ctx.a5(), d, 1, cfg), "(A5,A5)", cfg, report));
  report.data["instances"].push_back(ri_instance(gamma_spec(ctx.s4(), ctx.v4(), d, 1, cfg), "(S4,V4)", cfg, report));
  report.data["instances"].push_back(ri_instance(gamma_spec(ctx.s4(), ctx.a4(), d, 1, cfg), "(S4,A4)", cfg, report));
}

// ---------------------------------------------------------------------------
// unitri

void claim_unitri_orders(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  const std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 4}, {3, 4}, {4, 4}};
  for (const auto& [m, q] : cases) {
    const Group<Matrix> h = unitriangular_group(m, q);
    const Order expected = pow_order(static_cast<unsigned>(q), static_cast<unsigned>(m * (m - 1) / 2));
    const auto lcs = lower_central_series(h, m + 1, cfg);
    const std::string where = "U_" + std::to_string(m) + "(F_" + std::to_string(q) + ")";
    check(report, h.order(cfg) == expected, where + " has order " + dec(h.order(cfg)));
    check(report, lcs.class_or_length == m - 1, where + " is not of class m - 1");
    report.data["groups"].push_back({{"m", m}, {"q", q}, {"order", dec(h.order(cfg))},
                                     {"class", lcs.class_or_length ? json(*lcs.class_or_length) : json()}});
  }
}

void claim_unitri_gap(Context& ctx, ClaimReport& report) {
  const auto& cfg = ctx.config();
  const auto w = counterexample_search(10, 3, 3, cfg);
  check(report, w.has_value(), "no witness with m <= 10, d <= 3, t <= 3");
  if (!w) return;
  const Group<Matrix> h = unitriangular_group(w->m, 2);
  const Group<Matrix> k = derived_term(h, w->t - 1, cfg);
  const auto gap = strict_gap(h, k, w->d, cfg);
  report.data = {{"m", w->m}, {"d", w->d}, {"t", w->t}, {"upper_order", dec(gap.upper_order)},
                 {"lower_order", dec(gap.lower_order)}, {"strict", gap.strict}};
  if (gap.witness) report.data["witness"] = matrix_json(*gap.witness);
  check(report, gap.strict, "strict_gap does not confirm the witness");
}

// ---------------------------------------------------------------------------
// Catalog

struct ClaimDef {
  ClaimInfo info;
  std::function<void(Context&, ClaimReport&)> run;
};

std::vector<ClaimDef> build_catalog() {
  std::vector<ClaimDef> out;
  auto add = [&](std::string id, std::string suite, std::string statement, auto fn) {
    out.push_back({{std::move(id), std::move(suite), std::move(statement)}, std::move(fn)});
  };
  add("lemA", "span", "the differences B^A - B (B trace zero, A in SL(2,4)) span the trace-zero space, dimension 3",
      claim_lem_a);
  add("lemB", "span", "products of two trace-zero matrices span all 2x2 matrices, dimension 4", claim_lem_b);

  add("lem:SL6:1", "sl6", "G is generated by determinant-one matrices; N <= M are normal in G", claim_sl6_1);
  add("lem:SL6:2", "sl6", "G = HM is perfect of order 60 * 4^10 = 62914560", claim_sl6_2);
  add("lem:SL6:3", "sl6", "|N| = 4096 and [G,N] = {E13(P) : P trace zero} has order 64", claim_sl6_3);
  add("lem:SL6:4", "sl6", "[N,N] = {E13(aI)} has order 4 and [G,N,N] = 1", claim_sl6_4);
  add("sl6:perm", "sl6", "the permutation action on GF(4)^6 (degree 4096) reproduces the matrix orders",
      claim_sl6_perm);

  for (int n = kMinFamilyN; n <= kMaxFamilyN; ++n) {
    const std::string tag = "lem:SL2n:n=" + std::to_string(n);
    add(tag + ":G", "sl2n", "n = " + std::to_string(n) + ": M, N normal in the perfect group G = HM; orders match the block predicates",
        [n](Context& ctx, ClaimReport& r) { claim_sl2n_g(ctx, r, n); });
    for (int d = 1; d < n; ++d) {
      add(tag + ":d=" + std::to_string(d), "sl2n",
          "n = " + std::to_string(n) + ", d = " + std::to_string(d) +
              ": [G,dN] and gamma_d(N) match their block predicates and gamma_d(N) > [G,dN]",
          [n, d](Context& ctx, ClaimReport& r) { claim_sl2n_d(ctx, r, n, d); });
    }
  }

  add("lem:DC", "gamma", "[Delta_A(K), Delta_B(L)] = Delta_{A u B}([K,L]) for normal K, L", claim_dc);
  add("lem:KL:d=2", "gamma", "commutators of the Gamma factors land in the factor of the union (SL(6,4))", claim_kl);
  add("lem:subgroup", "gamma", "Gamma_k is a subdirect subgroup and Gamma_{k+1} <= Gamma_k", claim_subgroup);
  add("lem:lcc:d=1", "gamma", "gamma_k(Gamma_1) = Gamma_k for perfect G, d = 1",
      [](Context& ctx, ClaimReport& r) { claim_lcc(ctx, r, 1); });
  add("lem:lcc:d=2", "gamma", "gamma_k(Gamma_1) = Gamma_k for perfect G, d = 2",
      [](Context& ctx, ClaimReport& r) { claim_lcc(ctx, r, 2); });
  add("peel:oracle", "gamma", "peeling membership agrees with chain membership on Gamma_k", claim_peel);

  add("thm1:n=2", "thm1", "S/N is nilpotent of class at most 1 for subdirect N <= S in a product of 2 factors",
      [](Context& ctx, ClaimReport& r) { claim_thm1(ctx, r, 2); });
  add("thm1:n=3", "thm1", "S/N is nilpotent of class at most 2 for subdirect N <= S in a product of 3 factors",
      [](Context& ctx, ClaimReport& r) { claim_thm1(ctx, r, 3); });
  add("thm1:gamma", "thm1", "Gamma_1 / Gamma_2 over SL(2n,4), n = 2, 3, has class exactly 1", claim_thm1_gamma);

  for (int d : {1, 2}) {
    add("thm2:sl6:d=" + std::to_string(d), "thm2",
        "Delta_[d](E_{1,1+d}(aI)) lies in Gamma_d but not in Gamma_{d+1} (SL(6,4), d = " + std::to_string(d) + ")",
        [d](Context& ctx, ClaimReport& r) { claim_thm2(ctx, r, 3, d); });
  }
  for (int d = 1; d <= 3; ++d) {
    add("thm2:sl2n:n=4:d=" + std::to_string(d), "thm2",
        "Delta_[d](E_{1,1+d}(aI)) lies in Gamma_d but not in Gamma_{d+1} (SL(8,4), d = " + std::to_string(d) + ")",
        [d](Context& ctx, ClaimReport& r) { claim_thm2(ctx, r, 4, d); });
  }

  for (int d : {1, 2}) {
    add("rem:ri:d=" + std::to_string(d), "remark_ri",
        "each r_i is an involutive automorphism of Gamma_1 permuting projection kernels by A -> A xor {i}; "
        "together they act regularly (d = " + std::to_string(d) + ")",
        [d](Context& ctx, ClaimReport& r) { claim_ri(ctx, r, d); });
  }

  add("unitri:orders", "unitri", "U_m(F_q) has order q^(m(m-1)/2) and class m - 1", claim_unitri_orders);
  add("unitri:gap", "unitri", "some U_m(F_2), m <= 10, has gamma_d(H^(t-1)) > [H, d H^(t-1)] with d, t <= 3",
      claim_unitri_gap);
  return out;
}

const std::vector<ClaimDef>& catalog() {
  static const std::vector<ClaimDef> defs = build_catalog();
  return defs;
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& def : catalog()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"span", "sl6",       "sl2n",   "gamma", "thm1",
                                                 "thm2", "remark_ri", "unitri", "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

RunReport run_suite(const RunSettings& settings, const std::function<void(const ClaimReport&)>& progress) {
  if (!is_suite(settings.suite)) throw std::invalid_argument("unknown suite '" + settings.suite + "'");
  using Clock = std::chrono::steady_clock;
  const auto run_start = Clock::now();
  Context ctx(settings);
  RunReport report;
  report.settings = settings;
  for (const ClaimDef& def : catalog()) {
    if (settings.suite != "all" && def.info.suite != settings.suite) continue;
    ClaimReport claim;
    claim.id = def.info.id;
    claim.status = ClaimStatus::kPass;
    const auto start = Clock::now();
    try {
      def.run(ctx, claim);
    } catch (const std::exception& e) {
      claim.status = ClaimStatus::kFail;
      claim.reason = e.what();
    }
    claim.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (progress) progress(claim);
    report.claims.push_back(std::move(claim));
  }
  report.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - run_start).count();
  return report;
}

}  // namespace sdp::cli
