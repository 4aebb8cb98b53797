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

#include "sdp/families.hpp"

#include <stdexcept>
#include <utility>

#include "sdp/series.hpp"

namespace sdp {
namespace {

constexpr FieldElement kAlpha = FieldElement::alpha();

bool is_unitriangular_member(FamilyMember member) {
  return member == FamilyMember::kM || member == FamilyMember::kN ||
         member == FamilyMember::kIteratedGN || member == FamilyMember::kGammaN;
}

void check_d(FamilyMember member, int d) {
  if (member == FamilyMember::kIteratedGN && d < 0) throw std::invalid_argument("[G, d N] needs d >= 0");
  if (member == FamilyMember::kGammaN && d < 1) throw std::invalid_argument("gamma_d(N) needs d >= 1");
}

// [G, 0 N] is G; every other query is answered by the member itself.
FamilyMember normalize(FamilyMember member, int d) {
  return member == FamilyMember::kIteratedGN && d == 0 ? FamilyMember::kG : member;
}

std::size_t shape_size(BlockShape shape) {
  std::size_t count = 0;
  for (unsigned i = 0; i < 256; ++i) count += block_fits(shape, Mat2::from_index(i)) ? 1 : 0;
  return count;
}

std::vector<Mat2> shape_basis(BlockShape shape) {
  std::vector<Mat2> base;
  switch (shape) {
    case BlockShape::kZero:
      return {};
    case BlockShape::kScalar:
      base = {Mat2::identity()};
      break;
    case BlockShape::kTraceZero: {
      const auto b = trace_zero_basis();
      base.assign(b.begin(), b.end());
      break;
    }
    case BlockShape::kFree: {
      const auto b = matrix_unit_basis();
      base.assign(b.begin(), b.end());
      break;
    }
  }
  // An F_2-basis: B and aB for every B in a GF(4)-basis.
  std::vector<Mat2> out;
  for (const Mat2& b : base) {
    out.push_back(b);
    out.push_back(kAlpha * b);
  }
  return out;
}

Mat2 sample_block(BlockShape shape, Rng& rng) {
  while (true) {
    const Mat2 b = Mat2::from_index(static_cast<unsigned>(rng.below(256)));
    if (block_fits(shape, b)) return b;
  }
}

bool unitriangular_fits(const FamilySpec& fam, FamilyMember member, const Matrix& x, int d) {
  if (!is_block_upper_unitriangular(x)) return false;
  for (int i = 0; i < fam.n; ++i) {
    for (int j = i + 1; j < fam.n; ++j) {
      if (!block_fits(block_shape(member, d, j - i), x.block(i, j))) return false;
    }
  }
  return true;
}

Matrix unitriangular_sample(const FamilySpec& fam, FamilyMember member, int d, Rng& rng) {
  Matrix x = block_identity(fam.n);
  for (int i = 0; i < fam.n; ++i) {
    for (int j = i + 1; j < fam.n; ++j) x.set_block(i, j, sample_block(block_shape(member, d, j - i), rng));
  }
  return x;
}

std::vector<Matrix> h_generators(int n) {
  std::vector<Matrix> out;
  for (const Mat2& a : sl2_generators()) out.push_back(block_diagonal(n, a));
  return out;
}

}  // namespace

std::array<Mat2, 2> sl2_generators() {
  return {Mat2::of(kAlpha, FieldElement::zero(), FieldElement::zero(), FieldElement::alpha_plus_one()),
          Mat2::from_codes(0, 1, 1, 1)};
}

FamilySpec build_family(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("block dimension must lie in [2, 8]");
  FamilySpec fam;
  fam.n = n;
  fam.h = h_generators(n);
  fam.m = structural_generators(fam, FamilyMember::kM);
  fam.nn = structural_generators(fam, FamilyMember::kN);
  fam.g = fam.h;
  fam.g.insert(fam.g.end(), fam.m.begin(), fam.m.end());
  return fam;
}

FamilyMember parse_family_member(std::string_view name) {
  if (name == "G") return FamilyMember::kG;
  if (name == "H") return FamilyMember::kH;
  if (name == "M") return FamilyMember::kM;
  if (name == "N") return FamilyMember::kN;
  if (name == "GN_d") return FamilyMember::kIteratedGN;
  if (name == "gamma_d_N") return FamilyMember::kGammaN;
  throw std::invalid_argument("unknown family member: " + std::string(name));
}

std::string to_string(FamilyMember member, int d) {
  switch (member) {
    case FamilyMember::kG:
      return "G";
    case FamilyMember::kH:
      return "H";
    case FamilyMember::kM:
      return "M";
    case FamilyMember::kN:
      return "N";
    case FamilyMember::kIteratedGN:
      return "[G," + std::to_string(d) + "N]";
    case FamilyMember::kGammaN:
      return "gamma_" + std::to_string(d) + "(N)";
  }
  return "?";
}

BlockShape block_shape(FamilyMember member, int d, int distance) {
  switch (member) {
    case FamilyMember::kM:
      return distance == 1 ? BlockShape::kTraceZero : BlockShape::kFree;
    case FamilyMember::kN:
      return distance == 1 ? BlockShape::kScalar : BlockShape::kFree;
    case FamilyMember::kIteratedGN:
      if (d == 0) return block_shape(FamilyMember::kM, 0, distance);
      if (distance <= d) return BlockShape::kZero;
      return distance == d + 1 ? BlockShape::kTraceZero : BlockShape::kFree;
    case FamilyMember::kGammaN:
      if (distance <= d - 1) return BlockShape::kZero;
      return distance == d ? BlockShape::kScalar : BlockShape::kFree;
    case FamilyMember::kG:
    case FamilyMember::kH:
      break;
  }
  throw std::invalid_argument("member has no unitriangular block shape");
}

bool block_fits(BlockShape shape, const Mat2& block) {
  switch (shape) {
    case BlockShape::kZero:
      return block.is_zero();
    case BlockShape::kScalar:
      return block.is_scalar();
    case BlockShape::kTraceZero:
      return block.trace().is_zero();
    case BlockShape::kFree:
      return true;
  }
  return false;
}

bool structural_member(const FamilySpec& fam, FamilyMember member, const Matrix& x, int d) {
  check_d(member, d);
  if (x.dim() != fam.dim()) throw std::invalid_argument("matrix of the wrong dimension");
  member = normalize(member, d);
  if (is_unitriangular_member(member)) return unitriangular_fits(fam, member, x, d);
  const Mat2 a = x.block(0, 0);
  if (a.det() != FieldElement::one()) return false;
  const Matrix rest = block_diagonal(fam.n, a.inverse()) * x;
  if (member == FamilyMember::kH) return rest.is_identity();
  return unitriangular_fits(fam, FamilyMember::kM, rest, 0);
}

Order structural_count(const FamilySpec& fam, FamilyMember member, int d) {
  check_d(member, d);
  member = normalize(member, d);
  if (member == FamilyMember::kH) return Order(enumerate_SL2().size());
  const FamilyMember shape_member = member == FamilyMember::kG ? FamilyMember::kM : member;
  Order count = member == FamilyMember::kG ? Order(enumerate_SL2().size()) : Order(1);
  for (int i = 0; i < fam.n; ++i) {
    for (int j = i + 1; j < fam.n; ++j) count *= shape_size(block_shape(shape_member, d, j - i));
  }
  return count;
}

Matrix structural_sample(const FamilySpec& fam, FamilyMember member, int d, Rng& rng) {
  check_d(member, d);
  member = normalize(member, d);
  if (is_unitriangular_member(member)) return unitriangular_sample(fam, member, d, rng);
  const auto sl2 = enumerate_SL2();
  const Matrix h = block_diagonal(fam.n, sl2[rng.below(sl2.size())]);
  if (member == FamilyMember::kH) return h;
  return h * unitriangular_sample(fam, FamilyMember::kM, 0, rng);
}

std::vector<Matrix> structural_generators(const FamilySpec& fam, FamilyMember member, int d) {
  check_d(member, d);
  member = normalize(member, d);
  std::vector<Matrix> out;
  if (member == FamilyMember::kG || member == FamilyMember::kH) out = h_generators(fam.n);
  if (member == FamilyMember::kH) return out;
  const FamilyMember shape_member = member == FamilyMember::kG ? FamilyMember::kM : member;
  for (int dist = 1; dist < fam.n; ++dist) {
    for (int i = 0; i + dist < fam.n; ++i) {
      for (const Mat2& b : shape_basis(block_shape(shape_member, d, dist))) {
        out.push_back(elementary_block(fam.n, i, i + dist, b));
      }
    }
  }
  return out;
}

Group<Matrix> structural_group(const FamilySpec& fam, FamilyMember member, int d) {
  return Group<Matrix>(Matrix::identity(fam.dim()), structural_generators(fam, member, d),
                       to_string(member, d))
      .with_oracle([fam, member, d](const Matrix& x) { return structural_member(fam, member, x, d); });
}

FamilyGroups::FamilyGroups(FamilySpec spec, EngineConfig config)
    : spec_(std::move(spec)),
      config_(std::move(config)),
      g_(Matrix::identity(spec_.dim()), spec_.g, "G"),
      h_(Matrix::identity(spec_.dim()), spec_.h, "H"),
      m_(Matrix::identity(spec_.dim()), spec_.m, "M"),
      n_(Matrix::identity(spec_.dim()), spec_.nn, "N") {
  iterated_.push_back(g_);
  lower_.push_back(n_);
}

const Group<Matrix>& FamilyGroups::iterated(int d) {
  if (d < 0) throw std::invalid_argument("[G, d N] needs d >= 0");
  while (static_cast<int>(iterated_.size()) <= d) {
    iterated_.push_back(commutator_group(iterated_.back(), n_, config_));
  }
  return iterated_[static_cast<std::size_t>(d)];
}

const Group<Matrix>& FamilyGroups::lower_central(int d) {
  if (d < 1) throw std::invalid_argument("gamma_d(N) needs d >= 1");
  while (static_cast<int>(lower_.size()) < d) {
    lower_.push_back(commutator_group(lower_.back(), n_, config_));
  }
  return lower_[static_cast<std::size_t>(d - 1)];
}

CrossValidation cross_validate(FamilyGroups& groups, int d, int samples) {
  const FamilySpec& fam = groups.spec();
  const EngineConfig& config = groups.config();
  CrossValidation out;
  out.n = fam.n;
  out.d = d;
  require_normal(groups.n(), groups.g(), config);
  const Group<Matrix>& lower = groups.iterated(d);
  const Group<Matrix>& upper = groups.lower_central(d);
  out.lower_chain_order = lower.order(config);
  out.upper_chain_order = upper.order(config);
  out.lower_predicted = structural_count(fam, FamilyMember::kIteratedGN, d);
  out.upper_predicted = structural_count(fam, FamilyMember::kGammaN, d);
  auto fail = [&out](std::string why, std::optional<Matrix> x = std::nullopt) {
    if (!out.failure.empty()) return;
    out.failure = std::move(why);
    out.offending = std::move(x);
  };
  if (out.lower_chain_order != out.lower_predicted) fail("order of [G,dN] differs from the predicate count");
  if (out.upper_chain_order != out.upper_predicted) fail("order of gamma_d(N) differs from the predicate count");

  out.generators_fit = true;
  for (const Matrix& x : lower.generators()) {
    if (!structural_member(fam, FamilyMember::kIteratedGN, x, d)) {
      out.generators_fit = false;
      fail("generator of [G,dN] violates its predicate", x);
    }
  }
  for (const Matrix& x : upper.generators()) {
    if (!structural_member(fam, FamilyMember::kGammaN, x, d)) {
      out.generators_fit = false;
      fail("generator of gamma_d(N) violates its predicate", x);
    }
  }

  out.samples_member = true;
  Rng rng(derive_seed(config.seed, stream_id("cross_validate")), static_cast<std::uint64_t>(fam.n * 64 + d));
  for (int s = 0; s < samples; ++s) {
    const Matrix x = structural_sample(fam, FamilyMember::kIteratedGN, d, rng);
    if (!lower.contains(x, config)) {
      out.samples_member = false;
      fail("predicate element of [G,dN] outside the computed group", x);
    }
    const Matrix y = structural_sample(fam, FamilyMember::kGammaN, d, rng);
    if (!upper.contains(y, config)) {
      out.samples_member = false;
      fail("predicate element of gamma_d(N) outside the computed group", y);
    }
  }

  const bool contained = is_subgroup(lower, upper, config);
  if (!contained) fail("[G,dN] is not contained in gamma_d(N)");
  if (d < fam.n) {
    const Matrix w = family_gap_witness(fam, d);
    out.strict = contained && out.upper_chain_order > out.lower_chain_order && upper.contains(w, config) &&
                 !lower.contains(w, config);
    if (out.strict) {
      out.witness = w;
    } else {
      fail("gamma_d(N) does not strictly contain [G,dN]", w);
    }
  }
  return out;
}

CrossValidation cross_validate_structural(const FamilySpec& fam, int d, const EngineConfig& config,
                                          int samples) {
  CrossValidation out;
  out.n = fam.n;
  out.d = d;
  out.structural_only = true;
  out.lower_predicted = structural_count(fam, FamilyMember::kIteratedGN, d);
  out.upper_predicted = structural_count(fam, FamilyMember::kGammaN, d);
  auto fail = [&out](std::string why, std::optional<Matrix> x = std::nullopt) {
    if (!out.failure.empty()) return;
    out.failure = std::move(why);
    out.offending = std::move(x);
  };
  Rng rng(derive_seed(config.seed, stream_id("cross_validate_structural")),
          static_cast<std::uint64_t>(fam.n * 64 + d));
  out.samples_member = true;
  const std::pair<FamilyMember, int> sets[] = {{FamilyMember::kIteratedGN, d}, {FamilyMember::kGammaN, d}};
  for (const auto& [member, e] : sets) {
    for (int s = 0; s < samples; ++s) {
      const Matrix x = structural_sample(fam, member, e, rng);
      const Matrix y = structural_sample(fam, member, e, rng);
      if (!structural_member(fam, member, x * y, e) || !structural_member(fam, member, x.inverse(), e)) {
        out.samples_member = false;
        fail("predicate set not closed under products and inverses", x);
      }
    }
  }
  out.generators_fit = true;
  for (int s = 0; s < samples; ++s) {
    const Matrix z = structural_sample(fam, FamilyMember::kN, 0, rng);
    const Matrix x = structural_sample(fam, FamilyMember::kIteratedGN, d - 1, rng);
    if (!structural_member(fam, FamilyMember::kIteratedGN, commutator(x, z), d)) {
      out.generators_fit = false;
      fail("commutator [x, z] escapes [G,dN]", commutator(x, z));
    }
    if (d > 1) {
      const Matrix y = structural_sample(fam, FamilyMember::kGammaN, d - 1, rng);
      if (!structural_member(fam, FamilyMember::kGammaN, commutator(y, z), d)) {
        out.generators_fit = false;
        fail("commutator [y, z] escapes gamma_d(N)", commutator(y, z));
      }
    }
  }
  if (d < fam.n) {
    const Matrix w = family_gap_witness(fam, d);
    out.strict = out.upper_predicted > out.lower_predicted &&
                 structural_member(fam, FamilyMember::kGammaN, w, d) &&
                 !structural_member(fam, FamilyMember::kIteratedGN, w, d);
    if (out.strict) {
      out.witness = w;
    } else {
      fail("structural gap does not hold", w);
    }
  }
  return out;
}

GammaSpec<Matrix> family_gamma_spec(const FamilySpec& fam, int d, int k) {
  std::vector<Group<Matrix>> iterated;
  std::vector<Group<Matrix>> lower;
  for (int s = 0; s <= d; ++s) {
    iterated.push_back(structural_group(fam, FamilyMember::kIteratedGN, s));
    lower.push_back(structural_group(fam, FamilyMember::kGammaN, std::max(s, 1)));
  }
  const Group<Matrix> g = structural_group(fam, FamilyMember::kG);
  const Group<Matrix> n = structural_group(fam, FamilyMember::kN);
  return gamma_spec_from_terms<Matrix>(g, n, d, k, iterated, lower);
}

Matrix family_gap_witness(const FamilySpec& fam, int d) {
  if (d < 1 || d >= fam.n) throw std::invalid_argument("a gap witness exists only for 1 <= d < n");
  return elementary_block(fam.n, 0, d, Mat2::scalar(kAlpha));
}

Group<Matrix> unitriangular_group(int m, int q) {
  if (m < 2 || m > Matrix::kMaxDim) throw std::invalid_argument("m must lie in [2, 16]");
  if (q != 2 && q != 4) throw std::invalid_argument("q must be 2 or 4");
  std::vector<FieldElement> basis{FieldElement::one()};
  if (q == 4) basis.push_back(kAlpha);
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < m; ++i) {
    for (FieldElement c : basis) {
      Matrix x = Matrix::identity(m);
      x.set(i, i + 1, c);
      gens.push_back(x);
    }
  }
  std::string label = "unitri:m=" + std::to_string(m) + ",q=" + std::to_string(q);
  return Group<Matrix>(Matrix::identity(m), std::move(gens), std::move(label))
      .with_oracle([m, q](const Matrix& x) {
        if (x.dim() != m) return false;
        for (int r = 0; r < m; ++r) {
          for (int c = 0; c < m; ++c) {
            const FieldElement v = x.at(r, c);
            if (c < r && !v.is_zero()) return false;
            if (c == r && v != FieldElement::one()) return false;
            if (q == 2 && v.code() > 1) return false;
          }
        }
        return true;
      });
}

std::optional<UnitriangularWitness> counterexample_search(int max_m, int max_d, int max_t,
                                                          const EngineConfig& config) {
  if (max_m < 2 || max_d < 2 || max_t < 2) throw std::invalid_argument("search bounds must be at least 2");
  for (int m = 2; m <= max_m; ++m) {
    const Group<Matrix> h = unitriangular_group(m, 2);
    for (int t = 2; t <= max_t; ++t) {
      const Group<Matrix> k = derived_term(h, t - 1, config);
      if (k.order(config) == 1) break;
      for (int d = 2; d <= max_d; ++d) {
        const Group<Matrix> lower = iterated_commutator(h, k, d, config);
        const Group<Matrix> upper = lower_central_term(k, d, config);
        if (upper.order(config) > lower.order(config) && is_subgroup(lower, upper, config)) {
          return UnitriangularWitness{m, d, t, upper.order(config), lower.order(config)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace sdp
