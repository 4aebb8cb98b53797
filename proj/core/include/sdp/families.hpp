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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdp/gamma.hpp"
#include "sdp/gf4.hpp"
#include "sdp/group.hpp"
#include "sdp/matrix.hpp"
#include "sdp/order.hpp"
#include "sdp/random.hpp"

namespace sdp {

/// The SL(2, 4) generating pair used throughout: diag(a, a^2) and
/// [[0, 1], [1, 1]].
std::array<Mat2, 2> sl2_generators();

/// Block subgroups of SL(2n, 4), written as n x n block matrices:
///   H = { Delta(A) : A in SL(2, 4) }           (Delta(A) repeats A on the diagonal)
///   M = block unitriangular, trace-zero super-diagonal, free above it
///   N = the part of M with scalar super-diagonal blocks
///   G = HM
struct FamilySpec {
  int n = 0;
  std::vector<Matrix> h;
  std::vector<Matrix> m;
  std::vector<Matrix> nn;
  std::vector<Matrix> g;

  int dim() const { return 2 * n; }
};

/// Throws std::invalid_argument for n < 2 or n > 8.
FamilySpec build_family(int n);

enum class FamilyMember {
  kG,
  kH,
  kM,
  kN,
  /// [G, d N]; d = 0 is G itself.
  kIteratedGN,
  /// gamma_d(N), d >= 1.
  kGammaN,
};

/// "G", "H", "M", "N", "GN_d", "gamma_d_N". Throws std::invalid_argument.
FamilyMember parse_family_member(std::string_view name);
std::string to_string(FamilyMember member, int d = 0);

/// Admissible values of one block above the diagonal.
enum class BlockShape { kZero, kScalar, kTraceZero, kFree };

/// Shape of block (i, j), j - i = distance > 0, for the unitriangular members.
BlockShape block_shape(FamilyMember member, int d, int distance);
bool block_fits(BlockShape shape, const Mat2& block);

/// Closed-form membership test. Throws std::invalid_argument for a matrix of
/// the wrong dimension or kIteratedGN with d < 0 / kGammaN with d < 1.
bool structural_member(const FamilySpec& fam, FamilyMember member, const Matrix& x, int d = 0);

/// Number of matrices satisfying the predicate, counted block by block over
/// all 256 candidates per position (and the 60 elements of SL(2, 4) for the
/// diagonal of G and H).
Order structural_count(const FamilySpec& fam, FamilyMember member, int d = 0);

/// Uniform sample from the predicate set.
Matrix structural_sample(const FamilySpec& fam, FamilyMember member, int d, Rng& rng);

/// Elementary generators of the predicate set: E_ij(B) for B over an F_2-basis
/// of the admissible blocks at each position (plus H for G and H).
std::vector<Matrix> structural_generators(const FamilySpec& fam, FamilyMember member, int d = 0);

/// Group handle with the structural predicate attached as membership oracle.
Group<Matrix> structural_group(const FamilySpec& fam, FamilyMember member, int d = 0);

/// Chain-backed groups of one family, computed on demand and memoized.
class FamilyGroups {
 public:
  explicit FamilyGroups(FamilySpec spec, EngineConfig config = {});

  const FamilySpec& spec() const { return spec_; }
  const EngineConfig& config() const { return config_; }
  const Group<Matrix>& g() const { return g_; }
  const Group<Matrix>& h() const { return h_; }
  const Group<Matrix>& m() const { return m_; }
  const Group<Matrix>& n() const { return n_; }
  /// [G, d N], d >= 0.
  const Group<Matrix>& iterated(int d);
  /// gamma_d(N), d >= 1.
  const Group<Matrix>& lower_central(int d);

 private:
  FamilySpec spec_;
  EngineConfig config_;
  Group<Matrix> g_, h_, m_, n_;
  std::vector<Group<Matrix>> iterated_;
  std::vector<Group<Matrix>> lower_;
};

struct CrossValidation {
  int n = 0;
  int d = 0;
  bool structural_only = false;
  Order lower_chain_order;  // |[G, d N]| from chains
  Order lower_predicted;    // predicate count
  Order upper_chain_order;  // |gamma_d(N)| from chains
  Order upper_predicted;
  bool generators_fit = false;
  bool samples_member = false;
  bool strict = false;
  std::optional<Matrix> witness;
  /// First matrix that broke a check, for diagnostics.
  std::optional<Matrix> offending;
  std::string failure;

  bool pass() const { return failure.empty(); }
};

/// Compares [G, d N] and gamma_d(N) computed with chains against the block
/// predicates: orders equal the predicate counts, every computed generator
/// fits its predicate, `samples` random predicate elements pass chain
/// membership, and for d < n the inclusion is strict.
CrossValidation cross_validate(FamilyGroups& groups, int d, int samples = 64);

/// Chain-free variant: predicate sets are closed under products and inverses
/// on samples, commutators of sampled generators land in the next predicate,
/// and E_{1,1+d}(a I) separates gamma_d(N) from [G, d N].
CrossValidation cross_validate_structural(const FamilySpec& fam, int d, const EngineConfig& config,
                                          int samples = 64);

/// Gamma_k(G, N) for the family with structural factor oracles; no chain is
/// built on any factor.
GammaSpec<Matrix> family_gamma_spec(const FamilySpec& fam, int d, int k);

/// E_{1,1+d}(a I): in gamma_d(N) but not in [G, d N] for d < n.
Matrix family_gap_witness(const FamilySpec& fam, int d);

/// Upper unitriangular m x m matrices with entries in F_q, q in {2, 4},
/// generated by E_{i,i+1}(c) for c over an F_2-basis of F_q.
Group<Matrix> unitriangular_group(int m, int q);

struct UnitriangularWitness {
  int m = 0;
  int d = 0;
  int t = 0;
  Order upper_order;  // |gamma_d(H^(t-1))|
  Order lower_order;  // |[H, d H^(t-1)]|
};

/// Smallest (m, then t, then d) with gamma_d(K) > [H, d K], K = H^(t-1),
/// H = U_m(F_2); d and t range over 2..max.
std::optional<UnitriangularWitness> counterexample_search(int max_m, int max_d, int max_t,
                                                          const EngineConfig& config = {});

}  // namespace sdp
