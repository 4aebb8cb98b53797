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

#include <vector>

#include "benchmark/benchmark.h"
#include "sdp/families.hpp"
#include "sdp/gamma.hpp"
#include "sdp/group_algorithms.hpp"
#include "sdp/random.hpp"

namespace sdp {
namespace {

Matrix random_matrix(int dim, Rng& rng) {
  Matrix m = Matrix::zero(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m.set(r, c, FieldElement::from_code(static_cast<std::uint8_t>(rng.below(4))));
  }
  return m;
}

void BM_MatrixMultiply(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1, 1);
  const Matrix a = random_matrix(dim, rng);
  const Matrix b = random_matrix(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMultiply)->Arg(2)->Arg(6)->Arg(8)->Arg(16);

void BM_MatrixImage(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1, 2);
  const Matrix a = random_matrix(dim, rng);
  Point v = 1;
  for (auto _ : state) {
    v = a.image(v) | 1;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_MatrixImage)->Arg(6)->Arg(8)->Arg(16);

void BM_MatrixInverse(benchmark::State& state) {
  Rng rng(1, 3);
  Matrix a = random_matrix(8, rng);
  while (!a.try_inverse()) a = random_matrix(8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_MatrixInverse);

void BM_BuildFamilyChain(benchmark::State& state) {
  const FamilySpec fam = build_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Group<Matrix> g(Matrix::identity(fam.dim()), fam.g);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_BuildFamilyChain)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SiftMembership(benchmark::State& state) {
  const FamilySpec fam = build_family(3);
  const Group<Matrix> g(Matrix::identity(fam.dim()), fam.g);
  Rng rng(2, 1);
  std::vector<Matrix> samples;
  for (int i = 0; i < 64; ++i) samples.push_back(random_element(g, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.contains(samples[i++ % samples.size()]));
}
BENCHMARK(BM_SiftMembership);

void BM_StructuralMembership(benchmark::State& state) {
  const FamilySpec fam = build_family(static_cast<int>(state.range(0)));
  Rng rng(2, 2);
  const Matrix x = structural_sample(fam, FamilyMember::kGammaN, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(structural_member(fam, FamilyMember::kGammaN, x, 1));
}
BENCHMARK(BM_StructuralMembership)->Arg(3)->Arg(8);

void BM_CommutatorSubgroup(benchmark::State& state) {
  const FamilySpec fam = build_family(3);
  const Group<Matrix> g(Matrix::identity(fam.dim()), fam.g);
  const Group<Matrix> n(Matrix::identity(fam.dim()), fam.nn);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_group(g, n).order());
}
BENCHMARK(BM_CommutatorSubgroup)->Unit(benchmark::kMillisecond);

void BM_PeelMembership(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FamilySpec fam = build_family(3);
  const auto spec = family_gamma_spec(fam, d, d);
  const auto x = delta(SubsetIndex::full(d), family_gap_witness(fam, d));
  for (auto _ : state) benchmark::DoNotOptimize(peel_membership(x, spec));
}
BENCHMARK(BM_PeelMembership)->Arg(1)->Arg(2);

void BM_GammaChainA5(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<Matrix> gens;
  for (const Mat2& m : sl2_generators()) gens.push_back(block_diagonal(1, m));
  const Group<Permutation> a5 = matrix_to_perm(gens, 2);
  const auto spec = gamma_spec(a5, a5, d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spec.group().order());
}
BENCHMARK(BM_GammaChainA5)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Chains on Gamma_k <= G^P([2]) for the SL(6,4) pair, acting on 4 * 4096
// points. The factors above the empty set are small, so these stay cheap even
// though G^4 itself has order near 10^31.
void BM_GammaChainSl6(benchmark::State& state) {
  FamilyGroups groups(build_family(3));
  const auto spec = gamma_spec(groups.g(), groups.n(), 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Order order = spec.group().order();
    state.counters["digits"] = static_cast<double>(to_decimal(order).size());
  }
}
BENCHMARK(BM_GammaChainSl6)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sdp

BENCHMARK_MAIN();
