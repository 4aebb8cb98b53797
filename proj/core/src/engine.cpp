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

#include <stdexcept>
#include <utility>

#include "sdp/group_algorithms.hpp"
#include "sdp/product_element.hpp"
#include "sdp/stabilizer_chain.hpp"

namespace sdp {

template class StabilizerChain<Permutation>;
template class StabilizerChain<Matrix>;

std::vector<Point> left_block_points(const Permutation& left_identity) {
  std::vector<Point> out(left_identity.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Point>(i);
  return out;
}

std::vector<Point> left_block_points(const Matrix& left_identity) {
  std::vector<Point> out;
  for (int c = 0; c < left_identity.dim(); ++c) out.push_back(basis_point(c));
  return out;
}

Permutation right_component(const Permutation& sum, const Permutation& left_identity,
                            const Permutation& right_identity) {
  return restrict_to_block(sum, left_identity.degree(), right_identity.degree());
}

Matrix right_component(const Matrix& sum, const Matrix& left_identity, const Matrix& right_identity) {
  const int offset = left_identity.dim();
  Matrix out = Matrix::identity(right_identity.dim());
  for (int r = 0; r < right_identity.dim(); ++r) {
    for (int c = 0; c < right_identity.dim(); ++c) out.set(r, c, sum.at(offset + r, offset + c));
  }
  return out;
}

Group<Permutation> matrix_to_perm(std::span<const Matrix> generators, int dim, std::string label) {
  if (dim < 1 || dim > 10) throw std::invalid_argument("matrix actions are limited to dimension 10");
  std::vector<Permutation> perms;
  for (const Matrix& m : generators) {
    if (m.dim() != dim) throw std::invalid_argument("generator of the wrong dimension");
    if (!m.try_inverse()) throw SingularMatrixError("singular generator");
    perms.emplace_back(action_images(m));
  }
  return Group<Permutation>(Permutation::identity(std::size_t{1} << (2 * dim)), std::move(perms),
                            std::move(label));
}

Permutation flatten(const ProductElement<Permutation>& x) {
  std::vector<Point> images;
  images.reserve(domain_size(x));
  for (Point p = 0; p < domain_size(x); ++p) images.push_back(x.image(p));
  return Permutation(std::move(images));
}

Matrix flatten(const ProductElement<Matrix>& x) {
  Matrix out = x.at_rank(0);
  for (std::size_t c = 1; c < x.size(); ++c) out = direct_sum(out, x.at_rank(c));
  return out;
}

}  // namespace sdp
