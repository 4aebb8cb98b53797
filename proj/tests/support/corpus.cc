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

#include "support/corpus.hpp"

namespace sdp::testing {
namespace {

constexpr const char* kQuaternion = R"json({
  "type": "perm", "degree": 8,
  "generators": [[2, 3, 1, 0, 7, 6, 4, 5], [4, 5, 6, 7, 1, 0, 3, 2]]
})json";

constexpr const char* kElementaryAbelian8 = R"json({
  "type": "perm", "degree": 6,
  "generators": [[1, 0, 2, 3, 4, 5], [0, 1, 3, 2, 4, 5], [0, 1, 2, 3, 5, 4]]
})json";

constexpr const char* kGl32 = R"json({
  "type": "matrix", "dim": 3, "field": "GF(2)",
  "generators": [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]]]
})json";

Group<Permutation> perm(const std::string& name) { return std::get<Group<Permutation>>(cli::resolve_group(name).group); }

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& name, std::size_t order) {
    out.push_back({name, cli::resolve_group(name).group, order});
  };
  add("cyclic:1", 1);
  add("cyclic:2", 2);
  add("cyclic:12", 12);
  add("sym:3", 6);
  add("dihedral:4", 8);
  add("dihedral:10", 20);
  add("alt:4", 12);
  add("sym:4", 24);
  add("a5:natural", 60);
  add("a5", 60);
  add("sym:5", 120);
  add("alt:6", 360);
  add("sym:6", 720);
  add("alt:7", 2520);
  add("sl2", 60);
  add("unitri:m=3,q=2", 8);
  add("unitri:m=3,q=4", 64);
  add("unitri:m=4,q=2", 64);
  add("unitri:m=5,q=2", 1024);
  add("unitri:m=4,q=4", 4096);
  add("sl2n:n=2:H", 60);
  add("sl2n:n=2:N", 4);
  add("sl2n:n=2:M", 64);
  add("sl2n:n=2", 3840);
  add("sl6:N", 4096);
  out.push_back({"quaternion", cli::parse_group_spec(kQuaternion, "quaternion").group, 8});
  out.push_back({"c2^3", cli::parse_group_spec(kElementaryAbelian8, "c2^3").group, 8});
  out.push_back({"GL(3,2)", cli::parse_group_spec(kGl32, "GL(3,2)").group, 168});
  return out;
}

std::vector<NormalPair> normal_pairs() {
  return {
      {"(S4,V4)", perm("sym:4"), std::get<Group<Permutation>>(cli::parse_group_spec(R"json({"type": "perm", "degree": 4,
        "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]})json").group)},
      {"(S4,A4)", perm("sym:4"), perm("alt:4")},
      {"(S4,S4)", perm("sym:4"), perm("sym:4")},
      {"(A5,A5)", perm("a5:natural"), perm("a5:natural")},
      {"(D8,C4)", perm("dihedral:4"), perm("cyclic:4").with_label("C4")},
      {"(S3,A3)", perm("sym:3"), perm("alt:3")},
  };
}

}  // namespace sdp::testing
