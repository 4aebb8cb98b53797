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
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sdp/families.hpp"
#include "sdp/group.hpp"

namespace sdp::cli {

/// Unknown group names and malformed group files. Syntax errors carry a
/// 1-based line and column.
class GroupSpecError : public std::runtime_error {
 public:
  explicit GroupSpecError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using AnyGroup = std::variant<Group<Permutation>, Group<Matrix>>;

struct ResolvedGroup {
  std::string name;
  AnyGroup group;
  /// Set for members of the block families ("sl6:N", "sl2n:n=4:G", ...).
  std::optional<FamilySpec> family;
  std::optional<FamilyMember> member;
};

/// Named groups:
///   a5                SL(2,4) acting on the 16 vectors of GF(4)^2
///   a5:natural        A5 on 5 points
///   sym:K alt:K cyclic:K dihedral:K   on K points (dihedral of order 2K)
///   sl2               SL(2,4) as 2x2 matrices
///   sl6[:G|H|M|N]     the n = 3 block family (default G)
///   sl2n:n=K[:G|H|M|N]
///   unitri:m=M,q=Q    upper unitriangular matrices over F_Q
/// Anything else is read as a group-spec JSON file.
ResolvedGroup resolve_group(std::string_view name);

/// {"type": "perm", "degree": D, "generators": [[images...], ...]} or
/// {"type": "matrix", "dim": D, "field": "GF(4)" | "GF(2)",
///  "generators": ["block literal" | [[row], ...], ...]}.
ResolvedGroup parse_group_spec(std::string_view text, std::string name = "file");

/// Order of either kind of group, as a decimal string.
std::string order_string(const AnyGroup& g, const EngineConfig& config);

}  // namespace sdp::cli
