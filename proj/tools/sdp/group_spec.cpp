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

#include "group_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "sdp/group_algorithms.hpp"

namespace sdp::cli {
namespace {

using nlohmann::json;

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw GroupSpecError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

Group<Permutation> from_cycles(std::size_t degree, std::vector<std::vector<std::vector<Point>>> gens,
                               std::string label) {
  std::vector<Permutation> perms;
  for (const auto& cycles : gens) perms.push_back(Permutation::from_cycles(degree, cycles));
  return Group<Permutation>(Permutation::identity(degree), std::move(perms), std::move(label));
}

Group<Permutation> symmetric(int k) {
  if (k < 1 || k > 64) throw GroupSpecError("degree out of range");
  std::vector<Point> cycle(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Point>(i);
  if (k < 3) return from_cycles(k, {{cycle}}, "sym:" + std::to_string(k));
  return from_cycles(k, {{cycle}, {{0, 1}}}, "sym:" + std::to_string(k));
}

Group<Permutation> alternating(int k) {
  if (k < 1 || k > 64) throw GroupSpecError("degree out of range");
  std::vector<std::vector<std::vector<Point>>> gens;
  for (int i = 2; i < k; ++i) gens.push_back({{0, 1, static_cast<Point>(i)}});
  return from_cycles(k, std::move(gens), "alt:" + std::to_string(k));
}

Group<Permutation> cyclic(int k) {
  if (k < 1 || k > 4096) throw GroupSpecError("degree out of range");
  std::vector<Point> cycle(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Point>(i);
  return from_cycles(k, {{cycle}}, "cyclic:" + std::to_string(k));
}

Group<Permutation> dihedral(int k) {
  if (k < 3 || k > 4096) throw GroupSpecError("dihedral degree out of range");
  std::vector<Point> cycle(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Point>(i);
  std::vector<std::vector<Point>> reflection;
  for (int i = 1; i < k - i; ++i) reflection.push_back({static_cast<Point>(i), static_cast<Point>(k - i)});
  return from_cycles(k, {{cycle}, reflection}, "dihedral:" + std::to_string(k));
}

ResolvedGroup family_member(int n, std::string_view which, std::string name) {
  FamilySpec fam = build_family(n);
  const FamilyMember member = parse_family_member(which.empty() ? "G" : which);
  if (member != FamilyMember::kG && member != FamilyMember::kH && member != FamilyMember::kM &&
      member != FamilyMember::kN) {
    throw GroupSpecError("family members are G, H, M and N");
  }
  const std::vector<Matrix>& gens = member == FamilyMember::kG   ? fam.g
                                    : member == FamilyMember::kH ? fam.h
                                    : member == FamilyMember::kM ? fam.m
                                                                 : fam.nn;
  Group<Matrix> g(Matrix::identity(fam.dim()), gens, name);
  return ResolvedGroup{std::move(name), std::move(g), std::move(fam), member};
}

// "key=value" pairs separated by commas, e.g. "m=4,q=2".
int keyed(std::string_view text, std::string_view key) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    if (item.size() > key.size() && item.substr(0, key.size()) == key && item[key.size()] == '=') {
      return parse_int(item.substr(key.size() + 1), key);
    }
    pos = end + 1;
  }
  throw GroupSpecError("missing parameter '" + std::string(key) + "'");
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Matrix matrix_from_json(const json& j, int dim, bool binary, std::size_t index) {
  const std::string where = "generators[" + std::to_string(index) + "]";
  Matrix m;
  if (j.is_string()) {
    try {
      m = parse_matrix_literal(j.get<std::string>(), dim);
    } catch (const std::exception& e) {
      throw GroupSpecError(where + ": " + e.what());
    }
  } else if (j.is_array()) {
    if (j.size() != static_cast<std::size_t>(dim)) throw GroupSpecError(where + ": expected " + std::to_string(dim) + " rows");
    std::vector<FieldElement> entries;
    for (const json& row : j) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
        throw GroupSpecError(where + ": every row needs " + std::to_string(dim) + " entries");
      }
      for (const json& x : row) {
        if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() > 3) {
          throw GroupSpecError(where + ": entries are field codes 0..3");
        }
        entries.push_back(FieldElement::from_code(static_cast<std::uint8_t>(x.get<int>())));
      }
    }
    m = Matrix::from_entries(dim, entries);
  } else {
    throw GroupSpecError(where + ": expected a block literal string or a list of rows");
  }
  if (binary) {
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        if (m.at(r, c).code() > 1) throw GroupSpecError(where + ": entry outside GF(2)");
      }
    }
  }
  if (!m.try_inverse()) throw GroupSpecError(where + ": singular matrix");
  return m;
}

}  // namespace

GroupSpecError::GroupSpecError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

ResolvedGroup resolve_group(std::string_view name) {
  const std::string label(name);
  auto after = [&](std::string_view prefix) { return name.substr(prefix.size()); };
  auto starts = [&](std::string_view prefix) { return name.substr(0, prefix.size()) == prefix; };
  try {
    if (name == "a5") {
      const auto gens = sl2_generators();
      const std::vector<Matrix> ms{block_diagonal(1, gens[0]), block_diagonal(1, gens[1])};
      return {label, matrix_to_perm(ms, 2, label), std::nullopt, std::nullopt};
    }
    if (name == "a5:natural") return {label, from_cycles(5, {{{0, 1, 2, 3, 4}}, {{0, 1, 2}}}, label), {}, {}};
    if (starts("sym:")) return {label, symmetric(parse_int(after("sym:"), "degree")), {}, {}};
    if (starts("alt:")) return {label, alternating(parse_int(after("alt:"), "degree")), {}, {}};
    if (starts("cyclic:")) return {label, cyclic(parse_int(after("cyclic:"), "degree")), {}, {}};
    if (starts("dihedral:")) return {label, dihedral(parse_int(after("dihedral:"), "degree")), {}, {}};
    if (name == "sl2") {
      const auto gens = sl2_generators();
      return {label, Group<Matrix>(Matrix::identity(2), {block_diagonal(1, gens[0]), block_diagonal(1, gens[1])}, label),
              {}, {}};
    }
    if (name == "sl6") return family_member(3, "G", label);
    if (starts("sl6:")) return family_member(3, after("sl6:"), label);
    if (starts("sl2n:n=")) {
      std::string_view rest = after("sl2n:n=");
      const std::size_t colon = rest.find(':');
      const int n = parse_int(rest.substr(0, colon), "n");
      return family_member(n, colon == std::string_view::npos ? "" : rest.substr(colon + 1), label);
    }
    if (starts("unitri:")) {
      const std::string_view params = after("unitri:");
      return {label, unitriangular_group(keyed(params, "m"), keyed(params, "q")).with_label(label), {}, {}};
    }
  } catch (const GroupSpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw GroupSpecError(label + ": " + e.what());
  }
  std::ifstream in{std::string(name)};
  if (!in) throw GroupSpecError("unknown group '" + label + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_spec(buffer.str(), label);
}

ResolvedGroup parse_group_spec(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = line_column(text, byte);
    throw GroupSpecError("malformed JSON", line, column);
  }
  try {
    if (!doc.is_object()) throw GroupSpecError("group spec must be a JSON object");
    const std::string type = doc.at("type").get<std::string>();
    const json& gens = doc.at("generators");
    if (!gens.is_array()) throw GroupSpecError("'generators' must be a list");
    if (type == "perm") {
      const auto degree = doc.at("degree").get<std::size_t>();
      if (degree == 0) throw GroupSpecError("degree must be positive");
      std::vector<Permutation> perms;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto images = gens[i].get<std::vector<Point>>();
        if (images.size() != degree) {
          throw GroupSpecError("generators[" + std::to_string(i) + "]: expected " + std::to_string(degree) + " images");
        }
        try {
          perms.emplace_back(images);
        } catch (const std::invalid_argument& e) {
          throw GroupSpecError("generators[" + std::to_string(i) + "]: " + e.what());
        }
      }
      return {name, Group<Permutation>(Permutation::identity(degree), std::move(perms), name), {}, {}};
    }
    if (type == "matrix") {
      const int dim = doc.at("dim").get<int>();
      if (dim < 1 || dim > Matrix::kMaxDim) throw GroupSpecError("dim must lie in [1, 16]");
      const std::string field = doc.value("field", std::string("GF(4)"));
      if (field != "GF(4)" && field != "GF(2)") throw GroupSpecError("field must be GF(4) or GF(2)");
      std::vector<Matrix> ms;
      for (std::size_t i = 0; i < gens.size(); ++i) ms.push_back(matrix_from_json(gens[i], dim, field == "GF(2)", i));
      return {name, Group<Matrix>(Matrix::identity(dim), std::move(ms), name), {}, {}};
    }
    throw GroupSpecError("type must be \"perm\" or \"matrix\"");
  } catch (const json::exception& e) {
    throw GroupSpecError(std::string("invalid group spec: ") + e.what());
  }
}

std::string order_string(const AnyGroup& g, const EngineConfig& config) {
  return std::visit([&](const auto& group) { return to_decimal(group.order(config)); }, g);
}

}  // namespace sdp::cli
