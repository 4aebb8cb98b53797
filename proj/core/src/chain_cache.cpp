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

#include "sdp/chain_cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace sdp {
namespace {

using nlohmann::json;

json element_to_json(const Permutation& p) {
  return json(std::vector<Point>(p.images().begin(), p.images().end()));
}

json element_to_json(const Matrix& m) {
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
  return json{{"dim", m.dim()}, {"rows", rows}};
}

Permutation element_from_json(const json& j, const Permutation&) {
  return Permutation(j.get<std::vector<Point>>());
}

Matrix element_from_json(const json& j, const Matrix&) {
  const int dim = j.at("dim").get<int>();
  const auto rows = j.at("rows").get<std::vector<std::uint32_t>>();
  if (rows.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("row count");
  std::vector<FieldElement> entries;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      entries.push_back(FieldElement::from_code(static_cast<std::uint8_t>((rows[r] >> (2 * c)) & 3u)));
    }
  }
  return Matrix::from_entries(dim, entries);
}

const char* element_tag(const Permutation&) { return "perm"; }
const char* element_tag(const Matrix&) { return "matrix"; }

}  // namespace

template <GroupElement E>
std::string chain_cache_key(std::span<const E> generators, std::uint64_t seed) {
  std::uint64_t h = stream_id(generators.empty() ? "empty" : element_tag(generators.front()));
  h = derive_seed(h, seed);
  h = derive_seed(h, generators.size());
  for (const E& g : generators) h = derive_seed(h, hash_value(g));
  std::ostringstream os;
  os << "chain-" << (generators.empty() ? "none" : element_tag(generators.front())) << '-'
     << std::hex << std::setw(16) << std::setfill('0') << h << ".json";
  return os.str();
}

template <GroupElement E>
std::string serialize_chain(const StabilizerChain<E>& chain) {
  json strong = json::array();
  for (const E& g : chain.strong_generators()) strong.push_back(element_to_json(g));
  json doc{{"format", "sdp-chain"},
           {"version", kChainCacheVersion},
           {"element", element_tag(chain.identity())},
           {"domain", chain.domain()},
           {"base", chain.base()},
           {"strong_generators", std::move(strong)},
           {"order", to_decimal(chain.order())}};
  return doc.dump();
}

template <GroupElement E>
std::optional<StabilizerChain<E>> deserialize_chain(const std::string& text, const E& identity,
                                                    std::span<const E> generators) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "sdp-chain" || doc.at("version") != kChainCacheVersion ||
        doc.at("element") != element_tag(identity) ||
        doc.at("domain").get<std::uint64_t>() != domain_size(identity)) {
      return std::nullopt;
    }
    const auto base = doc.at("base").get<std::vector<Point>>();
    std::vector<E> strong;
    for (const json& g : doc.at("strong_generators")) {
      strong.push_back(element_from_json(g, identity));
      if (domain_size(strong.back()) != domain_size(identity)) return std::nullopt;
    }
    auto chain = StabilizerChain<E>::from_strong_generators(identity, base, strong);
    if (to_decimal(chain.order()) != doc.at("order").get<std::string>()) return std::nullopt;
    for (const E& g : strong) {
      if (!chain.contains(g)) return std::nullopt;
    }
    for (const E& g : generators) {
      if (!chain.contains(g)) return std::nullopt;
    }
    return chain;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <GroupElement E>
std::optional<StabilizerChain<E>> load_cached_chain(const std::filesystem::path& dir,
                                                    const E& identity,
                                                    std::span<const E> generators,
                                                    std::uint64_t seed) {
  const auto path = dir / chain_cache_key(generators, seed);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize_chain(buffer.str(), identity, generators);
}

template <GroupElement E>
void save_cached_chain(const std::filesystem::path& dir, const StabilizerChain<E>& chain,
                       std::span<const E> generators, std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const auto path = dir / chain_cache_key(generators, seed);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << serialize_chain(chain);
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

#define SDP_INSTANTIATE_CACHE(E)                                                             \
  template std::string chain_cache_key<E>(std::span<const E>, std::uint64_t);                \
  template std::string serialize_chain<E>(const StabilizerChain<E>&);                         \
  template std::optional<StabilizerChain<E>> deserialize_chain<E>(                            \
      const std::string&, const E&, std::span<const E>);                                      \
  template std::optional<StabilizerChain<E>> load_cached_chain<E>(                            \
      const std::filesystem::path&, const E&, std::span<const E>, std::uint64_t);             \
  template void save_cached_chain<E>(const std::filesystem::path&, const StabilizerChain<E>&, \
                                     std::span<const E>, std::uint64_t);

SDP_INSTANTIATE_CACHE(Permutation)
SDP_INSTANTIATE_CACHE(Matrix)

#undef SDP_INSTANTIATE_CACHE

}  // namespace sdp
