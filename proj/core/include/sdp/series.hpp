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
#include <utility>
#include <vector>

#include "sdp/group_algorithms.hpp"

namespace sdp {

enum class SeriesKind { kLowerCentral, kDerived, kIteratedCommutator };

constexpr std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::kLowerCentral:
      return "lower_central";
    case SeriesKind::kDerived:
      return "derived";
    case SeriesKind::kIteratedCommutator:
      return "iterated_commutator";
  }
  return "unknown";
}

template <GroupElement E>
struct SeriesTerm {
  int index;
  Group<E> group;
  Order order;
};

template <GroupElement E>
struct SeriesReport {
  SeriesKind kind;
  std::vector<SeriesTerm<E>> terms;
  /// The last term repeats (or is trivial), so later terms are all equal.
  bool stabilized = false;
  /// Nilpotency class or derived length when the series reaches 1; for the
  /// iterated chain, the first k with [G, k N] = 1.
  std::optional<int> class_or_length;
};

/// Thrown when a subgroup that must be normal is not; carries a conjugate of
/// one of its generators that escapes it.
template <GroupElement E>
class NormalityError : public std::runtime_error {
 public:
  explicit NormalityError(E witness)
      : std::runtime_error("subgroup is not normal"), witness_(std::move(witness)) {}
  const E& witness() const { return witness_; }

 private:
  E witness_;
};

template <GroupElement E>
void require_normal(const Group<E>& sub, const Group<E>& ambient, const EngineConfig& config) {
  if (auto w = normality_witness(sub, ambient, config)) throw NormalityError<E>(std::move(*w));
}

/// gamma_1 = G, gamma_{k+1} = [gamma_k, G]; at most `max_k` terms.
template <GroupElement E>
SeriesReport<E> lower_central_series(const Group<E>& g, int max_k, const EngineConfig& config = {}) {
  if (max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  SeriesReport<E> report{SeriesKind::kLowerCentral, {}, false, std::nullopt};
  report.terms.push_back({1, g, g.order(config)});
  while (true) {
    const auto& last = report.terms.back();
    if (last.order == 1) {
      report.stabilized = true;
      report.class_or_length = last.index - 1;
      break;
    }
    if (static_cast<int>(report.terms.size()) >= max_k) break;
    Group<E> next = commutator_group(last.group, g, config);
    Order order = next.order(config);
    if (order == last.order && is_subgroup(last.group, next, config)) {
      report.stabilized = true;
      break;
    }
    report.terms.push_back({last.index + 1, std::move(next), std::move(order)});
  }
  return report;
}

/// gamma_k(G) for one k >= 1.
template <GroupElement E>
Group<E> lower_central_term(const Group<E>& g, int k, const EngineConfig& config = {}) {
  if (k < 1) throw std::invalid_argument("lower central terms start at 1");
  Group<E> term = g;
  for (int i = 1; i < k; ++i) {
    if (term.generators_trivial()) break;
    term = commutator_group(term, g, config);
  }
  return term;
}

/// G^(0) = G, G^(i+1) = [G^(i), G^(i)]; at most `max_len` + 1 terms.
template <GroupElement E>
SeriesReport<E> derived_series(const Group<E>& g, int max_len = 64, const EngineConfig& config = {}) {
  SeriesReport<E> report{SeriesKind::kDerived, {}, false, std::nullopt};
  report.terms.push_back({0, g, g.order(config)});
  while (true) {
    const auto& last = report.terms.back();
    if (last.order == 1) {
      report.stabilized = true;
      report.class_or_length = last.index;
      break;
    }
    if (last.index >= max_len) break;
    Group<E> next = commutator_group(last.group, last.group, config);
    Order order = next.order(config);
    if (order == last.order && is_subgroup(last.group, next, config)) {
      report.stabilized = true;
      break;
    }
    report.terms.push_back({last.index + 1, std::move(next), std::move(order)});
  }
  return report;
}

/// G^(i) for one i >= 0.
template <GroupElement E>
Group<E> derived_term(const Group<E>& g, int i, const EngineConfig& config = {}) {
  if (i < 0) throw std::invalid_argument("derived terms start at 0");
  Group<E> term = g;
  for (int j = 0; j < i; ++j) {
    if (term.generators_trivial()) break;
    term = commutator_group(term, term, config);
  }
  return term;
}

template <GroupElement E>
bool is_perfect(const Group<E>& g, const EngineConfig& config = {}) {
  return commutator_group(g, g, config).order(config) == g.order(config);
}

/// [G, 0 N] = G, [G, k+1 N] = [[G, k N], N] for k = 0..d. Throws
/// NormalityError when N is not normalized by G.
template <GroupElement E>
SeriesReport<E> iterated_commutator_chain(const Group<E>& g, const Group<E>& n, int d,
                                          const EngineConfig& config = {}) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  require_normal(n, g, config);
  SeriesReport<E> report{SeriesKind::kIteratedCommutator, {}, false, std::nullopt};
  report.terms.push_back({0, g, g.order(config)});
  for (int k = 1; k <= d; ++k) {
    const auto& last = report.terms.back();
    Group<E> next = commutator_group(last.group, n, config);
    Order order = next.order(config);
    if (order == last.order) report.stabilized = true;
    report.terms.push_back({k, std::move(next), std::move(order)});
  }
  for (const auto& t : report.terms) {
    if (t.order == 1) {
      report.class_or_length = t.index;
      report.stabilized = true;
      break;
    }
  }
  return report;
}

/// [G, k N] for one k >= 0 (no normality check).
template <GroupElement E>
Group<E> iterated_commutator(const Group<E>& g, const Group<E>& n, int k,
                             const EngineConfig& config = {}) {
  Group<E> term = g;
  for (int i = 0; i < k; ++i) {
    if (term.generators_trivial()) break;
    term = commutator_group(term, n, config);
  }
  return term;
}

/// Smallest c >= 0 with gamma_{c+1}(S) <= N, or nullopt when none is found
/// within the configured class bound.
template <GroupElement E>
std::optional<int> quotient_nilpotency_class(const Group<E>& s, const Group<E>& n,
                                             const EngineConfig& config = {}) {
  Group<E> term = s;
  for (int c = 0; c <= config.class_bound; ++c) {
    if (is_subgroup(term, n, config)) return c;
    Group<E> next = commutator_group(term, s, config);
    if (next.order(config) == term.order(config)) return std::nullopt;
    term = std::move(next);
  }
  return std::nullopt;
}

template <GroupElement E>
struct GapResult {
  /// gamma_d(N) strictly contains [G, d N].
  bool strict = false;
  /// [G, d N] <= gamma_d(N) held.
  bool contained = false;
  Order lower_order;  // |[G, d N]|
  Order upper_order;  // |gamma_d(N)|
  /// A generator of gamma_d(N) outside [G, d N].
  std::optional<E> witness;
};

template <GroupElement E>
GapResult<E> strict_gap(const Group<E>& g, const Group<E>& n, int d, const EngineConfig& config = {}) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  require_normal(n, g, config);
  const Group<E> lower = iterated_commutator(g, n, d, config);
  const Group<E> upper = lower_central_term(n, d, config);
  GapResult<E> out;
  out.lower_order = lower.order(config);
  out.upper_order = upper.order(config);
  out.contained = is_subgroup(lower, upper, config);
  if (out.contained && out.upper_order > out.lower_order) {
    const auto& chain = lower.chain(config);
    for (const E& x : upper.generators()) {
      if (!chain.contains(x)) {
        out.witness = x;
        break;
      }
    }
    out.strict = out.witness.has_value();
  }
  return out;
}

}  // namespace sdp
