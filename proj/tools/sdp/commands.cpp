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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "group_spec.hpp"
#include "report.hpp"
#include "sdp/families.hpp"
#include "sdp/gamma.hpp"
#include "sdp/series.hpp"
#include "suites.hpp"

namespace sdp::cli {
namespace {

/// Usage errors detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EngineConfig engine_config(std::uint64_t seed, std::uint64_t threshold, int class_bound) {
  EngineConfig config;
  config.seed = seed;
  config.random_threshold = threshold;
  config.class_bound = class_bound;
  if (const char* dir = std::getenv("SDP_CACHE_DIR")) config.cache_dir = dir;
  return config;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  RunSettings settings;
  std::string json_path;
  bool list = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.list) {
    for (const ClaimInfo& c : claim_catalog()) out << c.suite << '\t' << c.id << '\t' << c.statement << '\n';
    return kExitPass;
  }
  if (!is_suite(args.settings.suite)) throw UsageError("unknown suite '" + args.settings.suite + "'");
  const bool json_to_stdout = args.json_path == "-";
  const RunReport report = run_suite(args.settings, [&](const ClaimReport& c) {
    err << "[" << to_string(c.status) << "] " << c.id << '\n' << std::flush;
  });
  const std::string payload = to_json(report).dump(2) + "\n";
  if (json_to_stdout) {
    out << payload;
  } else {
    if (!args.json_path.empty()) write_atomically(args.json_path, payload);
    out << format_text(report);
  }
  if (const ClaimReport* failed = report.first_failure()) {
    err << "first failing claim: " << failed->id << '\n';
    return kExitClaimFailure;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// series

struct SeriesArgs {
  std::string group;
  std::string kind = "lcs";
  std::string normal;
  int depth = 16;
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t threshold = 512;
  int class_bound = 16;
};

template <GroupElement E>
json series_json(const SeriesReport<E>& r, const std::string& name) {
  json j = {{"group", name}, {"kind", std::string(to_string(r.kind))}, {"stabilized", r.stabilized}};
  for (const auto& t : r.terms) j["terms"].push_back({{"index", t.index}, {"order", to_decimal(t.order)}});
  j["class_or_length"] = r.class_or_length ? json(*r.class_or_length) : json();
  return j;
}

int cmd_series(const SeriesArgs& args, std::ostream& out) {
  if (args.depth < 1) throw UsageError("--depth must be positive");
  const EngineConfig config = engine_config(args.seed, args.threshold, args.class_bound);
  const ResolvedGroup g = resolve_group(args.group);
  std::optional<ResolvedGroup> n;
  if (args.kind == "iterated") {
    if (args.normal.empty()) throw UsageError("--kind iterated needs --normal");
    n = resolve_group(args.normal);
    if (n->group.index() != g.group.index()) throw UsageError("G and N must be the same kind of group");
  }
  const json report = std::visit(
      [&](const auto& group) -> json {
        using G = std::decay_t<decltype(group)>;
        using E = typename G::Element;
        if (args.kind == "lcs") return series_json(lower_central_series(group, args.depth, config), g.name);
        if (args.kind == "derived") return series_json(derived_series(group, args.depth, config), g.name);
        const G& normal = std::get<G>(n->group);
        return series_json<E>(iterated_commutator_chain(group, normal, args.depth, config), g.name);
      },
      g.group);
  if (args.json) {
    out << report.dump(2) << '\n';
    return kExitPass;
  }
  out << args.group << "  " << report["kind"].get<std::string>() << '\n';
  for (const auto& t : report["terms"]) {
    out << "  " << t["index"].get<int>() << "  " << t["order"].get<std::string>() << '\n';
  }
  if (!report["class_or_length"].is_null()) {
    out << (args.kind == "derived" ? "derived length " : "class ") << report["class_or_length"].get<int>() << '\n';
  } else if (report["stabilized"].get<bool>()) {
    out << "stabilized without reaching 1\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// gamma

struct GammaArgs {
  std::string g;
  std::string n;
  int d = 1;
  int k = 1;
  std::string action = "order";
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t threshold = 512;
  int class_bound = 16;
  std::uint64_t max_domain = 8192;
  int samples = 100;
};

json skipped(const std::string& reason) { return {{"status", "skipped"}, {"reason", reason}}; }

/// Peels Delta_[d] of the family gap witness with structural oracles.
json family_witness(const FamilySpec& fam, int d, const EngineConfig& config) {
  if (d < 1 || d >= fam.n) return skipped("the block witness needs 1 <= d < n");
  const auto r = theorem2_witness(family_gamma_spec(fam, d, d), family_gamma_spec(fam, d, d + 1),
                                  family_gap_witness(fam, d), config);
  json j = {{"status", r.holds() ? "pass" : "fail"},
            {"witness", to_literal(family_gap_witness(fam, d))},
            {"in_gamma_d", r.in_gamma_d},
            {"in_gamma_d_plus_1", r.in_gamma_d_plus_1},
            {"quotient_class", r.holds() ? json(d) : json()}};
  if (r.rejected_at) j["rejected_at"] = to_string(*r.rejected_at);
  return j;
}

template <GroupElement E>
json gamma_generic(const Group<E>& g, const Group<E>& n, const GammaArgs& args, const EngineConfig& config,
                   const std::optional<FamilySpec>& family) {
  const std::uint64_t domain = (std::uint64_t{1} << args.d) * g.domain();
  const bool feasible = domain <= args.max_domain;
  const std::string infeasible = "direct power acts on " + std::to_string(domain) +
                                 " points, above --max-domain " + std::to_string(args.max_domain);
  if (args.action == "order") {
    if (!feasible) return skipped(infeasible);
    const auto spec = gamma_spec(g, n, args.d, args.k, config);
    return {{"status", "pass"}, {"order", to_decimal(spec.group().order(config))}};
  }
  if (args.action == "member") {
    if (family) return family_witness(*family, args.d, config);
    if (!feasible) return skipped(infeasible);
    const auto spec = gamma_spec(g, n, args.d, args.k, config);
    const auto group = spec.group();
    Rng rng(args.seed, stream_id("gamma:member"));
    int accepted = 0, agree = 0;
    for (int s = 0; s < args.samples; ++s) {
      std::vector<E> comps;
      for (std::size_t r = 0; r < (std::size_t{1} << args.d); ++r) comps.push_back(g.chain(config).random_element(rng));
      const ProductElement<E> x(args.d, std::move(comps));
      const bool by_peel = peel_membership(x, spec, config);
      accepted += by_peel ? 1 : 0;
      agree += by_peel == group.contains(x, config) ? 1 : 0;
    }
    return {{"status", agree == args.samples ? "pass" : "fail"},
            {"samples", args.samples},
            {"accepted", accepted},
            {"agree_with_chain", agree}};
  }
  // lcc
  if (!feasible) {
    if (family) return family_witness(*family, args.d, config);
    return skipped(infeasible);
  }
  const auto r = verify_lcc(g, n, args.d, config);
  json j = {{"status", r.holds ? "pass" : "fail"}};
  for (const auto& t : r.terms) {
    j["terms"].push_back({{"k", t.k}, {"lcs_order", to_decimal(t.lcs_order)},
                          {"gamma_order", to_decimal(t.gamma_order)}, {"equal", t.equal}});
  }
  return j;
}

int cmd_gamma(const GammaArgs& args, std::ostream& out) {
  if (args.d < 0 || args.d > kMaxSubsetGround) throw UsageError("--d must lie in [0, 12]");
  if (args.k < 1 || args.k > args.d + 1) throw UsageError("--k must lie in [1, d+1]");
  const EngineConfig config = engine_config(args.seed, args.threshold, args.class_bound);
  const ResolvedGroup g = resolve_group(args.g);
  const ResolvedGroup n = resolve_group(args.n);
  if (g.group.index() != n.group.index()) throw UsageError("G and N must be the same kind of group");
  std::optional<FamilySpec> family;
  if (g.family && n.family && g.family->n == n.family->n && g.member == FamilyMember::kG &&
      n.member == FamilyMember::kN) {
    family = g.family;
  }
  json result = std::visit(
      [&](const auto& group) -> json {
        using G = std::decay_t<decltype(group)>;
        return gamma_generic(group, std::get<G>(n.group), args, config, family);
      },
      g.group);
  result["g"] = args.g;
  result["n"] = args.n;
  result["d"] = args.d;
  result["k"] = args.k;
  result["action"] = args.action;
  if (args.json) {
    out << result.dump(2) << '\n';
  } else {
    out << result["status"].get<std::string>();
    for (const auto& [key, value] : result.items()) {
      if (key == "status" || key == "g" || key == "n" || key == "action" || key == "terms") continue;
      out << "  " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << '\n';
    if (result.contains("terms")) {
      for (const auto& t : result["terms"]) {
        out << "  k=" << t["k"].get<int>() << "  gamma_k(Gamma_1)=" << t["lcs_order"].get<std::string>()
            << "  Gamma_k=" << t["gamma_order"].get<std::string>() << '\n';
      }
    }
  }
  const std::string status = result["status"].get<std::string>();
  return status == "fail" ? kExitClaimFailure : kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subdirect products, lower central series and the GF(4) block families"};
  app.name("sdp");
  app.require_subcommand(1);

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", verify.settings.suite, "span, sl6, sl2n, gamma, thm1, thm2, remark_ri, unitri or all")
      ->capture_default_str();
  v->add_option("--seed", verify.settings.seed, "Run seed")->capture_default_str();
  v->add_option("--json", verify.json_path, "Write the JSON report to PATH (- for stdout)");
  v->add_option("--threshold", verify.settings.threshold, "Domain size above which chains start randomized")
      ->capture_default_str();
  v->add_option("--class-bound", verify.settings.class_bound, "Largest nilpotency class searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--max-chain-n", verify.settings.max_chain_n,
                "Largest block count n for which the sl2n suite builds chains")
      ->capture_default_str();
  v->add_flag("--list", verify.list, "List the claims and exit");

  SeriesArgs series;
  CLI::App* s = app.add_subcommand("series", "Print a series of a group");
  s->add_option("group", series.group, "Group name or group-spec file")->required();
  s->add_option("--kind", series.kind, "lcs, derived or iterated")
      ->check(CLI::IsMember({"lcs", "derived", "iterated"}))
      ->capture_default_str();
  s->add_option("--normal", series.normal, "N for --kind iterated");
  s->add_option("--depth", series.depth, "Number of terms to compute")->capture_default_str();
  s->add_flag("--json", series.json, "JSON output");
  s->add_option("--seed", series.seed, "Run seed")->capture_default_str();
  s->add_option("--threshold", series.threshold, "Randomized chain threshold")->capture_default_str();
  s->add_option("--class-bound", series.class_bound, "Largest class searched")->capture_default_str();

  GammaArgs gamma;
  CLI::App* gm = app.add_subcommand("gamma", "Build Gamma_k(G, N) and query it");
  gm->add_option("--g", gamma.g, "G")->required();
  gm->add_option("--n", gamma.n, "N, normal in G")->required();
  gm->add_option("--d", gamma.d, "Size of the ground set")->capture_default_str();
  gm->add_option("--k", gamma.k, "Term index, 1..d+1")->capture_default_str();
  gm->add_option("--action", gamma.action, "order, member or lcc")
      ->check(CLI::IsMember({"order", "member", "lcc"}))
      ->capture_default_str();
  gm->add_option("--max-domain", gamma.max_domain, "Largest direct-power domain for chains")->capture_default_str();
  gm->add_option("--samples", gamma.samples, "Samples for --action member")->capture_default_str();
  gm->add_flag("--json", gamma.json, "JSON output");
  gm->add_option("--seed", gamma.seed, "Run seed")->capture_default_str();
  gm->add_option("--threshold", gamma.threshold, "Randomized chain threshold")->capture_default_str();
  gm->add_option("--class-bound", gamma.class_bound, "Largest class searched")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (s->parsed()) return cmd_series(series, out);
    return cmd_gamma(gamma, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GroupSpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NormalityError<Permutation>& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NormalityError<Matrix>& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitClaimFailure;
  }
}

}  // namespace sdp::cli
