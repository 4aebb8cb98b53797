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

#include "report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace sdp::cli {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kPassStructural:
      return "pass (structural)";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

ClaimStatus parse_claim_status(std::string_view text) {
  if (text == "pass") return ClaimStatus::kPass;
  if (text == "pass (structural)") return ClaimStatus::kPassStructural;
  if (text == "fail") return ClaimStatus::kFail;
  if (text == "skipped") return ClaimStatus::kSkipped;
  throw std::invalid_argument("unknown claim status: " + std::string(text));
}

bool RunReport::all_pass() const { return first_failure() == nullptr; }

const ClaimReport* RunReport::first_failure() const {
  for (const ClaimReport& c : claims) {
    if (!is_pass(c.status)) return &c;
  }
  return nullptr;
}

json to_json(const ClaimReport& claim) {
  json j{{"id", claim.id}, {"status", to_string(claim.status)}, {"data", claim.data}};
  if (!claim.reason.empty()) j["reason"] = claim.reason;
  return j;
}

ClaimReport claim_from_json(const json& j) {
  ClaimReport c;
  c.id = j.at("id").get<std::string>();
  c.status = parse_claim_status(j.at("status").get<std::string>());
  c.reason = j.value("reason", std::string{});
  c.data = j.at("data");
  return c;
}

json to_json(const RunReport& report) {
  const RunSettings& s = report.settings;
  json claims = json::array();
  json timing_claims = json::object();
  std::size_t passed = 0, structural = 0, failed = 0, skipped = 0;
  for (const ClaimReport& c : report.claims) {
    claims.push_back(to_json(c));
    timing_claims[c.id] = c.wall_ms;
    switch (c.status) {
      case ClaimStatus::kPass:
        ++passed;
        break;
      case ClaimStatus::kPassStructural:
        ++structural;
        break;
      case ClaimStatus::kFail:
        ++failed;
        break;
      case ClaimStatus::kSkipped:
        ++skipped;
        break;
    }
  }
  return json{{"schema_version", kReportSchemaVersion},
              {"tool", "sdp"},
              {"suite", s.suite},
              {"seed", s.seed},
              {"config",
               {{"threshold", s.threshold}, {"class_bound", s.class_bound}, {"max_chain_n", s.max_chain_n}}},
              {"claims", std::move(claims)},
              {"summary",
               {{"total", report.claims.size()},
                {"pass", passed},
                {"pass_structural", structural},
                {"fail", failed},
                {"skipped", skipped}}},
              {"timing", {{"claims_ms", std::move(timing_claims)}, {"total_ms", report.total_ms}}}};
}

RunReport report_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version");
  }
  RunReport r;
  r.settings.suite = j.at("suite").get<std::string>();
  r.settings.seed = j.at("seed").get<std::uint64_t>();
  const json& cfg = j.at("config");
  r.settings.threshold = cfg.at("threshold").get<std::uint64_t>();
  r.settings.class_bound = cfg.at("class_bound").get<int>();
  r.settings.max_chain_n = cfg.at("max_chain_n").get<int>();
  for (const json& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
  if (j.contains("timing")) {
    const json& t = j.at("timing");
    r.total_ms = t.value("total_ms", 0.0);
    const json ms = t.value("claims_ms", json::object());
    for (ClaimReport& c : r.claims) c.wall_ms = ms.value(c.id, 0.0);
  }
  return r;
}

json deterministic_payload(const json& report) {
  json out = report;
  out.erase("timing");
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
}

std::string format_text(const RunReport& report) {
  std::ostringstream os;
  for (const ClaimReport& c : report.claims) {
    std::string status(to_string(c.status));
    os << status << std::string(status.size() < 18 ? 18 - status.size() : 1, ' ') << c.id;
    if (!c.reason.empty()) os << "  (" << c.reason << ")";
    os << '\n';
  }
  std::size_t ok = 0;
  for (const ClaimReport& c : report.claims) ok += is_pass(c.status) ? 1 : 0;
  os << ok << "/" << report.claims.size() << " claims pass\n";
  return os.str();
}

}  // namespace sdp::cli
