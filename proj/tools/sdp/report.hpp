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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sdp::cli {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

enum class ClaimStatus { kPass, kPassStructural, kFail, kSkipped };

std::string_view to_string(ClaimStatus status);
/// Throws std::invalid_argument.
ClaimStatus parse_claim_status(std::string_view text);
inline bool is_pass(ClaimStatus s) { return s == ClaimStatus::kPass || s == ClaimStatus::kPassStructural; }

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::kFail;
  /// Why a claim failed or was skipped.
  std::string reason;
  /// Orders (decimal strings), classes, witnesses.
  json data = json::object();
  double wall_ms = 0;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

struct RunSettings {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::uint64_t threshold = 512;
  int class_bound = 16;
  /// Largest block dimension n for which family chains are built.
  int max_chain_n = 4;

  friend bool operator==(const RunSettings&, const RunSettings&) = default;
};

struct RunReport {
  RunSettings settings;
  std::vector<ClaimReport> claims;
  double total_ms = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;

  bool all_pass() const;
  /// First claim that did not pass.
  const ClaimReport* first_failure() const;
};

json to_json(const ClaimReport& claim);
ClaimReport claim_from_json(const json& j);
/// Deterministic payload plus a separate "timing" object.
json to_json(const RunReport& report);
RunReport report_from_json(const json& j);
/// The report without its "timing" object.
json deterministic_payload(const json& report);

/// Writes `text` to `path` via a temporary file and rename.
void write_atomically(const std::filesystem::path& path, const std::string& text);

/// One line per claim.
std::string format_text(const RunReport& report);

}  // namespace sdp::cli
