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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "report.hpp"

namespace sdp::cli {

struct ClaimInfo {
  std::string id;
  std::string suite;
  std::string statement;
};

/// The published claims, in report order.
const std::vector<ClaimInfo>& claim_catalog();

/// span, sl6, sl2n, gamma, thm1, thm2, remark_ri, unitri, all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs every claim of settings.suite. `progress` sees each claim as it
/// finishes. Throws std::invalid_argument for an unknown suite.
RunReport run_suite(const RunSettings& settings,
                    const std::function<void(const ClaimReport&)>& progress = {});

}  // namespace sdp::cli
