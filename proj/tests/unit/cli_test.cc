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

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "suites.hpp"

namespace sdp::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, VerifySpanSuite) {
  const CliRun r = run({"verify", "--suite", "span"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("2/2 claims pass"), std::string::npos) << r.out;
}

TEST(CliTest, VerifyJsonIsDeterministic) {
  const CliRun a = run({"verify", "--suite", "unitri", "--json", "-"});
  const CliRun b = run({"verify", "--suite", "unitri", "--json", "-"});
  ASSERT_EQ(a.code, kExitPass) << a.err;
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(deterministic_payload(ja), deterministic_payload(jb));
  EXPECT_EQ(ja.at("suite"), "unitri");
  EXPECT_EQ(ja.at("summary").at("fail"), 0);
}

TEST(CliTest, ListShowsEveryClaimOnce) {
  const CliRun r = run({"verify", "--list"});
  EXPECT_EQ(r.code, kExitPass);
  std::set<std::string> ids;
  for (const auto& c : claim_catalog()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_NE(r.out.find(c.id), std::string::npos) << c.id;
    EXPECT_TRUE(is_suite(c.suite)) << c.suite;
  }
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "no-such-group"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "sym:4", "--kind", "iterated"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "sym:4", "--kind", "iterated", "--normal", "cyclic:4"}).code, kExitUsage);
  EXPECT_EQ(run({"gamma", "--g", "a5", "--n", "a5", "--d", "1", "--k", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"gamma", "--g", "a5", "--n", "a5", "--d", "1", "--k", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"gamma", "--g", "sym:4", "--n", "alt:4", "--d", "1", "--action", "lcc"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(CliTest, SeriesCommand) {
  const CliRun r = run({"series", "unitri:m=3,q=2", "--kind", "lcs"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("class 2"), std::string::npos) << r.out;
  const CliRun j = run({"series", "sl6:N", "--kind", "derived", "--json"});
  ASSERT_EQ(j.code, kExitPass) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_NE(doc.dump().find("4096"), std::string::npos);
  const CliRun a5 = run({"series", "a5", "--kind", "lcs"});
  EXPECT_NE(a5.out.find("stabilized without reaching 1"), std::string::npos) << a5.out;
}

TEST(CliTest, GammaCommand) {
  const CliRun order = run({"gamma", "--g", "a5:natural", "--n", "a5:natural", "--d", "1", "--action", "order"});
  EXPECT_EQ(order.code, kExitPass) << order.err;
  EXPECT_NE(order.out.find("3600"), std::string::npos) << order.out;
  const CliRun lcc = run({"gamma", "--g", "sl6", "--n", "sl6:N", "--d", "2", "--action", "lcc"});
  EXPECT_EQ(lcc.code, kExitPass) << lcc.err;
  const CliRun big = run({"gamma", "--g", "sl6", "--n", "sl6:N", "--d", "2", "--action", "order"});
  EXPECT_EQ(big.code, kExitPass) << big.err;
  EXPECT_NE(big.out.find("skipped"), std::string::npos) << big.out;
}

}  // namespace
}  // namespace sdp::cli
