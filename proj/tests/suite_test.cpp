/*
   Copyright 2026 The ffperm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <ffperm/suite.hpp>

#include <gtest/gtest.h>

namespace ffperm {
namespace {

TEST(Suite, AllEntriesPass) {
    const auto res = full_suite(4, 1);
    EXPECT_TRUE(res.ok()) << res.scoreboard();
    EXPECT_EQ(res.exit_code(), 0);
    const json j = res.to_json();
    EXPECT_EQ(j["schema"], report_schema);
    EXPECT_EQ(j["command"], "full-suite");
    EXPECT_EQ(j["passed"], j["total"]);
    EXPECT_EQ(j["entries"].size(), res.entries.size());
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
    const json one = strip_timing(full_suite(1, 1).to_json());
    EXPECT_EQ(strip_timing(full_suite(8, 1).to_json()), one);
    EXPECT_EQ(strip_timing(full_suite(3, 1).to_json()), one);
}

TEST(Suite, ExitCodes) {
    SuiteResult res;
    detail::run_entry(res, "green", [] {
        VerificationReport r;
        r.record(true, "");
        return r;
    });
    EXPECT_EQ(res.exit_code(), 0);
    detail::run_entry(res, "red", [] {
        VerificationReport r;
        r.record(false, "boom");
        return r;
    });
    EXPECT_EQ(res.exit_code(), 1);
    detail::run_entry(res, "mismatch", []() -> VerificationReport { fail(Errc::CriterionMismatch, "x"); });
    EXPECT_EQ(res.exit_code(), 1);
    EXPECT_EQ(res.entries.back().error, Errc::CriterionMismatch);
    detail::run_entry(res, "bad input", []() -> VerificationReport { fail(Errc::EvenM, "x"); });
    EXPECT_EQ(res.exit_code(), 2);
    const json j = res.to_json("custom");
    EXPECT_EQ(j["command"], "custom");
    EXPECT_EQ(j["passed"], 1);
    EXPECT_EQ(j["entries"][3]["error"]["code"], "EvenM");
    const std::string board = res.scoreboard();
    EXPECT_NE(board.find("FAIL  red"), std::string::npos);
    EXPECT_NE(board.find("1/4 passed"), std::string::npos);
}

TEST(Suite, StripTimingIsRecursive) {
    const json j = {{"elapsed_ms", 3}, {"a", {{"elapsed_ms", 1}, {"b", json::array({{{"elapsed_ms", 2}}})}}}};
    EXPECT_EQ(strip_timing(j), (json{{"a", {{"b", json::array({json::object()})}}}}));
}

}  // namespace
}  // namespace ffperm
