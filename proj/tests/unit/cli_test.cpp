// Copyright 2026 The qnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qnc/cli.hpp"

using namespace qnc::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::string strip_wall_time(const std::string &s) {
    return std::regex_replace(s, std::regex("\"wall_time_seconds\": [0-9.e+-]+"), "\"wall_time_seconds\": 0");
}

}  // namespace

TEST(Cli, FormatValue) {
    EXPECT_EQ(format_value(0.5 + 2.0 / 81), "0.524691358025");
    EXPECT_EQ(format_value(1), "1");
}

TEST(Cli, RunXqqCsv) {
    auto r = call({"run", "--protocol", "xqq", "--grid", "16x8"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string header, t1, t2;
    std::getline(lines, header);
    std::getline(lines, t1);
    std::getline(lines, t2);
    EXPECT_EQ(header, "protocol,sink,kind,value,argmin_theta1,argmin_theta2,grid,seed");
    EXPECT_EQ(t1.rfind("xqq,t1,fidelity,0.524691358025,", 0), 0u) << t1;
    EXPECT_EQ(t2.rfind("xqq,t2,fidelity,0.514255562202,", 0), 0u) << t2;
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, RunExactProtocols) {
    auto r = call({"run", "--protocol", "x2c2c"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("x2c2c,t1,success_probability,0.588388347648"), std::string::npos);
    EXPECT_NE(r.out.find("x2c2c,t2,success_probability,0.588388347648"), std::string::npos);
    r = call({"run", "--protocol", "classical"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("classical,t1,success_probability,1,"), std::string::npos);
    EXPECT_NE(r.out.find("classical,t2,success_probability,1,"), std::string::npos);
}

TEST(Cli, RunExplicitAngles) {
    auto r = call({"run", "--protocol", "xqc", "--theta1", "0.7853", "--theta2", "1.5707", "--bit", "1",
                   "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["results"][0]["value"].get<double>(), 13.0 / 18, 1e-10);
    EXPECT_NEAR(j["results"][1]["value"].get<double>(), 11.0 / 18, 1e-10);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"run", "--protocol", "nope"}).code, kExitUsage);
    EXPECT_EQ(call({"run", "--protocol", "xqq", "--grid", "4x4"}).code, kExitUsage);
    EXPECT_EQ(call({"run", "--protocol", "xqq", "--grid", "16by8"}).code, kExitUsage);
    EXPECT_EQ(call({"run", "--protocol", "xqq", "--theta1", "1"}).code, kExitUsage);
    EXPECT_EQ(call({"run", "--protocol", "x2c2c", "--bit", "4", "--bit", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"run", "--protocol", "x2c2c", "--i1", "3"}).code, kExitUsage);
    EXPECT_EQ(call({"sample", "--protocol", "xqc", "--shots", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"sample", "--shots", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"sample", "--protocol", "xq3"}).code, kExitUsage);
    EXPECT_EQ(call({"verify", "--suite", "everything"}).code, kExitUsage);
    EXPECT_EQ(call({"bounds"}).code, kExitUsage);
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"sample", "--protocol", "xqc"}, "seven").code, kExitUsage);
    EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, UnwritableOutput) {
    auto r = call({"run", "--protocol", "x2c2c", "--output", "/nonexistent-dir/report.csv"});
    EXPECT_EQ(r.code, kExitIo);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OutputFile) {
    std::string path = ::testing::TempDir() + "qnc_cli_test.csv";
    auto r = call({"run", "--protocol", "classical", "--output", path});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "protocol,sink,kind,value,argmin_theta1,argmin_theta2,grid,seed");
    std::remove(path.c_str());
}

TEST(Cli, VerifySuites) {
    auto r = call({"verify", "--suite", "tables"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("[PASS] bell-table"), std::string::npos);
    EXPECT_NE(r.out.find("[PASS] tetra-probabilities"), std::string::npos);
    EXPECT_EQ(call({"verify", "--suite", "all", "--tol", "1e-8"}).code, kExitOk);
    // An impossible tolerance makes the inexact checks fail.
    r = call({"verify", "--suite", "lemmas", "--tol", "1e-30"});
    EXPECT_EQ(r.code, kExitVerifyFailed);
    EXPECT_NE(r.err.find("check failed"), std::string::npos);
}

TEST(Cli, Bounds) {
    auto r = call({"bounds", "--theorem", "bit-copy", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = nlohmann::json::parse(r.out);
    double e = j["values"]["epsilon_star"];
    EXPECT_GT(e, 1.0 / 12);
    EXPECT_LT(j["values"]["fidelity_bound"].get<double>(), 11.0 / 12);
    r = call({"bounds", "--theorem", "general"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(call({"bounds", "--theorem", "no-sidelinks", "--trials", "3"}).code, kExitOk);
}

TEST(Cli, SampleDeterministic) {
    std::vector<std::string> args = {"sample", "--protocol", "xqc", "--shots", "5000", "--seed", "7", "--format",
                                     "json"};
    auto a = call(args), b = call(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(strip_wall_time(a.out), strip_wall_time(b.out));
    auto j = nlohmann::json::parse(a.out);
    for (const auto &row : j["results"]) {
        EXPECT_LE(std::abs(row["z"].get<double>()), 4.0);
    }
    EXPECT_EQ(j["config"]["seed"], 7);
    EXPECT_TRUE(j["config"].contains("resolved_sources"));
}

TEST(Cli, SeedFromEnvironment) {
    auto env = call({"sample", "--protocol", "x2c2c", "--shots", "100"}, "11");
    auto flag = call({"sample", "--protocol", "x2c2c", "--shots", "100", "--seed", "11"});
    EXPECT_EQ(env.out, flag.out);
    auto over = call({"sample", "--protocol", "x2c2c", "--shots", "100", "--seed", "11"}, "3");
    EXPECT_EQ(over.out, flag.out);
}

TEST(Cli, JobsDoNotChangeOutput) {
    auto a = call({"run", "--protocol", "xqc", "--grid", "16x8", "--jobs", "1"});
    auto b = call({"run", "--protocol", "xqc", "--grid", "16x8", "--jobs", "3"});
    EXPECT_EQ(a.out, b.out);
}
