// Copyright 2026 The privcap Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "privcap/cli.hpp"

using namespace privcap;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "privcap");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json reports_of(const Result& r) { return nlohmann::json::parse(r.out)["reports"]; }

}  // namespace

TEST(Cli, Lemma2QutritExample) {
    const auto r = run_cli({"lemma2", "--d", "3", "--n", "2", "--mode", "exact-clifford", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["privcap_version"], "0.1.0");
    EXPECT_EQ(j["command"], "lemma2");
    EXPECT_EQ(j["config"]["seed"], 7);
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["bound"], 0.25);
    EXPECT_EQ(j["reports"][0]["params"]["d_H"], 2);
    EXPECT_EQ(j["reports"][0]["status"], "pass");
}

TEST(Cli, UsageErrorsExitTwo) {
    unsetenv("PRIVCAP_SEED");
    EXPECT_EQ(run_cli({"lemma2", "--d", "3"}).code, 2);                          // no seed
    EXPECT_EQ(run_cli({"lemma2", "--seed", "1", "--bogus", "2"}).code, 2);       // unknown flag
    EXPECT_EQ(run_cli({"lemma2", "--seed", "1", "--mode", "gaussian"}).code, 2); // bad mode
    EXPECT_EQ(run_cli({"launch", "--seed", "1"}).code, 2);                       // bad command
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"twirl-check", "--d", "5", "--mode", "exact-clifford", "--seed", "1"}).code, 2);
    EXPECT_EQ(run_cli({"lemma3", "--d", "5", "--seed", "1", "--mode", "exact-clifford"}).code, 2);
    EXPECT_EQ(run_cli({"avg-entropy", "--d", "2", "--trials", "10", "--seed", "1"}).code, 2);
    const auto r = run_cli({"lemma2", "--d", "3"});
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SeedFromEnvironment) {
    setenv("PRIVCAP_SEED", "7", 1);
    const auto a = run_cli({"lemma2", "--d", "3"});
    setenv("PRIVCAP_SEED", "not-a-number", 1);
    const auto bad = run_cli({"lemma2", "--d", "3"});
    unsetenv("PRIVCAP_SEED");
    const auto b = run_cli({"lemma2", "--d", "3", "--seed", "7"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, CsvFormatAndOutFile) {
    const auto dir = std::filesystem::temp_directory_path() / "privcap_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.csv").string();
    const auto r = run_cli({"degradability", "--d", "2", "--mode", "explicit", "--seed", "3", "--format", "csv", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string first, header;
    std::getline(f, first);
    std::getline(f, header);
    EXPECT_EQ(first.rfind("# privcap_version=0.1.0 command=degradability", 0), 0u);
    EXPECT_EQ(header, "name,params,estimate,std_error,bound,comparison,pass,status,seed,wall_ms");
    std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutputExitsTwo) {
    const auto r = run_cli({"twirl-check", "--seed", "1", "--out", "/nonexistent-dir/x/out.json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, FailingReportExitsOne) {
    // A two-member explicit ensemble is far from a 2-design.
    const auto r = run_cli({"frame-potential", "--d", "2", "--mode", "explicit", "--trials", "2", "--seed", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(reports_of(r)[0]["pass"], false);
}

TEST(Cli, ModesAndDefaults) {
    const auto h = run_cli({"twirl-check", "--d", "3", "--mode", "haar", "--trials", "2000", "--seed", "5"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(reports_of(h)[0]["params"]["mode"], "haar");
    const auto d4 = run_cli({"frame-potential", "--d", "4", "--trials", "300", "--seed", "5"});
    ASSERT_EQ(d4.code, 0) << d4.err;
    EXPECT_EQ(nlohmann::json::parse(d4.out)["config"]["mode"], "haar");
    const auto ci = run_cli({"coherent-info", "--d", "3", "--seed", "2"});
    ASSERT_EQ(ci.code, 0) << ci.err;
    EXPECT_EQ(reports_of(ci)[0]["params"]["ensemble"], "clifford");
    const auto tol = run_cli({"lemma2", "--d", "3", "--seed", "2", "--tol-abs", "0.01", "--tol-sigma", "2"});
    EXPECT_EQ(reports_of(tol)[0]["params"]["tol_abs"], 0.01);
    EXPECT_EQ(reports_of(tol)[0]["params"]["tol_sigma"], 2.0);
    const auto opt = run_cli({"optimize", "--d", "2", "--restarts", "3", "--seed", "2"});
    ASSERT_EQ(opt.code, 0) << opt.err;
    const auto j = nlohmann::json::parse(opt.out);
    EXPECT_EQ(j["certificates"][0]["kind"], "lower_certificate");
    EXPECT_EQ(j["certificates"][0]["restarts"], 3);
}

TEST(Cli, ThreadsDoNotChangeScalarResults) {
    const auto a = run_cli({"avg-entropy", "--d", "3", "--trials", "4000", "--seed", "9"});
    const auto b = run_cli({"avg-entropy", "--d", "3", "--trials", "4000", "--seed", "9", "--threads", "4"});
    EXPECT_EQ(reports_of(a)[0]["estimate"], reports_of(b)[0]["estimate"]);
}

TEST(Cli, ReportAllCoversSuiteAndRepeats) {
    const auto a = run_cli({"report-all", "--d", "2", "--seed", "1"});
    const auto b = run_cli({"report-all", "--d", "2", "--seed", "1"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::set<std::string> names;
    for (const auto& r : reports_of(a)) names.insert(r["name"]);
    for (const char* want : {"twirl-check", "frame-potential", "lemma2", "lemma3", "avg-entropy", "degradability",
                             "optimize", "achievability"}) {
        EXPECT_TRUE(names.count(want)) << want;
    }
}
