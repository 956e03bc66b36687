// Copyright 2026 The dockguard Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "dockguard/cli.hpp"
#include "generators.hpp"

namespace dockguard {
namespace {

using testing::fixture_path;
using testing::golden_path;
using testing::read_text;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "dockguard");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(CliAudit, HardenedPasses) {
    auto r = run({"audit", "--input", fixture_path("hardened.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("no findings\n", 0), 0u);
}

TEST(CliAudit, PrivilegedFails) {
    auto r = run({"audit", "--input", fixture_path("privileged.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("PRIV-01 critical web"), std::string::npos);
}

TEST(CliAudit, MalformedInput) {
    auto r = run({"audit", "--input", fixture_path("malformed.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliAudit, SchemaErrorNamesPath) {
    auto r = run({"audit", "--input", fixture_path("schema_error.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("/containers/0/privileged"), std::string::npos);
}

TEST(CliAudit, MissingFileAndBadArguments) {
    EXPECT_EQ(run({"audit", "--input", "/nonexistent/x.json"}).code, 2);
    EXPECT_EQ(run({"audit"}).code, 2);
    EXPECT_EQ(run({"audit", "--input", fixture_path("naive.json"), "--format", "yaml"}).code, 2);
    EXPECT_EQ(run({"audit", "--input", fixture_path("naive.json"), "--fail-on", "severe"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(CliAudit, FailOnFollowsSeverityOrder) {
    // The privileged fixture only has a critical finding.
    for (const char* sev : {"critical", "high", "medium", "low", "info"}) {
        EXPECT_EQ(run({"audit", "--input", fixture_path("privileged.json"), "--fail-on", sev}).code, 1) << sev;
    }
    // FV-01 (info) alone: only --fail-on info trips.
    auto doc = read_text(fixture_path("hardened.json"));
    doc.replace(doc.find("\"inside_vm\": true"), 17, "\"inside_vm\": false");
    auto path = std::filesystem::temp_directory_path() / "dockguard_info_only.json";
    std::ofstream(path) << doc;
    EXPECT_EQ(run({"audit", "--input", path.string(), "--fail-on", "low"}).code, 0);
    EXPECT_EQ(run({"audit", "--input", path.string(), "--fail-on", "info"}).code, 1);
    std::filesystem::remove(path);
}

TEST(CliAudit, JsonMatchesGoldenAndOutputFile) {
    auto r = run({"audit", "--input", fixture_path("naive.json"), "--format", "json"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, read_text(golden_path("naive_report.json")));
    auto path = std::filesystem::temp_directory_path() / "dockguard_report.json";
    auto f = run({"audit", "--input", fixture_path("naive.json"), "--format", "json", "--output", path.string()});
    EXPECT_EQ(f.code, 1);
    EXPECT_TRUE(f.out.empty());
    EXPECT_EQ(read_text(path.string()), r.out);
    std::filesystem::remove(path);
}

TEST(CliAudit, AlternativeRuleTableMustCoverCatalog) {
    auto path = std::filesystem::temp_directory_path() / "dockguard_rules.json";
    std::ofstream(path) << R"({"version":1,"rules":[]})";
    EXPECT_EQ(run({"audit", "--input", fixture_path("naive.json"), "--rules", path.string()}).code, 2);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"audit", "--input", fixture_path("naive.json"), "--rules", DOCKGUARD_RULES_FILE}).code, 1);
}

TEST(CliThreats, PolicyModuleMatrix) {
    auto r = run({"threats", "--input", fixture_path("hardened.json"), "--pm-matrix"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("base            Present     Partial\n"), std::string::npos);
    EXPECT_NE(r.out.find("policy-module   Partial     Mitigated\n"), std::string::npos);
    EXPECT_NE(r.out.find("  KernelExploit       Mitigated\n"), std::string::npos);
}

TEST(CliThreats, UnknownContainer) {
    auto r = run({"threats", "--input", fixture_path("hardened.json"), "--container", "nope"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("UnknownSubject"), std::string::npos);
}

TEST(CliThreats, JsonFormat) {
    auto r = run({"threats", "--input", fixture_path("naive.json"), "--container", "web", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = parse_json_document(r.out);
    EXPECT_EQ(j["threats"]["web"]["DoS"]["status"], "Present");
}

TEST(CliRules, Iptables) {
    auto r = run({"rules", "iptables", "--source", "10.0.0.0/8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "iptables -t filter -A FORWARD -s 10.0.0.0/8 -j REJECT --reject-with icmp-admin-prohibited\n");
    EXPECT_EQ(run({"rules", "iptables", "--source", "10.0.0.1/8"}).code, 2);
    EXPECT_EQ(run({"rules"}).code, 2);
}

TEST(CliRules, Ebtables) {
    auto r = run({"rules", "ebtables", "--bindings", fixture_path("bindings_two.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_text(golden_path("ebtables_two.txt")));
    EXPECT_EQ(run({"rules", "ebtables", "--bindings", fixture_path("naive.json")}).code, 2);
}

// Argument vectors built from a small vocabulary; every one must end in {0,1,2}.
TEST(CliProperty, ExitCodeIsTotal) {
    testing::Gen g(41);
    const std::vector<std::string> vocab{"audit", "threats", "rules", "iptables", "ebtables", "--input",
                                         fixture_path("naive.json"), fixture_path("malformed.json"), "--format",
                                         "json", "text", "--fail-on", "low", "--pm-matrix", "--container", "web",
                                         "--source", "10.0.0.0/8", "--bindings", "--rules", "-x", ""};
    for (int i = 0; i < 300; ++i) {
        std::vector<std::string> args;
        for (std::size_t k = g.below(7); k > 0; --k) args.push_back(g.pick(vocab));
        auto r = run(args);
        EXPECT_TRUE(r.code == 0 || r.code == 1 || r.code == 2) << r.code;
    }
}

}  // namespace
}  // namespace dockguard
