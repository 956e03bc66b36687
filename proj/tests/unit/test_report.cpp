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

#include "dockguard/report.hpp"
#include "generators.hpp"

namespace dockguard {
namespace {

using testing::fixture_path;
using testing::golden_path;
using testing::read_text;

AuditReport empty_report() {
    AuditReport r;
    r.tool_version = std::string(kToolVersion);
    r.input_digest = sha256_hex("");
    r.summary = severity_histogram({});
    return r;
}

TEST(Sha256, KnownVectors) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(InputDigest, IgnoresKeyOrderAndWhitespace) {
    EXPECT_EQ(input_digest(parse_json_document(R"({"b":1, "a":[true]})")),
              input_digest(parse_json_document("{\"a\":[true],\n\"b\":1}")));
}

TEST(RenderReport, EmptyJsonIsCanonical) {
    EXPECT_EQ(render_report(empty_report(), ReportFormat::Json),
              R"({"findings":[],"input_digest":"e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855",)"
              R"("summary":{"critical":0,"high":0,"info":0,"low":0,"medium":0},"threats":{},"tool_version":"0.1.0"})"
              "\n");
}

TEST(RenderReport, SummarySumsToFindingCount) {
    AuditReport r = empty_report();
    const auto& t = RuleTable::builtin();
    r.findings = {make_finding(t, "CG-01", "a", "m"), make_finding(t, "NET-01", "daemon", "m"),
                  make_finding(t, "PRIV-01", "a", "m")};
    r.summary = severity_histogram(r.findings);
    std::size_t total = 0;
    for (const auto& [_, n] : r.summary) total += n;
    EXPECT_EQ(total, 3u);
    EXPECT_EQ(r.summary.at(Severity::Critical), 2u);
    auto text = render_report(r, ReportFormat::Text);
    EXPECT_NE(text.find("summary critical=2 high=0 medium=1 low=0 info=0"), std::string::npos);
    EXPECT_EQ(text.rfind("CG-01 medium a [DG-06] m\n", 0), 0u);
}

TEST(RenderReport, GoldenReports) {
    for (const char* name : {"naive", "hardened"}) {
        auto r = audit_document(read_text(fixture_path(std::string(name) + ".json")));
        EXPECT_EQ(render_report(r, ReportFormat::Json), read_text(golden_path(std::string(name) + "_report.json")))
            << name;
    }
    auto naive = audit_document(read_text(fixture_path("naive.json")));
    EXPECT_EQ(render_report(naive, ReportFormat::Text), read_text(golden_path("naive_report.txt")));
}

TEST(RenderReport, PolicyModuleMatrixText) {
    EXPECT_EQ(render_policy_module_matrix(),
              "policy module matrix (rows: source, columns: target)\n"
              "                base        policy-module\n"
              "base            Present     Partial\n"
              "policy-module   Partial     Mitigated\n");
}

TEST(ReportProperty, JsonRoundTripAndDeterminism) {
    testing::Gen g(31);
    for (int i = 0; i < 200; ++i) {
        AuditInput in = g.audit_input();
        AuditReport r = build_report(in, input_digest(to_json(in)));
        const std::string json = render_report(r, ReportFormat::Json);
        EXPECT_EQ(report_from_json(parse_json_document(json)), r);
        EXPECT_EQ(render_report(build_report(in, input_digest(to_json(in))), ReportFormat::Json), json);
    }
}

TEST(ReportProperty, SummaryMatchesHistogram) {
    testing::Gen g(32);
    for (int i = 0; i < 200; ++i) {
        AuditInput in = g.audit_input();
        AuditReport r = build_report(in, "x");
        std::map<Severity, std::size_t> counts;
        for (auto s : {Severity::Info, Severity::Low, Severity::Medium, Severity::High, Severity::Critical}) counts[s] = 0;
        for (const auto& f : r.findings) ++counts[f.severity];
        EXPECT_EQ(r.summary, counts);
    }
}

}  // namespace
}  // namespace dockguard
