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

#include <algorithm>

#include "dockguard/audit.hpp"
#include "dockguard/checks.hpp"
#include "dockguard/error.hpp"
#include "generators.hpp"

namespace dockguard {
namespace {

std::vector<std::string> rules_of(const std::vector<Finding>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.rule.str());
    std::sort(out.begin(), out.end());
    return out;
}

const Finding* find_rule(const std::vector<Finding>& fs, std::string_view rule) {
    auto it = std::find_if(fs.begin(), fs.end(), [&](const Finding& f) { return f.rule == rule; });
    return it == fs.end() ? nullptr : &*it;
}

ContainerConfig hardened_container() {
    ContainerConfig c;
    c.name = "web";
    c.image_ref = "shop/web:1";
    c.limits.cpu_shares = 2;
    c.limits.memory_bytes = 128ull << 20;
    c.limits.storage_base_bytes = 5ull << 30;
    c.security.read_only_rootfs = true;
    c.security.seccomp_restricted = true;
    c.security.selinux_level = "s0:c100,c200";
    c.run_user = "app";
    return c;
}

DaemonConfig compliant_daemon() {
    DaemonConfig d;
    d.engine_version = Version::parse("1.8.0");
    d.tcp_socket_enabled = true;
    d.tls_enabled = true;
    d.userns_remap = true;
    d.kernel_version = Version::parse("4.4.0");
    d.kernel_hardened = d.dedicated_host = d.inside_vm = true;
    d.logging_driver = "syslog";
    return d;
}

TEST(ImageChecks, UnsignedManifest) {
    ImageProvenance img{"a", false, false, true, RegistryOrigin::OfficialHub};
    auto fs = check_image_provenance(img);
    const Finding* f = find_rule(fs, "IMG-01");
    ASSERT_NE(f, nullptr);
    EXPECT_NE(f->message.find("signed manifest"), std::string::npos);
}

TEST(ImageChecks, FullyCompliant) {
    EXPECT_TRUE(check_image_provenance({"a", true, true, true, RegistryOrigin::OfficialHub}).empty());
}

TEST(ImageChecks, UnverifiedChecksumIsMedium) {
    auto fs = check_image_provenance({"a", true, false, true, RegistryOrigin::Private});
    ASSERT_EQ(rules_of(fs), std::vector<std::string>{"IMG-04"});
    EXPECT_EQ(fs[0].severity, Severity::Medium);
}

TEST(DaemonChecks, OldEngineIsCritical) {
    DaemonConfig d = compliant_daemon();
    d.engine_version = Version::parse("0.11");
    const auto fs = check_daemon(d);
    const Finding* f = find_rule(fs, "VER-01");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->severity, Severity::Critical);
    EXPECT_EQ(f->subject, "daemon");
}

TEST(DaemonChecks, PlainTcpSocket) {
    DaemonConfig d = compliant_daemon();
    d.tls_enabled = false;
    EXPECT_EQ(rules_of(check_daemon(d)), std::vector<std::string>{"NET-01"});
}

TEST(DaemonChecks, FullyCompliant) { EXPECT_TRUE(check_daemon(compliant_daemon()).empty()); }

TEST(DaemonChecks, LoggingAdviceIsVerbatim) {
    DaemonConfig d = compliant_daemon();
    d.logging_driver.reset();
    const auto fs = check_daemon(d);
    const Finding* f = find_rule(fs, "LOG-01");
    ASSERT_NE(f, nullptr);
    EXPECT_NE(f->message.find("docker logs ... (-f to follow log output)"), std::string::npos);
    EXPECT_NE(f->message.find("docker export ..."), std::string::npos);
    EXPECT_EQ(f->remediation, "docker run -v /dev/log:/dev/log <container_name> /bin/sh");
}

TEST(ContainerChecks, NetRawEnablesArpSpoofing) {
    ContainerConfig c = hardened_container();
    c.capabilities.insert(Capability::parse("NET_RAW"));
    const auto fs = check_container(c);
    const Finding* f = find_rule(fs, "ARP-01");
    ASSERT_NE(f, nullptr);
    EXPECT_NE(f->message.find("PF_PACKET"), std::string::npos);
    EXPECT_NE(f->message.find("ARP spoofing"), std::string::npos);
    EXPECT_NE(find_rule(fs, "EBT-01"), nullptr);
    c.ebtables_antispoof = true;
    EXPECT_EQ(rules_of(check_container(c)), std::vector<std::string>{"ARP-01"});
}

TEST(ContainerChecks, FullyHardened) { EXPECT_TRUE(check_container(hardened_container()).empty()); }

TEST(ContainerChecks, NoLimits) {
    ContainerConfig c = hardened_container();
    c.limits = {};
    EXPECT_EQ(rules_of(check_container(c)), (std::vector<std::string>{"CG-01", "CG-02", "CG-03"}));
}

TEST(ContainerChecks, SecretInEnvironment) {
    ContainerConfig c = hardened_container();
    c.env = {"DB_PASSWORD=x", "LANG=C"};
    EXPECT_EQ(rules_of(check_container(c)), std::vector<std::string>{"ENV-01"});
}

TEST(ContainerChecks, RootUserForms) {
    for (const char* u : {"root", "0", "0:0", "root:wheel"}) {
        ContainerConfig c = hardened_container();
        c.run_user = u;
        EXPECT_EQ(rules_of(check_container(c)), std::vector<std::string>{"USER-01"}) << u;
    }
    ContainerConfig c = hardened_container();
    c.run_user.reset();
    const auto fs = check_container(c);
    const Finding* f = find_rule(fs, "USER-01");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->remediation, "docker run -u <username> -it web /bin/bash");
}

TEST(ContainerChecks, DeviceIntendedReadOnly) {
    ContainerConfig c = hardened_container();
    c.devices.push_back({"/dev/snd", "/dev/snd", DevicePerms::parse("rwm"), true});
    const auto fs = check_container(c);
    const Finding* f = find_rule(fs, "DEV-02");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->remediation, "docker run --device=/dev/snd:/dev/snd:r ...");
    c.devices[0].perms = DevicePerms::parse("r");
    EXPECT_TRUE(check_container(c).empty());
}

TEST(ContainerChecks, PrivilegedDeviceMount) {
    ContainerConfig c = hardened_container();
    c.privileged = true;
    c.volumes.push_back({"/dev/sda", "/dev/sda", true, true});
    EXPECT_EQ(rules_of(check_container(c)), (std::vector<std::string>{"DEV-01", "PRIV-01"}));
}

TEST(ContainerChecks, SshAndSeccompAndLsm) {
    ContainerConfig c = hardened_container();
    c.sensitive_services = {"sshd"};
    c.security.seccomp_restricted = false;
    c.security.selinux_level.reset();
    EXPECT_EQ(rules_of(check_container(c)), (std::vector<std::string>{"LSM-01", "SEC-01", "SVC-01"}));
    c.policy_modules = {"apache"};
    EXPECT_EQ(rules_of(check_container(c)), (std::vector<std::string>{"SEC-01", "SVC-01"}));
}

TEST(RunAudit, EmptyInputWithCompliantDaemon) {
    EXPECT_TRUE(run_audit(std::span<const ContainerConfig>{}, compliant_daemon(), {}).empty());
}

TEST(RunAudit, ComposesContainerAndDaemonFindings) {
    ContainerConfig c = hardened_container();
    c.privileged = true;
    DaemonConfig d = compliant_daemon();
    d.icc_enabled = true;
    std::vector<ContainerConfig> cs{c};
    auto all = run_audit(cs, d, {});
    auto expect = check_container(c);
    auto daemon = check_daemon(d);
    expect.insert(expect.end(), daemon.begin(), daemon.end());
    sort_findings(expect);
    EXPECT_EQ(all, expect);
}

TEST(RunAudit, DuplicateContainersStableOrder) {
    ContainerConfig a = hardened_container(), b = hardened_container();
    a.name = "b";
    b.name = "a";
    a.limits.memory_bytes.reset();
    b.limits.memory_bytes.reset();
    std::vector<ContainerConfig> cs{a, b};
    auto fs = run_audit(cs, compliant_daemon(), {});
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].subject, "a");
    EXPECT_EQ(fs[1].subject, "b");
    EXPECT_EQ(fs, run_audit(cs, compliant_daemon(), {}));
}

TEST(RuleTable, AlternativeTableMustCoverCatalog) {
    EXPECT_NO_THROW(require_catalog(RuleTable::builtin()));
    EXPECT_THROW(require_catalog(RuleTable::parse(R"({"version":1,"rules":[]})")), SchemaError);
}

TEST(RuleTable, EveryFindingUsesTableSeverity) {
    testing::Gen g(3);
    for (int i = 0; i < 200; ++i) {
        AuditInput in = g.audit_input();
        for (const auto& f : run_audit(in)) {
            EXPECT_EQ(f.severity, RuleTable::builtin().at(f.rule.str()).severity);
            EXPECT_EQ(f.guideline, RuleTable::builtin().at(f.rule.str()).guideline);
        }
    }
}

TEST(ChecksProperty, SortedAndOnePerRuleSubject) {
    testing::Gen g(5);
    for (int i = 0; i < 300; ++i) {
        auto fs = run_audit(g.audit_input());
        for (std::size_t k = 1; k < fs.size(); ++k) {
            auto a = std::tie(fs[k - 1].rule, fs[k - 1].subject);
            auto b = std::tie(fs[k].rule, fs[k].subject);
            ASSERT_LT(a, b);
        }
    }
}

}  // namespace
}  // namespace dockguard
