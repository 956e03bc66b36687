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

#include "dockguard/config.hpp"
#include "dockguard/error.hpp"
#include "generators.hpp"

namespace dockguard {
namespace {

ContainerConfig native(std::string_view doc) { return parse_container_config(doc, ConfigFormat::AuditJson); }

constexpr std::string_view kDaemonTail =
    R"("tcp_socket_enabled":false,"tls_enabled":false,"selinux_enabled":true,"apparmor_available":false,)"
    R"("userns_remap":false,"kernel_version":"3.13","kernel_hardened":false,"dedicated_host":false,"inside_vm":false})";

TEST(ContainerConfig, CapDropAllRetainsNothing) {
    auto c = native(R"({"name":"a","image":"debian","privileged":false,"read_only_rootfs":false,"cap_drop":["ALL"]})");
    EXPECT_TRUE(c.capabilities.empty());
    EXPECT_EQ(c.image_ref, "debian");
}

TEST(ContainerConfig, DefaultsApplyWithoutCapabilityEdits) {
    auto c = native(R"({"name":"a","image":"debian","privileged":false,"read_only_rootfs":false})");
    EXPECT_EQ(c.capabilities, default_capabilities());
    EXPECT_FALSE(c.run_user.has_value());
    EXPECT_EQ(c.network_mode, NetworkMode::Bridge);
}

TEST(ContainerConfig, EmptyObjectNamesMissingField) {
    try {
        native("{}");
        FAIL() << "expected SchemaError";
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.path(), "/name");
    }
}

TEST(ContainerConfig, MemorySuffix) {
    auto c = native(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":false,"memory":"128m"})");
    EXPECT_EQ(c.limits.memory_bytes, 134217728u);
}

TEST(ContainerConfig, WrongTypeReportsPointer) {
    try {
        native(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":false,"volumes":[{"host_path":1}]})");
        FAIL() << "expected SchemaError";
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.path(), "/volumes/0/host_path");
    }
}

TEST(ContainerConfig, SyntaxAndValueErrors) {
    EXPECT_THROW(native("{\"name\":"), SyntaxError);
    EXPECT_THROW(native(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":false,"memory":"-5m"})"),
                 ValueError);
    EXPECT_THROW(native(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":false,"env":["=x"]})"),
                 ValueError);
    EXPECT_THROW(native(R"({"name":"daemon","image":"d","privileged":false,"read_only_rootfs":false})"), ValueError);
}

TEST(ContainerConfig, UnknownFieldsAreIgnoredAndCounted) {
    ParseDiagnostics diag;
    parse_container_config(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":false,"colour":"red"})",
                           ConfigFormat::AuditJson, &diag);
    EXPECT_EQ(diag.ignored_fields(), 1u);
}

TEST(ContainerConfig, SecurityOptForms) {
    auto c = native(R"({"name":"a","image":"d","privileged":false,"read_only_rootfs":true,
        "security_opt":["label:level:s0:c100,c200","label=type:svirt_apache_t","apparmor:docker-default"]})");
    EXPECT_EQ(c.security.selinux_level, "s0:c100,c200");
    EXPECT_EQ(c.security.selinux_type, "svirt_apache_t");
    EXPECT_EQ(c.security.apparmor_profile, "docker-default");
    EXPECT_TRUE(c.security.read_only_rootfs);
}

TEST(ContainerConfig, InspectSubset) {
    auto c = parse_container_config(R"([{"Name":"/web","Config":{"Image":"nginx","User":"www","Env":["A=1"]},
        "HostConfig":{"Privileged":true,"ReadonlyRootfs":false,"CapDrop":["NET_RAW"],"Memory":134217728,
        "Binds":["/srv:/srv:ro"],"SecurityOpt":["label:type:x_t"]}}])",
                                    ConfigFormat::InspectJson);
    EXPECT_EQ(c.name, "web");
    EXPECT_EQ(c.image_ref, "nginx");
    EXPECT_TRUE(c.privileged);
    EXPECT_FALSE(c.capabilities.contains("NET_RAW"));
    EXPECT_EQ(c.limits.memory_bytes, 134217728u);
    ASSERT_EQ(c.volumes.size(), 1u);
    EXPECT_TRUE(c.volumes[0].read_only);
    EXPECT_EQ(c.run_user, "www");
}

TEST(DaemonConfig, IccAliasAndOldVersion) {
    auto d = parse_daemon_config(std::string(R"({"engine_version":"0.11","icc":true,)") + std::string(kDaemonTail));
    EXPECT_EQ(d.engine_version, (Version{0, 11, 0, false}));
    EXPECT_TRUE(d.icc_enabled);
}

TEST(DaemonConfig, AcceptsOneEight) {
    auto d = parse_daemon_config(std::string(R"({"engine_version":"1.8.0","icc_enabled":false,)") +
                                 std::string(kDaemonTail));
    EXPECT_EQ(d.engine_version.to_string(), "1.8.0");
}

TEST(DaemonConfig, MalformedVersion) {
    EXPECT_THROW(parse_daemon_config(R"({"engine_version":"banana"})"), ValueError);
    EXPECT_THROW(Version::parse("1"), ValueError);
    EXPECT_THROW(Version::parse("1.2.3.4"), ValueError);
    EXPECT_THROW(Version::parse("1.-2"), ValueError);
}

TEST(Version, OrderingIsNumeric) {
    EXPECT_LT(Version::parse("0.9"), Version::parse("0.11"));
    EXPECT_LT(Version::parse("0.11.1"), Version::parse("1.0"));
    EXPECT_EQ(Version::parse("1.0"), Version::parse("1.0.0"));
}

TEST(ByteSize, Suffixes) {
    EXPECT_EQ(parse_byte_size("1024"), 1024u);
    EXPECT_EQ(parse_byte_size("2k"), 2048u);
    EXPECT_EQ(parse_byte_size("5G"), 5ull << 30);
    EXPECT_THROW(parse_byte_size("0"), ValueError);
    EXPECT_THROW(parse_byte_size("12q"), ValueError);
    EXPECT_THROW(parse_byte_size("99999999999999999999g"), ValueError);
}

TEST(ImageProvenance, ChecksumNeedsSignedManifest) {
    EXPECT_THROW(parse_image_provenance(R"({"image_ref":"a","signed_manifest":false,"checksum_verified":true,
        "content_trust_enabled":true,"registry_origin":"private"})"),
                 ValueError);
    auto img = parse_image_provenance(R"({"image_ref":"a","signed_manifest":true,"checksum_verified":true,
        "content_trust_enabled":true,"registry_origin":"official_hub"})");
    EXPECT_EQ(img.registry_origin, RegistryOrigin::OfficialHub);
}

TEST(ConfigProperty, ContainerRoundTrip) {
    testing::Gen g(11);
    for (int i = 0; i < 500; ++i) {
        ContainerConfig c = g.container("c" + std::to_string(i));
        ContainerConfig back = parse_container_config(canonical_dump(to_json(c)), ConfigFormat::AuditJson);
        ASSERT_EQ(back, c) << canonical_dump(to_json(c));
    }
}

TEST(ConfigProperty, DaemonAndImageRoundTrip) {
    testing::Gen g(12);
    for (int i = 0; i < 300; ++i) {
        DaemonConfig d = g.daemon();
        ASSERT_EQ(parse_daemon_config(canonical_dump(to_json(d))), d);
        ImageProvenance img = g.image("img" + std::to_string(i));
        ASSERT_EQ(parse_image_provenance(canonical_dump(to_json(img))), img);
    }
}

}  // namespace
}  // namespace dockguard
