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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dockguard/capability.hpp"
#include "dockguard/json_io.hpp"

namespace dockguard {

/// Dotted `major.minor[.patch]` version. Ordering is numeric per component,
/// a missing patch counts as zero.
struct Version {
    std::uint32_t major = 0;
    std::uint32_t minor = 0;
    std::uint32_t patch = 0;
    bool has_patch = false;

    static Version parse(std::string_view text);
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Version& a, const Version& b) {
        if (auto c = a.major <=> b.major; c != 0) return c;
        if (auto c = a.minor <=> b.minor; c != 0) return c;
        return a.patch <=> b.patch;
    }
    friend bool operator==(const Version& a, const Version& b) { return (a <=> b) == 0; }
};

/// Parses `128m`, `5G`, `1024`, ... into bytes. k/m/g are 1024-based.
/// Throws ValueError on zero, negative, malformed or overflowing sizes.
std::uint64_t parse_byte_size(std::string_view text);

struct ResourceLimits {
    std::optional<std::uint64_t> cpu_shares;
    std::optional<std::string> cpuset;
    std::optional<std::uint64_t> memory_bytes;
    std::optional<std::uint64_t> storage_base_bytes;

    friend bool operator==(const ResourceLimits&, const ResourceLimits&) = default;
};

/// The `rwm` permission triple of a device grant; m is mknod.
struct DevicePerms {
    bool read = false;
    bool write = false;
    bool mknod = false;

    static DevicePerms parse(std::string_view text);
    std::string to_string() const;
    bool any() const noexcept { return read || write || mknod; }
    bool read_only() const noexcept { return read && !write && !mknod; }

    friend bool operator==(const DevicePerms&, const DevicePerms&) = default;
};

struct DeviceGrant {
    std::string host_path;
    std::string container_path;
    DevicePerms perms;
    bool read_only_intent = false;  // native `intent: "r"` annotation

    friend bool operator==(const DeviceGrant&, const DeviceGrant&) = default;
};

struct VolumeMount {
    std::string host_path;
    std::string container_path;
    bool read_only = false;
    bool nosuid = false;

    friend bool operator==(const VolumeMount&, const VolumeMount&) = default;
};

/// Mirrors the `--security-opt` label/apparmor forms one-to-one.
struct SecurityOptions {
    std::optional<std::string> selinux_user;
    std::optional<std::string> selinux_role;
    std::optional<std::string> selinux_type;
    std::optional<std::string> selinux_level;
    std::optional<std::string> apparmor_profile;
    bool seccomp_restricted = false;
    bool read_only_rootfs = false;

    bool has_selinux_label() const noexcept {
        return selinux_user || selinux_role || selinux_type || selinux_level;
    }

    /// Applies one `label:user:X` / `label=type:X` / `apparmor:P` string.
    /// Returns false for forms this model does not track.
    bool apply(std::string_view opt);
    /// The label/apparmor options in canonical `label:<field>:<value>` form.
    std::vector<std::string> to_security_opts() const;

    friend bool operator==(const SecurityOptions&, const SecurityOptions&) = default;
};

enum class NetworkMode { Bridge, Host, None, Custom };

std::string_view to_string(NetworkMode m);
NetworkMode network_mode_from_string(std::string_view s);

struct PortMapping {
    std::uint16_t host_port = 0;
    std::uint16_t container_port = 0;

    friend bool operator==(const PortMapping&, const PortMapping&) = default;
};

struct ContainerConfig {
    std::string name;
    std::string image_ref;
    bool privileged = false;
    CapabilitySet capabilities;
    ResourceLimits limits;
    std::vector<DeviceGrant> devices;
    std::vector<VolumeMount> volumes;
    SecurityOptions security;
    std::optional<std::string> run_user;  // unset means root
    std::vector<std::string> env;
    NetworkMode network_mode = NetworkMode::Bridge;
    std::vector<PortMapping> published_ports;
    std::vector<std::string> sensitive_services;
    bool ebtables_antispoof = false;
    /// Names of admissible policy modules shipped with this container's image.
    /// Filled in when an audit document is assembled, never parsed.
    std::vector<std::string> policy_modules;

    friend bool operator==(const ContainerConfig&, const ContainerConfig&) = default;
};

enum class ExecutionDriver { Libcontainer, Lxc };

struct DaemonConfig {
    Version engine_version;
    bool tcp_socket_enabled = false;
    bool tls_enabled = false;
    bool icc_enabled = false;
    bool selinux_enabled = false;
    bool apparmor_available = false;
    bool userns_remap = false;
    ExecutionDriver execution_driver = ExecutionDriver::Libcontainer;
    std::optional<std::string> logging_driver;
    Version kernel_version;
    bool kernel_hardened = false;
    bool dedicated_host = false;
    bool inside_vm = false;

    friend bool operator==(const DaemonConfig&, const DaemonConfig&) = default;
};

enum class RegistryOrigin { OfficialHub, Private, LocalLoad, Unknown };

std::string_view to_string(RegistryOrigin o);

struct ImageProvenance {
    std::string image_ref;
    bool signed_manifest = false;
    bool checksum_verified = false;
    bool content_trust_enabled = false;
    RegistryOrigin registry_origin = RegistryOrigin::Unknown;

    friend bool operator==(const ImageProvenance&, const ImageProvenance&) = default;
};

enum class ConfigFormat {
    InspectJson,  // subset of `docker inspect` output
    AuditJson,    // native schema, see docs/audit-schema.md
};

ContainerConfig parse_container_config(std::string_view document, ConfigFormat format,
                                       ParseDiagnostics* diag = nullptr);
DaemonConfig parse_daemon_config(std::string_view document, ParseDiagnostics* diag = nullptr);
ImageProvenance parse_image_provenance(std::string_view document,
                                       ParseDiagnostics* diag = nullptr);

// Tree-level entry points used when these objects are embedded in an audit
// document; `path` is the JSON pointer of `value`.
ContainerConfig container_from_json(const Json& value, const std::string& path,
                                    const CapabilitySet& defaults,
                                    ParseDiagnostics* diag = nullptr);
ContainerConfig container_from_inspect(const Json& value, const std::string& path,
                                       const CapabilitySet& defaults,
                                       ParseDiagnostics* diag = nullptr);
DaemonConfig daemon_from_json(const Json& value, const std::string& path,
                              ParseDiagnostics* diag = nullptr);
ImageProvenance image_from_json(const Json& value, const std::string& path,
                                ParseDiagnostics* diag = nullptr);

/// Native-schema serialization. The capability set is written out explicitly
/// as `capabilities`, so re-parsing does not depend on the default whitelist.
Json to_json(const ContainerConfig& c);
Json to_json(const DaemonConfig& d);
Json to_json(const ImageProvenance& img);

}  // namespace dockguard
