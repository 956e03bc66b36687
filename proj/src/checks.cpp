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

#include "dockguard/checks.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "dockguard/error.hpp"

namespace dockguard {
namespace {

constexpr std::array<std::string_view, 30> kCatalog = {
    "ARP-01", "CAP-01", "CG-01",  "CG-02",  "CG-03",  "DEV-01", "DEV-02", "EBT-01",
    "ENV-01", "FS-01",  "FV-01",  "ICC-01", "IMG-01", "IMG-02", "IMG-03", "IMG-04",
    "KRN-01", "LOG-01", "LSM-01", "MT-01",  "NET-01", "PM-01",  "PRIV-01", "ROF-01",
    "SEC-01", "SVC-01", "UNS-01", "USER-01", "VER-01", "VOL-01",
};

bool runs_as_root(const ContainerConfig& c) {
    return !c.run_user || *c.run_user == "root" || *c.run_user == "0" || c.run_user->starts_with("0:") ||
           c.run_user->starts_with("root:");
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

std::span<const std::string_view> catalog_rule_ids() { return kCatalog; }

void require_catalog(const RuleTable& table) {
    for (auto id : kCatalog) {
        if (table.find(id) == nullptr) {
            throw SchemaError("/rules", "rule table has no entry for " + std::string(id));
        }
    }
}

bool is_secret_env_key(std::string_view key) {
    static const std::regex re("(pass(word)?|secret|token|api_?key)", std::regex::icase);
    return std::regex_search(key.begin(), key.end(), re);
}

Finding make_finding(const RuleTable& table, std::string_view rule, std::string subject, std::string message,
                     const std::map<std::string, std::string>& bindings) {
    const RuleSpec& spec = table.at(rule);
    std::optional<std::string> remediation;
    if (spec.remediation) remediation = render_template(*spec.remediation, bindings);
    return Finding{
        .rule = spec.id,
        .severity = spec.severity,
        .subject = std::move(subject),
        .guideline = spec.guideline,
        .message = std::move(message),
        .remediation = std::move(remediation),
    };
}

std::vector<Finding> check_image_provenance(const ImageProvenance& img, const RuleTable& table) {
    std::vector<Finding> out;
    const std::string& s = img.image_ref;
    if (!img.signed_manifest) {
        out.push_back(make_finding(table, "IMG-01", s,
                                   "image has no signed manifest; pull-time verification only checks that a "
                                   "signed manifest is present"));
    }
    if (!img.content_trust_enabled) {
        out.push_back(make_finding(table, "IMG-02", s,
                                   "content trust is disabled; image signatures are not checked before pull"));
    }
    if (img.registry_origin == RegistryOrigin::Unknown) {
        out.push_back(make_finding(table, "IMG-03", s,
                                   "image origin is unknown; download and verify it locally, then import it "
                                   "with docker load"));
    }
    if (!img.checksum_verified) {
        out.push_back(make_finding(table, "IMG-04", s,
                                   "image checksum is not authenticated against the manifest"));
    }
    return out;
}

std::vector<Finding> check_daemon(const DaemonConfig& d, const RuleTable& table) {
    std::vector<Finding> out;
    const std::string s(kDaemonSubject);
    if (d.tcp_socket_enabled && !d.tls_enabled) {
        out.push_back(make_finding(table, "NET-01", s,
                                   "daemon listens on a TCP socket without TLS; anyone reaching the port can "
                                   "obtain root on the host"));
    }
    if (d.icc_enabled) {
        out.push_back(make_finding(table, "ICC-01", s, "inter-container communication is enabled on the bridge"));
    }
    if (d.engine_version < Version{1, 0, 0, false}) {
        out.push_back(make_finding(table, "VER-01", s,
                                   "engine " + d.engine_version.to_string() +
                                       " predates 1.0 and is exposed to the open_by_handle_at container breakout"));
    }
    if (!d.userns_remap) {
        out.push_back(make_finding(table, "UNS-01", s,
                                   "user namespace remapping is disabled; root in a container is root on the host"));
    }
    if (!d.kernel_hardened) {
        out.push_back(make_finding(table, "KRN-01", s,
                                   "kernel " + d.kernel_version.to_string() +
                                       " is not declared hardened; keep it patched and prefer a GRSEC/PaX kernel"));
    }
    if (!d.dedicated_host) {
        out.push_back(make_finding(table, "MT-01", s,
                                   "containers share the host with other workloads; run them on a dedicated host"));
    }
    if (!d.inside_vm) {
        out.push_back(make_finding(table, "FV-01", s,
                                   "daemon is not nested in full virtualization (e.g. KVM)"));
    }
    if (!d.logging_driver) {
        out.push_back(make_finding(table, "LOG-01", s,
                                   "no logging driver configured; forward /dev/log into containers, or collect "
                                   "logs with `docker logs ... (-f to follow log output)` and archive them with "
                                   "`docker export ...`"));
    }
    return out;
}

std::vector<Finding> check_container(const ContainerConfig& c, const RuleTable& table) {
    std::vector<Finding> out;
    const std::string& s = c.name;
    auto emit = [&](std::string_view rule, std::string message, std::map<std::string, std::string> bindings = {}) {
        out.push_back(make_finding(table, rule, s, std::move(message), bindings));
    };

    if (c.privileged) {
        emit("PRIV-01", "container runs with --privileged: it can access every host device and is not "
                        "confined by the LSM");
    }

    std::vector<std::string> suid;
    for (auto cap : {"SETUID", "SETGID"}) {
        if (c.capabilities.contains(cap)) suid.emplace_back(cap);
    }
    if (!suid.empty()) {
        emit("CAP-01", "retains " + join(suid, ", ") + "; SUID/SGID binaries can be used to escalate");
    }

    if (c.capabilities.contains("NET_RAW")) {
        emit("ARP-01", "retains NET_RAW, so processes can open PF_PACKET sockets and forge ARP replies "
                       "(ARP spoofing) on the bridge");
        if (!c.ebtables_antispoof) {
            emit("EBT-01", "NET_RAW is retained and no ebtables ARP/MAC anti-spoofing filter is declared");
        }
    }

    if (!c.security.read_only_rootfs) {
        emit("ROF-01", "root filesystem is writable");
    }

    std::vector<std::string> writable;
    const VolumeMount* first_writable = nullptr;
    std::vector<std::string> suid_mounts;
    const VolumeMount* first_suid = nullptr;
    for (const auto& v : c.volumes) {
        if (!v.read_only) {
            writable.push_back(v.host_path + ":" + v.container_path);
            if (first_writable == nullptr) first_writable = &v;
        }
        if (!v.nosuid) {
            suid_mounts.push_back(v.host_path);
            if (first_suid == nullptr) first_suid = &v;
        }
    }
    if (first_writable != nullptr) {
        emit("VOL-01", "volumes mounted read-write: " + join(writable, ", "),
             {{"host_path", first_writable->host_path}, {"container_path", first_writable->container_path}});
    }
    if (first_suid != nullptr) {
        emit("FS-01", "mounts without nosuid: " + join(suid_mounts, ", "), {{"host_path", first_suid->host_path}});
    }

    if (runs_as_root(c)) {
        emit("USER-01", c.run_user ? "container user '" + *c.run_user + "' is root" : "no user set; processes run as root",
             {{"container_name", c.name}});
    }

    if (c.privileged) {
        auto dev = std::find_if(c.volumes.begin(), c.volumes.end(), [](const VolumeMount& v) {
            return v.host_path == "/dev" || v.host_path.starts_with("/dev/");
        });
        if (dev != c.volumes.end()) {
            emit("DEV-01", "privileged container mounts device path " + dev->host_path +
                               " with -v; grant devices with --device instead",
                 {{"host_path", dev->host_path}, {"container_path", dev->container_path}});
        }
    }
    for (const auto& d : c.devices) {
        if (d.read_only_intent && !d.perms.read_only()) {
            emit("DEV-02", "device " + d.host_path + " is intended read-only but granted '" + d.perms.to_string() + "'",
                 {{"host_path", d.host_path}, {"container_path", d.container_path}});
            break;
        }
    }

    if (!c.limits.cpu_shares && !c.limits.cpuset) emit("CG-01", "no CPU limit (cpu shares or cpuset) is set");
    if (!c.limits.memory_bytes) emit("CG-02", "no memory limit is set");
    if (!c.limits.storage_base_bytes) emit("CG-03", "no storage base size limit is set");

    std::vector<std::string> secret_keys;
    for (const auto& e : c.env) {
        std::string key = e.substr(0, e.find('='));
        if (is_secret_env_key(key)) secret_keys.push_back(key);
    }
    if (!secret_keys.empty()) {
        emit("ENV-01", "environment variables look like secrets: " + join(secret_keys, ", ") +
                           "; do not share secrets through the environment");
    }

    if (std::any_of(c.sensitive_services.begin(), c.sensitive_services.end(),
                    [](const std::string& svc) { return svc == "ssh" || svc == "sshd"; })) {
        emit("SVC-01", "ssh runs inside the container; move it to a bastion host or a VM");
    }

    if (!c.security.seccomp_restricted) emit("SEC-01", "system calls are not restricted by seccomp");

    if (!c.security.has_selinux_label() && !c.security.apparmor_profile && c.policy_modules.empty()) {
        emit("LSM-01", "no SELinux label, AppArmor profile or policy module confines the container",
             {{"image", c.image_ref}});
    }
    return out;
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.rule != b.rule) return a.rule < b.rule;
        return a.subject < b.subject;
    });
}

std::vector<Finding> run_audit(std::span<const ContainerConfig> containers, const DaemonConfig& daemon,
                               std::span<const ImageProvenance> images, const RuleTable& table) {
    std::vector<Finding> out;
    for (const auto& c : containers) {
        auto f = check_container(c, table);
        out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    }
    auto fd = check_daemon(daemon, table);
    out.insert(out.end(), std::make_move_iterator(fd.begin()), std::make_move_iterator(fd.end()));
    for (const auto& img : images) {
        auto f = check_image_provenance(img, table);
        out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    }
    sort_findings(out);
    return out;
}

}  // namespace dockguard
