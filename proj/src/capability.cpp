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

#include "dockguard/capability.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "dockguard/embedded_data.hpp"
#include "dockguard/error.hpp"

namespace dockguard {
namespace {

// Sorted; binary-searched.
constexpr std::array<std::string_view, 41> kKnown = {
    "AUDIT_CONTROL", "AUDIT_READ", "AUDIT_WRITE", "BLOCK_SUSPEND", "BPF",
    "CHECKPOINT_RESTORE", "CHOWN", "DAC_OVERRIDE", "DAC_READ_SEARCH", "FOWNER",
    "FSETID", "IPC_LOCK", "IPC_OWNER", "KILL", "LEASE",
    "LINUX_IMMUTABLE", "MAC_ADMIN", "MAC_OVERRIDE", "MKNOD", "NET_ADMIN",
    "NET_BIND_SERVICE", "NET_BROADCAST", "NET_RAW", "PERFMON", "SETFCAP",
    "SETGID", "SETPCAP", "SETUID", "SYSLOG", "SYS_ADMIN",
    "SYS_BOOT", "SYS_CHROOT", "SYS_MODULE", "SYS_NICE", "SYS_PACCT",
    "SYS_PTRACE", "SYS_RAWIO", "SYS_RESOURCE", "SYS_TIME", "SYS_TTY_CONFIG",
    "WAKE_ALARM",
};

std::string normalize(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char ch : token) {
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    if (out.starts_with("CAP_")) {
        out.erase(0, 4);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Capability Capability::parse(std::string_view token) {
    std::string name = normalize(token);
    if (name.empty() ||
        !std::all_of(name.begin(), name.end(), [](char ch) {
            return (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
        })) {
        throw ValueError("malformed capability token '" + std::string(token) + "'");
    }
    if (name == "ALL") {
        throw ValueError("'ALL' is not a capability");
    }
    if (!std::binary_search(kKnown.begin(), kKnown.end(), std::string_view(name))) {
        throw ValueError("unknown capability '" + std::string(token) + "'");
    }
    return Capability(std::move(name));
}

bool CapabilitySet::contains(std::string_view name) const {
    return std::any_of(caps_.begin(), caps_.end(),
                       [&](const Capability& c) { return c.name() == name; });
}

std::vector<std::string> CapabilitySet::names() const {
    std::vector<std::string> out;
    out.reserve(caps_.size());
    for (const auto& c : caps_) out.push_back(c.name());
    return out;
}

bool is_all_token(std::string_view token) { return normalize(token) == "ALL"; }

CapabilitySet effective_capabilities(const CapabilitySet& defaults,
                                     std::span<const std::string> add,
                                     std::span<const std::string> drop) {
    // Validate everything up front so a bad token fails regardless of order.
    for (const auto& t : add) {
        if (is_all_token(t)) throw ValueError("'ALL' is only permitted in cap-drop");
        (void)Capability::parse(t);
    }
    bool drop_all = false;
    std::vector<Capability> dropped;
    for (const auto& t : drop) {
        if (is_all_token(t)) {
            drop_all = true;
        } else {
            dropped.push_back(Capability::parse(t));
        }
    }

    CapabilitySet out = drop_all ? CapabilitySet{} : defaults;
    for (const auto& c : dropped) out.erase(c);
    for (const auto& t : add) out.insert(Capability::parse(t));
    return out;
}

CapabilitySet parse_capability_list(std::string_view text) {
    CapabilitySet out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.insert(Capability::parse(line));
    }
    return out;
}

const CapabilitySet& default_capabilities() {
    static const CapabilitySet defaults = parse_capability_list(embedded::kDefaultCapabilities);
    return defaults;
}

std::span<const std::string_view> known_capabilities() { return kKnown; }

}  // namespace dockguard
