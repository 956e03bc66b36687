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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dockguard {

/// Dotted-quad IPv4 address. Parsing is strict: four decimal octets, no
/// leading zeros, no surrounding whitespace.
struct Ipv4Address {
    std::array<std::uint8_t, 4> octets{};

    static Ipv4Address parse(std::string_view text);
    std::uint32_t to_uint() const noexcept;
    std::string to_string() const;

    friend auto operator<=>(const Ipv4Address&, const Ipv4Address&) = default;
};

/// IPv4 prefix with zero host bits.
struct CidrRange {
    Ipv4Address address;
    std::uint8_t prefix_len = 0;

    /// `a.b.c.d/p`. Throws ValueError on bad syntax, prefix > 32, or host bits set.
    static CidrRange parse(std::string_view text);
    std::string to_string() const;
};

struct MacAddress {
    std::array<std::uint8_t, 6> octets{};

    /// `aa:bb:cc:dd:ee:ff`, either case. Output is lowercase.
    static MacAddress parse(std::string_view text);
    std::string to_string() const;
    bool unicast() const noexcept { return (octets[0] & 0x01) == 0; }

    friend auto operator<=>(const MacAddress&, const MacAddress&) = default;
};

struct BridgeBinding {
    std::string container_name;
    MacAddress mac;
    Ipv4Address ipv4;
};

/// Builds a binding; throws ValueError for a multicast MAC or bad addresses.
BridgeBinding make_binding(std::string container_name, std::string_view mac, std::string_view ipv4);

/// Reads `{"bindings":[{"container_name":..,"mac":..,"ipv4":..}, ...]}`.
std::vector<BridgeBinding> parse_bindings(std::string_view document);

/// The docker0 source-range filter template; `<source_ip_range>` is the only
/// substitution point.
inline constexpr std::string_view kIptablesRejectTemplate =
    "iptables -t filter -A FORWARD -s <source_ip_range> -j REJECT --reject-with icmp-admin-prohibited";

std::string iptables_reject_rule(const CidrRange& range);

/// ebtables ARP/MAC anti-spoofing script, one rule per line, LF-terminated.
/// Per binding (sorted by container name): an ARP accept matching sender MAC
/// and IP, then an IPv4 accept matching source MAC and IP. Two DROP tails
/// follow: all remaining ARP, then everything else. Throws ValueError on an
/// empty list or duplicate MAC/IP.
std::string ebtables_antispoof_rules(std::span<const BridgeBinding> bindings);

}  // namespace dockguard
