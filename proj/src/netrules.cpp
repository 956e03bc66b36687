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

#include "dockguard/netrules.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "dockguard/error.hpp"
#include "dockguard/json_io.hpp"

namespace dockguard {
namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Ipv4Address Ipv4Address::parse(std::string_view text) {
    Ipv4Address a;
    std::string_view rest = text;
    for (int i = 0; i < 4; ++i) {
        auto dot = rest.find('.');
        if ((i < 3) == (dot == std::string_view::npos)) throw ValueError("malformed IPv4 address '" + std::string(text) + "'");
        std::string_view part = rest.substr(0, dot);
        unsigned v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || part.size() > 3 || ec != std::errc{} || p != part.data() + part.size() || v > 255 ||
            (part.size() > 1 && part.front() == '0')) {
            throw ValueError("malformed IPv4 address '" + std::string(text) + "'");
        }
        a.octets[i] = static_cast<std::uint8_t>(v);
        rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    }
    return a;
}

std::uint32_t Ipv4Address::to_uint() const noexcept {
    return (std::uint32_t{octets[0]} << 24) | (std::uint32_t{octets[1]} << 16) | (std::uint32_t{octets[2]} << 8) |
           std::uint32_t{octets[3]};
}

std::string Ipv4Address::to_string() const {
    return std::to_string(octets[0]) + "." + std::to_string(octets[1]) + "." + std::to_string(octets[2]) + "." +
           std::to_string(octets[3]);
}

CidrRange CidrRange::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw ValueError("CIDR range needs a prefix length: '" + std::string(text) + "'");
    CidrRange r;
    r.address = Ipv4Address::parse(text.substr(0, slash));
    std::string_view len = text.substr(slash + 1);
    unsigned p = 0;
    auto [end, ec] = std::from_chars(len.data(), len.data() + len.size(), p);
    if (len.empty() || len.size() > 2 || ec != std::errc{} || end != len.data() + len.size() || p > 32 ||
        (len.size() > 1 && len.front() == '0')) {
        throw ValueError("malformed prefix length in '" + std::string(text) + "'");
    }
    r.prefix_len = static_cast<std::uint8_t>(p);
    std::uint32_t host_mask = p == 32 ? 0u : (p == 0 ? 0xFFFFFFFFu : (0xFFFFFFFFu >> p));
    if ((r.address.to_uint() & host_mask) != 0) {
        throw ValueError("host bits set in '" + std::string(text) + "'");
    }
    return r;
}

std::string CidrRange::to_string() const { return address.to_string() + "/" + std::to_string(prefix_len); }

MacAddress MacAddress::parse(std::string_view text) {
    MacAddress m;
    if (text.size() != 17) throw ValueError("malformed MAC address '" + std::string(text) + "'");
    for (int i = 0; i < 6; ++i) {
        int hi = hex_digit(text[i * 3]);
        int lo = hex_digit(text[i * 3 + 1]);
        if (hi < 0 || lo < 0 || (i < 5 && text[i * 3 + 2] != ':')) {
            throw ValueError("malformed MAC address '" + std::string(text) + "'");
        }
        m.octets[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return m;
}

std::string MacAddress::to_string() const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (i != 0) s.push_back(':');
        s.push_back(kHex[octets[i] >> 4]);
        s.push_back(kHex[octets[i] & 0xF]);
    }
    return s;
}

BridgeBinding make_binding(std::string container_name, std::string_view mac, std::string_view ipv4) {
    if (container_name.empty()) throw ValueError("binding has an empty container name");
    BridgeBinding b{std::move(container_name), MacAddress::parse(mac), Ipv4Address::parse(ipv4)};
    if (!b.mac.unicast()) throw ValueError("MAC address " + b.mac.to_string() + " is not unicast");
    return b;
}

std::vector<BridgeBinding> parse_bindings(std::string_view document) {
    Json root = parse_json_document(document);
    ObjectReader top(root, "");
    const Json* arr = top.optional_array("bindings");
    if (arr == nullptr) throw SchemaError("/bindings", "required field missing");
    std::vector<BridgeBinding> out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        ObjectReader r((*arr)[i], json_pointer_append("/bindings", i));
        std::string name = r.required_string("container_name");
        std::string mac = r.required_string("mac");
        std::string ip = r.required_string("ipv4");
        try {
            out.push_back(make_binding(std::move(name), mac, ip));
        } catch (const ValueError& e) {
            throw ValueError(r.path() + ": " + e.what());
        }
    }
    return out;
}

std::string iptables_reject_rule(const CidrRange& range) {
    constexpr std::string_view placeholder = "<source_ip_range>";
    std::string out(kIptablesRejectTemplate);
    out.replace(out.find(placeholder), placeholder.size(), range.to_string());
    return out;
}

std::string ebtables_antispoof_rules(std::span<const BridgeBinding> bindings) {
    if (bindings.empty()) throw ValueError("no bridge bindings given");
    std::set<MacAddress> macs;
    std::set<Ipv4Address> ips;
    for (const auto& b : bindings) {
        if (!b.mac.unicast()) throw ValueError("MAC address " + b.mac.to_string() + " is not unicast");
        if (!macs.insert(b.mac).second) throw ValueError("duplicate MAC address " + b.mac.to_string());
        if (!ips.insert(b.ipv4).second) throw ValueError("duplicate IPv4 address " + b.ipv4.to_string());
    }

    std::vector<const BridgeBinding*> sorted;
    for (const auto& b : bindings) sorted.push_back(&b);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const BridgeBinding* a, const BridgeBinding* b) { return a->container_name < b->container_name; });

    std::string out;
    for (const BridgeBinding* b : sorted) {
        const std::string mac = b->mac.to_string();
        const std::string ip = b->ipv4.to_string();
        out += "ebtables -A FORWARD -p ARP --arp-mac-src " + mac + " --arp-ip-src " + ip + " -j ACCEPT\n";
        out += "ebtables -A FORWARD -p IPv4 -s " + mac + " --ip-src " + ip + " -j ACCEPT\n";
    }
    out += "ebtables -A FORWARD -p ARP -j DROP\n";
    out += "ebtables -A FORWARD -j DROP\n";
    return out;
}

}  // namespace dockguard
