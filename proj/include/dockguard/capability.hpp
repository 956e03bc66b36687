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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dockguard {

/// One Linux capability, stored as the canonical uppercase token without the
/// `CAP_` prefix. Only names known to the kernel are representable.
class Capability {
public:
    /// Accepts `net_raw`, `NET_RAW` or `CAP_NET_RAW`. Throws ValueError on
    /// malformed or unknown tokens and on the reserved token `ALL`.
    static Capability parse(std::string_view token);

    const std::string& name() const noexcept { return name_; }

    friend auto operator<=>(const Capability&, const Capability&) = default;

private:
    explicit Capability(std::string name) : name_(std::move(name)) {}
    std::string name_;
};

/// Effective capabilities a container runs with. Ordered, so iteration and
/// serialization are deterministic.
class CapabilitySet {
public:
    CapabilitySet() = default;
    explicit CapabilitySet(std::set<Capability> caps) : caps_(std::move(caps)) {}

    bool contains(std::string_view name) const;
    bool empty() const noexcept { return caps_.empty(); }
    std::size_t size() const noexcept { return caps_.size(); }
    const std::set<Capability>& members() const noexcept { return caps_; }
    std::vector<std::string> names() const;

    void insert(Capability c) { caps_.insert(std::move(c)); }
    void erase(const Capability& c) { caps_.erase(c); }

    auto begin() const { return caps_.begin(); }
    auto end() const { return caps_.end(); }

    friend bool operator==(const CapabilitySet&, const CapabilitySet&) = default;

private:
    std::set<Capability> caps_;
};

/// True for the reserved wildcard token (`ALL`, `all`, `CAP_ALL`).
bool is_all_token(std::string_view token);

/// (defaults \ drop) ∪ add. A drop of `ALL` clears the defaults before the
/// additions are applied. `ALL` in `add` is rejected.
CapabilitySet effective_capabilities(const CapabilitySet& defaults,
                                     std::span<const std::string> add,
                                     std::span<const std::string> drop);

/// Parses the default-capability data file format: one token per line,
/// blank lines and `#` comments ignored.
CapabilitySet parse_capability_list(std::string_view text);

/// The default whitelist shipped in data/default_capabilities.txt.
const CapabilitySet& default_capabilities();

/// Every capability name the kernel defines, sorted.
std::span<const std::string_view> known_capabilities();

}  // namespace dockguard
