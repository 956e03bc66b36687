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

// Independent threat scorer: mitigation sets are restated here as literals
// rather than read from the library, and scoring is a direct all/some/none
// count per branch.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace dockguard::testing {

struct OracleClass {
    std::string name;
    std::vector<std::vector<std::string>> branches;
};

inline const std::vector<OracleClass>& oracle_classes() {
    static const std::vector<OracleClass> classes = {
        {"KernelExploit", {{"LSM-01", "ROF-01", "ICC-01", "UNS-01", "USER-01"}}},
        {"DoS", {{"CG-01", "CG-02", "CG-03"}}},
        {"ContainerBreakout", {{"PRIV-01", "ROF-01", "VOL-01", "VER-01"}}},
        {"PoisonedImage", {{"IMG-01", "IMG-02", "IMG-04"}}},
        {"CompromisedSecrets", {{"ENV-01", "ROF-01", "PRIV-01"}}},
        {"MitM", {{"ICC-01", "NET-01"}}},
        {"ArpSpoofing", {{"ARP-01"}, {"EBT-01"}}},
    };
    return classes;
}

/// "Mitigated", "Partial" or "Present".
inline std::string oracle_status(const OracleClass& c, const std::set<std::string>& firing) {
    bool some_branch_clean = false;
    bool every_branch_full = true;
    for (const auto& branch : c.branches) {
        std::size_t hits = 0;
        for (const auto& r : branch) hits += firing.count(r);
        if (hits == 0) some_branch_clean = true;
        if (hits != branch.size()) every_branch_full = false;
    }
    if (some_branch_clean) return "Mitigated";
    if (every_branch_full) return "Present";
    return "Partial";
}

inline std::vector<std::string> oracle_evidence(const OracleClass& c, const std::set<std::string>& firing) {
    std::set<std::string> out;
    for (const auto& branch : c.branches) {
        for (const auto& r : branch) {
            if (firing.count(r)) out.insert(r);
        }
    }
    return {out.begin(), out.end()};
}

inline std::vector<std::string> oracle_rules(const OracleClass& c) {
    std::set<std::string> all;
    for (const auto& b : c.branches) all.insert(b.begin(), b.end());
    return {all.begin(), all.end()};
}

}  // namespace dockguard::testing
