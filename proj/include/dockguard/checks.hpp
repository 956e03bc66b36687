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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dockguard/config.hpp"
#include "dockguard/rule_table.hpp"

namespace dockguard {

/// Subject used for daemon-level findings.
inline constexpr std::string_view kDaemonSubject = "daemon";

struct Finding {
    RuleId rule;
    Severity severity;
    std::string subject;    // container name, "daemon" or image_ref
    std::string guideline;  // copied from the rule table
    std::string message;
    std::optional<std::string> remediation;

    friend bool operator==(const Finding&, const Finding&) = default;
};

/// Every rule id the engine can emit, sorted.
std::span<const std::string_view> catalog_rule_ids();

/// Throws SchemaError when `table` lacks an entry for a catalog rule.
void require_catalog(const RuleTable& table);

/// Key-name secret heuristic: (?i)(pass(word)?|secret|token|api_?key).
bool is_secret_env_key(std::string_view key);

Finding make_finding(const RuleTable& table, std::string_view rule, std::string subject,
                     std::string message, const std::map<std::string, std::string>& bindings = {});

std::vector<Finding> check_image_provenance(const ImageProvenance& img,
                                            const RuleTable& table = RuleTable::builtin());
std::vector<Finding> check_daemon(const DaemonConfig& d, const RuleTable& table = RuleTable::builtin());
std::vector<Finding> check_container(const ContainerConfig& c,
                                     const RuleTable& table = RuleTable::builtin());

/// Stable sort by (rule id, subject).
void sort_findings(std::vector<Finding>& findings);

/// All checks over all subjects, sorted by (rule id, subject).
std::vector<Finding> run_audit(std::span<const ContainerConfig> containers, const DaemonConfig& daemon,
                               std::span<const ImageProvenance> images,
                               const RuleTable& table = RuleTable::builtin());

}  // namespace dockguard
