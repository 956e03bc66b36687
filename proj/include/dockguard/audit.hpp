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

// The native audit document: every container, the daemon, image provenance
// records and the policy modules shipped with those images.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dockguard/checks.hpp"
#include "dockguard/config.hpp"
#include "dockguard/policy_module.hpp"
#include "dockguard/threats.hpp"

namespace dockguard {

struct AuditInput {
    std::vector<ContainerConfig> containers;
    DaemonConfig daemon;
    std::vector<ImageProvenance> images;
    std::vector<PolicyModuleManifest> policy_modules;

    const ContainerConfig* find_container(std::string_view name) const;
};

/// Outcome of installing the policy modules of one image.
struct ImagePolicy {
    std::vector<std::string> modules;  // admissible and mergeable, parents first
    std::vector<std::string> problems; // empty when the set is usable
};

/// Groups `policy_modules` by image_ref, validates and merges each group.
std::map<std::string, ImagePolicy> resolve_policy_modules(std::span<const PolicyModuleManifest> modules);

/// Sets ContainerConfig::policy_modules from the resolved module sets.
void attach_policy_modules(AuditInput& input);

/// Parses the native document and attaches policy modules. Duplicate
/// container names or image refs are a ValueError.
AuditInput parse_audit_document(std::string_view text, const CapabilitySet& defaults = default_capabilities(),
                                ParseDiagnostics* diag = nullptr);
AuditInput audit_input_from_json(const Json& root, const CapabilitySet& defaults = default_capabilities(),
                                 ParseDiagnostics* diag = nullptr);
Json to_json(const AuditInput& input);

/// Container, daemon and image checks plus PM-01 for unusable policy
/// modules, sorted by (rule id, subject).
std::vector<Finding> run_audit(const AuditInput& input, const RuleTable& table = RuleTable::builtin());

/// Throws UnknownSubject when no container in `input` has that name.
ThreatMatrix evaluate_threats(const AuditInput& input, std::span<const Finding> findings, std::string_view name);

}  // namespace dockguard
