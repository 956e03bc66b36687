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

// Image-shipped SELinux policy modules, modeled as JSON manifests: the types
// an image's processes run in, the transitions into them, and the labels on
// the image's binaries. Every type must stay bounded by svirt_lxc_net_t.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dockguard/json_io.hpp"

namespace dockguard {

inline constexpr std::string_view kBoundaryType = "svirt_lxc_net_t";
inline constexpr std::string_view kSystemNamespace = "system";

/// `[a-z][a-z0-9_]*_t`
bool is_valid_type_name(std::string_view name);

/// Types owned by the host policy; a module may not declare them.
bool is_reserved_type(std::string_view name);

struct SeType {
    std::string name;
    std::string owner;       // defining module
    std::string bounded_by;  // parent in the bounds chain

    friend bool operator==(const SeType&, const SeType&) = default;
};

struct TypeTransition {
    std::string source_domain;
    std::string executable_label;
    std::string result_domain;
    std::string owner;

    friend bool operator==(const TypeTransition&, const TypeTransition&) = default;
};

struct BinaryLabel {
    std::string label;
    std::string owner;

    friend bool operator==(const BinaryLabel&, const BinaryLabel&) = default;
};

struct PolicyModuleManifest {
    std::string module_name;
    std::string image_ref;
    std::vector<SeType> types;
    std::vector<TypeTransition> transitions;
    std::map<std::string, BinaryLabel> binary_labels;  // binary path -> label
    std::string bounded_by{kBoundaryType};
    /// Contributing modules, parents first. A single parsed module lists itself.
    std::vector<std::string> modules;

    const SeType* find_type(std::string_view name) const;

    friend bool operator==(const PolicyModuleManifest&, const PolicyModuleManifest&) = default;
};

enum class ViolationKind { Alter, Bound, Dangle };

struct PolicyViolation {
    ViolationKind kind;
    std::string subject;
    std::string detail;

    /// PM-ALTER, PM-BOUND or PM-DANGLE.
    std::string_view code() const;

    friend bool operator==(const PolicyViolation&, const PolicyViolation&) = default;
};

PolicyModuleManifest parse_policy_manifest(std::string_view document);
PolicyModuleManifest policy_manifest_from_json(const Json& value, const std::string& path);
Json to_json(const PolicyModuleManifest& m);

/// Empty result means the module is admissible. Sorted by (kind, subject).
std::vector<PolicyViolation> validate_policy_module(const PolicyModuleManifest& m);

/// Unions the modules of an image chain, parents first. Re-merging the same
/// module is a no-op. Throws AdmissibilityError if any input has violations
/// and MergeConflict on a type, module or binary-label collision.
PolicyModuleManifest merge_for_container(std::span<const PolicyModuleManifest> image_chain);

/// Executable label -> domain a process switches to on exec. Labels without a
/// transition stay at the boundary type. Throws AmbiguityError when one source
/// has two transitions on the same label with different results.
std::map<std::string, std::string> least_privilege_domains(const PolicyModuleManifest& m);

}  // namespace dockguard
