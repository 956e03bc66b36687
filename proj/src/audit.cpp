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

#include "dockguard/audit.hpp"

#include <set>

#include "dockguard/error.hpp"

namespace dockguard {

const ContainerConfig* AuditInput::find_container(std::string_view name) const {
    for (const auto& c : containers) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::map<std::string, ImagePolicy> resolve_policy_modules(std::span<const PolicyModuleManifest> modules) {
    std::map<std::string, std::vector<PolicyModuleManifest>> by_image;
    for (const auto& m : modules) by_image[m.image_ref].push_back(m);

    std::map<std::string, ImagePolicy> out;
    for (const auto& [image, chain] : by_image) {
        ImagePolicy& p = out[image];
        for (const auto& m : chain) {
            for (const auto& v : validate_policy_module(m)) {
                p.problems.push_back(m.module_name + ": " + std::string(v.code()) + " " + v.subject + " (" +
                                     v.detail + ")");
            }
        }
        if (!p.problems.empty()) continue;
        try {
            p.modules = merge_for_container(chain).modules;
        } catch (const Error& e) {
            p.problems.emplace_back(e.what());
        }
    }
    return out;
}

void attach_policy_modules(AuditInput& input) {
    auto resolved = resolve_policy_modules(input.policy_modules);
    for (auto& c : input.containers) {
        c.policy_modules.clear();
        if (auto it = resolved.find(c.image_ref); it != resolved.end() && it->second.problems.empty()) {
            c.policy_modules = it->second.modules;
        }
    }
}

AuditInput audit_input_from_json(const Json& root, const CapabilitySet& defaults, ParseDiagnostics* diag) {
    ObjectReader top(root, "");
    AuditInput in;

    const Json* containers = top.optional_array("containers");
    if (containers == nullptr) throw SchemaError("/containers", "required field missing");
    std::set<std::string> names;
    for (std::size_t i = 0; i < containers->size(); ++i) {
        const std::string path = json_pointer_append("/containers", i);
        ContainerConfig c = container_from_json((*containers)[i], path, defaults, diag);
        if (!names.insert(c.name).second) throw ValueError(path + "/name: duplicate container name '" + c.name + "'");
        in.containers.push_back(std::move(c));
    }

    in.daemon = daemon_from_json(top.required("daemon"), "/daemon", diag);

    std::set<std::string> refs;
    if (const Json* images = top.optional_array("images")) {
        for (std::size_t i = 0; i < images->size(); ++i) {
            const std::string path = json_pointer_append("/images", i);
            ImageProvenance img = image_from_json((*images)[i], path, diag);
            if (!refs.insert(img.image_ref).second) {
                throw ValueError(path + "/image_ref: duplicate image '" + img.image_ref + "'");
            }
            in.images.push_back(std::move(img));
        }
    }

    if (const Json* modules = top.optional_array("policy_modules")) {
        for (std::size_t i = 0; i < modules->size(); ++i) {
            in.policy_modules.push_back(
                policy_manifest_from_json((*modules)[i], json_pointer_append("/policy_modules", i)));
        }
    }

    top.report_unknown(diag);
    attach_policy_modules(in);
    return in;
}

AuditInput parse_audit_document(std::string_view text, const CapabilitySet& defaults, ParseDiagnostics* diag) {
    return audit_input_from_json(parse_json_document(text), defaults, diag);
}

Json to_json(const AuditInput& input) {
    Json j = Json::object();
    j["containers"] = Json::array();
    for (const auto& c : input.containers) j["containers"].push_back(to_json(c));
    j["daemon"] = to_json(input.daemon);
    j["images"] = Json::array();
    for (const auto& img : input.images) j["images"].push_back(to_json(img));
    j["policy_modules"] = Json::array();
    for (const auto& m : input.policy_modules) j["policy_modules"].push_back(to_json(m));
    return j;
}

std::vector<Finding> run_audit(const AuditInput& input, const RuleTable& table) {
    std::vector<Finding> out = run_audit(input.containers, input.daemon, input.images, table);
    for (const auto& [image, policy] : resolve_policy_modules(input.policy_modules)) {
        if (policy.problems.empty()) continue;
        std::string message = "policy modules cannot be installed: ";
        for (std::size_t i = 0; i < policy.problems.size(); ++i) {
            if (i != 0) message += "; ";
            message += policy.problems[i];
        }
        out.push_back(make_finding(table, "PM-01", image, std::move(message)));
    }
    sort_findings(out);
    return out;
}

ThreatMatrix evaluate_threats(const AuditInput& input, std::span<const Finding> findings, std::string_view name) {
    const ContainerConfig* c = input.find_container(name);
    if (c == nullptr) throw UnknownSubject("no container named '" + std::string(name) + "'");
    return evaluate_threats(findings, *c);
}

}  // namespace dockguard
