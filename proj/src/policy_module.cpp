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

#include "dockguard/policy_module.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <tuple>
#include <set>

#include "dockguard/error.hpp"

namespace dockguard {
namespace {

constexpr std::array<std::string_view, 7> kReserved = {
    "container_runtime_t", "container_t", "init_t", "kernel_t", "spc_t", "svirt_lxc_net_t", "unconfined_t",
};

bool valid_module_name(std::string_view s) {
    if (s.empty() || s == kSystemNamespace) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-' || c == '.';
    });
}

std::string type_name_at(ObjectReader& r, std::string_view key) {
    std::string v = r.required_string(key);
    if (!is_valid_type_name(v)) throw ValueError(r.child(key) + ": malformed SELinux type name '" + v + "'");
    return v;
}

// Compares only the entries `module` contributed to each manifest.
bool same_module_content(const PolicyModuleManifest& a, const PolicyModuleManifest& b, const std::string& module) {
    auto owned = [&](const auto& items) {
        std::vector<std::decay_t<decltype(items.front())>> out;
        std::copy_if(items.begin(), items.end(), std::back_inserter(out),
                     [&](const auto& x) { return x.owner == module; });
        return out;
    };
    auto owned_labels = [&](const PolicyModuleManifest& m) {
        std::map<std::string, BinaryLabel> out;
        for (const auto& [path, l] : m.binary_labels) {
            if (l.owner == module) out.emplace(path, l);
        }
        return out;
    };
    return owned(a.types) == owned(b.types) && owned(a.transitions) == owned(b.transitions) &&
           owned_labels(a) == owned_labels(b);
}

std::string describe(const TypeTransition& t) {
    return "transition:" + t.source_domain + "->" + t.executable_label + "->" + t.result_domain;
}

}  // namespace

bool is_valid_type_name(std::string_view name) {
    if (name.size() < 3 || !name.ends_with("_t")) return false;
    if (name.front() < 'a' || name.front() > 'z') return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; });
}

bool is_reserved_type(std::string_view name) {
    return std::binary_search(kReserved.begin(), kReserved.end(), name);
}

const SeType* PolicyModuleManifest::find_type(std::string_view name) const {
    auto it = std::find_if(types.begin(), types.end(), [&](const SeType& t) { return t.name == name; });
    return it == types.end() ? nullptr : &*it;
}

std::string_view PolicyViolation::code() const {
    switch (kind) {
        case ViolationKind::Alter: return "PM-ALTER";
        case ViolationKind::Bound: return "PM-BOUND";
        case ViolationKind::Dangle: return "PM-DANGLE";
    }
    return "";
}

PolicyModuleManifest policy_manifest_from_json(const Json& value, const std::string& path) {
    ObjectReader r(value, path);
    PolicyModuleManifest m;
    m.module_name = r.required_string("module_name");
    if (!valid_module_name(m.module_name)) {
        throw ValueError(r.child("module_name") + ": invalid module name '" + m.module_name + "'");
    }
    m.image_ref = r.required_string("image_ref");
    m.bounded_by = r.required_string("bounded_by");
    if (m.bounded_by != kBoundaryType) {
        throw ValueError(r.child("bounded_by") + ": modules must be bounded by " + std::string(kBoundaryType) +
                         ", got '" + m.bounded_by + "'");
    }
    m.modules = {m.module_name};

    std::set<std::string> declared;
    if (const Json* types = r.optional_array("types")) {
        for (std::size_t i = 0; i < types->size(); ++i) {
            ObjectReader t((*types)[i], json_pointer_append(r.child("types"), i));
            SeType st;
            st.name = type_name_at(t, "name");
            if (is_reserved_type(st.name)) {
                throw ValueError(t.child("name") + ": '" + st.name + "' belongs to the system policy");
            }
            if (!declared.insert(st.name).second) {
                throw ValueError(t.child("name") + ": type '" + st.name + "' declared twice");
            }
            st.owner = m.module_name;
            if (auto ns = t.optional_string("namespace"); ns && *ns != m.module_name) {
                throw ValueError(t.child("namespace") + ": types must carry the module's namespace '" +
                                 m.module_name + "'");
            }
            st.bounded_by = type_name_at(t, "bounded_by");
            m.types.push_back(std::move(st));
        }
    }
    if (const Json* trans = r.optional_array("transitions")) {
        for (std::size_t i = 0; i < trans->size(); ++i) {
            ObjectReader t((*trans)[i], json_pointer_append(r.child("transitions"), i));
            TypeTransition tt;
            tt.source_domain = type_name_at(t, "source_domain");
            tt.executable_label = t.required_string("executable_label");
            if (tt.executable_label.empty()) {
                throw ValueError(t.child("executable_label") + ": must be non-empty");
            }
            tt.result_domain = type_name_at(t, "result_domain");
            tt.owner = m.module_name;
            m.transitions.push_back(std::move(tt));
        }
    }
    if (const Json* labels = r.optional_object("binary_labels")) {
        for (const auto& [bin, label] : labels->items()) {
            const std::string lp = json_pointer_append(r.child("binary_labels"), bin);
            if (bin.empty() || bin.front() != '/') throw ValueError(lp + ": binary path must be absolute");
            std::string l = expect_string(label, lp);
            if (l.empty()) throw ValueError(lp + ": label must be non-empty");
            m.binary_labels.emplace(bin, BinaryLabel{std::move(l), m.module_name});
        }
    }
    return m;
}

PolicyModuleManifest parse_policy_manifest(std::string_view document) {
    return policy_manifest_from_json(parse_json_document(document), "");
}

Json to_json(const PolicyModuleManifest& m) {
    Json j = {{"module_name", m.module_name}, {"image_ref", m.image_ref}, {"bounded_by", m.bounded_by}};
    j["types"] = Json::array();
    for (const auto& t : m.types) {
        j["types"].push_back({{"name", t.name}, {"namespace", t.owner}, {"bounded_by", t.bounded_by}});
    }
    j["transitions"] = Json::array();
    for (const auto& t : m.transitions) {
        j["transitions"].push_back({{"source_domain", t.source_domain},
                                    {"executable_label", t.executable_label},
                                    {"result_domain", t.result_domain},
                                    {"namespace", t.owner}});
    }
    j["binary_labels"] = Json::object();
    for (const auto& [path, l] : m.binary_labels) j["binary_labels"][path] = l.label;
    if (m.modules.size() > 1) {
        j["modules"] = m.modules;
        j["binary_label_origins"] = Json::object();
        for (const auto& [path, l] : m.binary_labels) j["binary_label_origins"][path] = l.owner;
    }
    return j;
}

std::vector<PolicyViolation> validate_policy_module(const PolicyModuleManifest& m) {
    std::set<std::tuple<ViolationKind, std::string, std::string>> found;
    auto add = [&](ViolationKind k, std::string subject, std::string detail) {
        found.emplace(k, std::move(subject), std::move(detail));
    };

    // A reference is in-namespace when it is the boundary or a type owned by
    // the same module as the referencing entry.
    auto foreign = [&](std::string_view name, std::string_view owner) {
        if (name == kBoundaryType) return false;
        const SeType* t = m.find_type(name);
        return t == nullptr || t->owner != owner;
    };

    for (const auto& t : m.types) {
        const std::string subject = "type:" + t.name;
        if (foreign(t.bounded_by, t.owner)) {
            add(ViolationKind::Alter, subject, "bounded by '" + t.bounded_by + "' outside namespace " + t.owner);
        }
        std::set<std::string_view> visited{t.name};
        std::string_view cur = t.bounded_by;
        while (cur != kBoundaryType) {
            const SeType* parent = m.find_type(cur);
            if (parent == nullptr || !visited.insert(cur).second) {
                add(ViolationKind::Bound, subject,
                    "bounds chain does not reach " + std::string(kBoundaryType));
                break;
            }
            cur = parent->bounded_by;
        }
    }

    for (const auto& tr : m.transitions) {
        const std::string subject = describe(tr);
        for (const auto* name : {&tr.source_domain, &tr.result_domain}) {
            if (foreign(*name, tr.owner)) {
                add(ViolationKind::Alter, subject, "references '" + *name + "' outside namespace " + tr.owner);
            }
            if (*name != kBoundaryType && m.find_type(*name) == nullptr) {
                add(ViolationKind::Dangle, subject, "references undefined type '" + *name + "'");
            }
        }
    }

    // One violation per (kind, subject); details of duplicates are merged away.
    std::vector<PolicyViolation> out;
    for (const auto& [kind, subject, detail] : found) {
        if (!out.empty() && out.back().kind == kind && out.back().subject == subject) continue;
        out.push_back(PolicyViolation{kind, subject, detail});
    }
    return out;
}

PolicyModuleManifest merge_for_container(std::span<const PolicyModuleManifest> image_chain) {
    if (image_chain.empty()) throw ValueError("image chain is empty");
    for (const auto& m : image_chain) {
        auto v = validate_policy_module(m);
        if (!v.empty()) {
            throw AdmissibilityError("module '" + m.module_name + "' is not admissible: " +
                                     std::string(v.front().code()) + " " + v.front().subject);
        }
    }

    PolicyModuleManifest out;
    std::map<std::string, const PolicyModuleManifest*> merged_by_name;
    for (const auto& m : image_chain) {
        bool all_seen = true;
        for (const auto& name : m.modules) {
            auto it = merged_by_name.find(name);
            if (it == merged_by_name.end()) {
                all_seen = false;
            } else if (!same_module_content(*it->second, m, name)) {
                throw MergeConflict("module '" + name + "' appears twice with different content");
            }
        }
        if (all_seen) continue;
        for (const auto& name : m.modules) {
            if (merged_by_name.emplace(name, &m).second) out.modules.push_back(name);
        }
        for (const auto& t : m.types) {
            if (const SeType* existing = out.find_type(t.name)) {
                throw MergeConflict("type '" + t.name + "' defined by both '" + existing->owner + "' and '" +
                                    t.owner + "'");
            }
            out.types.push_back(t);
        }
        out.transitions.insert(out.transitions.end(), m.transitions.begin(), m.transitions.end());
        for (const auto& [path, label] : m.binary_labels) {
            auto [it, inserted] = out.binary_labels.emplace(path, label);
            if (!inserted && it->second.label != label.label) {
                throw MergeConflict("binary '" + path + "' labeled '" + it->second.label + "' by '" +
                                    it->second.owner + "' and '" + label.label + "' by '" + label.owner + "'");
            }
        }
        out.image_ref = m.image_ref;
    }

    if (out.modules.size() == 1) {
        out.module_name = out.modules.front();
    } else {
        for (std::size_t i = 0; i < out.modules.size(); ++i) {
            if (i != 0) out.module_name += '+';
            out.module_name += out.modules[i];
        }
    }
    return out;
}

std::map<std::string, std::string> least_privilege_domains(const PolicyModuleManifest& m) {
    if (auto v = validate_policy_module(m); !v.empty()) {
        throw AdmissibilityError("manifest '" + m.module_name + "' is not admissible: " +
                                 std::string(v.front().code()) + " " + v.front().subject);
    }

    // label -> source -> result
    std::map<std::string, std::map<std::string, std::string>> by_label;
    for (const auto& [_, l] : m.binary_labels) by_label[l.label];
    for (const auto& tr : m.transitions) {
        auto& sources = by_label[tr.executable_label];
        auto [it, inserted] = sources.emplace(tr.source_domain, tr.result_domain);
        if (!inserted && it->second != tr.result_domain) {
            throw AmbiguityError("label '" + tr.executable_label + "' from '" + tr.source_domain +
                                 "' transitions to both '" + it->second + "' and '" + tr.result_domain + "'");
        }
    }

    std::map<std::string, std::string> out;
    for (const auto& [label, sources] : by_label) {
        if (sources.empty()) {
            out.emplace(label, std::string(kBoundaryType));
        } else if (auto it = sources.find(std::string(kBoundaryType)); it != sources.end()) {
            out.emplace(label, it->second);
        } else {
            out.emplace(label, sources.begin()->second);
        }
    }
    return out;
}

}  // namespace dockguard
