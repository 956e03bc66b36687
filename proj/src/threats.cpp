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

#include "dockguard/threats.hpp"

#include <algorithm>

#include "dockguard/error.hpp"

namespace dockguard {
namespace {

std::set<RuleId> ids(std::initializer_list<std::string_view> list) {
    std::set<RuleId> out;
    for (auto s : list) out.insert(RuleId::parse(s));
    return out;
}

std::set<RuleId> firing_for(std::span<const Finding> findings, std::initializer_list<std::string_view> subjects) {
    std::set<RuleId> out;
    for (const auto& f : findings) {
        if (std::find(subjects.begin(), subjects.end(), f.subject) != subjects.end()) out.insert(f.rule);
    }
    return out;
}

}  // namespace

std::string_view to_string(AttackClass a) {
    switch (a) {
        case AttackClass::KernelExploit: return "KernelExploit";
        case AttackClass::DoS: return "DoS";
        case AttackClass::ContainerBreakout: return "ContainerBreakout";
        case AttackClass::PoisonedImage: return "PoisonedImage";
        case AttackClass::CompromisedSecrets: return "CompromisedSecrets";
        case AttackClass::MitM: return "MitM";
        case AttackClass::ArpSpoofing: return "ArpSpoofing";
    }
    return "";
}

AttackClass attack_class_from_string(std::string_view s) {
    for (auto a : kAttackClasses) {
        if (to_string(a) == s) return a;
    }
    throw ValueError("unknown attack class '" + std::string(s) + "'");
}

std::string_view to_string(ThreatStatus s) {
    switch (s) {
        case ThreatStatus::Present: return "Present";
        case ThreatStatus::Partial: return "Partial";
        case ThreatStatus::Mitigated: return "Mitigated";
    }
    return "";
}

ThreatStatus threat_status_from_string(std::string_view s) {
    if (s == "Present") return ThreatStatus::Present;
    if (s == "Partial") return ThreatStatus::Partial;
    if (s == "Mitigated") return ThreatStatus::Mitigated;
    throw ValueError("unknown threat status '" + std::string(s) + "'");
}

std::set<RuleId> MitigationSet::all_rules() const {
    std::set<RuleId> out;
    for (const auto& b : branches) out.insert(b.begin(), b.end());
    return out;
}

const std::map<AttackClass, MitigationSet>& mitigation_sets() {
    static const std::map<AttackClass, MitigationSet> sets = {
        {AttackClass::KernelExploit, {{ids({"LSM-01", "ROF-01", "ICC-01", "UNS-01", "USER-01"})}}},
        {AttackClass::DoS, {{ids({"CG-01", "CG-02", "CG-03"})}}},
        {AttackClass::ContainerBreakout, {{ids({"PRIV-01", "ROF-01", "VOL-01", "VER-01"})}}},
        {AttackClass::PoisonedImage, {{ids({"IMG-01", "IMG-02", "IMG-04"})}}},
        {AttackClass::CompromisedSecrets, {{ids({"ENV-01", "ROF-01", "PRIV-01"})}}},
        {AttackClass::MitM, {{ids({"ICC-01", "NET-01"})}}},
        // Dropping NET_RAW or filtering frames with ebtables each suffice.
        {AttackClass::ArpSpoofing, {{ids({"ARP-01"}), ids({"EBT-01"})}}},
    };
    return sets;
}

ThreatStatus score_mitigation(const MitigationSet& set, const std::set<RuleId>& firing,
                              std::vector<RuleId>* evidence) {
    bool any_branch_clear = false;
    bool all_branches_full = true;
    std::set<RuleId> unsatisfied;
    for (const auto& branch : set.branches) {
        std::size_t hits = 0;
        for (const auto& r : branch) {
            if (firing.contains(r)) {
                ++hits;
                unsatisfied.insert(r);
            }
        }
        if (hits == 0) any_branch_clear = true;
        if (hits != branch.size()) all_branches_full = false;
    }
    ThreatStatus status = any_branch_clear    ? ThreatStatus::Mitigated
                          : all_branches_full ? ThreatStatus::Present
                                              : ThreatStatus::Partial;
    // Evidence is kept even when an OR-group is mitigated by another branch.
    if (evidence != nullptr) evidence->assign(unsatisfied.begin(), unsatisfied.end());
    return status;
}

ThreatMatrix evaluate_firing(const std::set<RuleId>& firing) {
    ThreatMatrix m;
    for (const auto& [cls, set] : mitigation_sets()) {
        std::vector<RuleId> ev;
        m.status[cls] = score_mitigation(set, firing, &ev);
        m.evidence[cls] = std::move(ev);
    }
    return m;
}

ThreatMatrix evaluate_threats(std::span<const Finding> findings, std::string_view subject) {
    bool referenced = std::any_of(findings.begin(), findings.end(),
                                  [&](const Finding& f) { return f.subject == subject; });
    if (!referenced) throw UnknownSubject("no finding references subject '" + std::string(subject) + "'");
    return evaluate_firing(firing_for(findings, {subject, kDaemonSubject}));
}

ThreatMatrix evaluate_threats(std::span<const Finding> findings, const ContainerConfig& container) {
    return evaluate_firing(firing_for(findings, {container.name, kDaemonSubject, container.image_ref}));
}

ThreatStatus policy_module_matrix(bool source_has_pm, bool target_has_pm) {
    if (source_has_pm && target_has_pm) return ThreatStatus::Mitigated;
    if (source_has_pm || target_has_pm) return ThreatStatus::Partial;
    return ThreatStatus::Present;
}

ThreatStatus pairwise_confinement_status(std::span<const Finding> findings, std::string_view source,
                                         std::string_view target) {
    // Two pseudo-rules, one per actor, so the pair is an ordinary all/some/none set.
    static const RuleId source_rule = RuleId::parse("SRC-01");
    static const RuleId target_rule = RuleId::parse("TGT-01");
    std::set<RuleId> firing;
    for (const auto& f : findings) {
        if (f.rule != "LSM-01") continue;
        if (f.subject == source) firing.insert(source_rule);
        if (f.subject == target) firing.insert(target_rule);
    }
    return score_mitigation(MitigationSet{{{source_rule, target_rule}}}, firing);
}

}  // namespace dockguard
