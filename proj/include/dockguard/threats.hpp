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
#include <map>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "dockguard/checks.hpp"

namespace dockguard {

/// The seven attack classes, in taxonomy order.
enum class AttackClass {
    KernelExploit,
    DoS,
    ContainerBreakout,
    PoisonedImage,
    CompromisedSecrets,
    MitM,
    ArpSpoofing,
};

inline constexpr std::array<AttackClass, 7> kAttackClasses = {
    AttackClass::KernelExploit,     AttackClass::DoS,  AttackClass::ContainerBreakout,
    AttackClass::PoisonedImage,     AttackClass::CompromisedSecrets,
    AttackClass::MitM,              AttackClass::ArpSpoofing,
};

std::string_view to_string(AttackClass a);
AttackClass attack_class_from_string(std::string_view s);

/// Ascending: Mitigated < Partial < Present.
enum class ThreatStatus { Mitigated, Partial, Present };

std::string_view to_string(ThreatStatus s);
ThreatStatus threat_status_from_string(std::string_view s);

/// Rules whose absence mitigates a class. A plain set has one branch; an
/// OR-group has several, any one of which is sufficient on its own.
struct MitigationSet {
    std::vector<std::set<RuleId>> branches;

    std::set<RuleId> all_rules() const;
    bool is_or_group() const noexcept { return branches.size() > 1; }
};

const std::map<AttackClass, MitigationSet>& mitigation_sets();

struct ThreatMatrix {
    std::map<AttackClass, ThreatStatus> status;
    std::map<AttackClass, std::vector<RuleId>> evidence;  // the unsatisfied mitigations, sorted

    friend bool operator==(const ThreatMatrix&, const ThreatMatrix&) = default;
};

/// Mitigated when some branch has no firing rule, Present when every branch
/// has all of its rules firing, Partial otherwise. `evidence` receives the
/// firing rules (empty when Mitigated).
ThreatStatus score_mitigation(const MitigationSet& set, const std::set<RuleId>& firing,
                              std::vector<RuleId>* evidence = nullptr);

/// Core scorer over an explicit set of firing rule ids.
ThreatMatrix evaluate_firing(const std::set<RuleId>& firing);

/// Uses findings whose subject is `subject` or the daemon. Throws
/// UnknownSubject when no finding names `subject`.
ThreatMatrix evaluate_threats(std::span<const Finding> findings, std::string_view subject);

/// Uses findings for the container, the daemon and the container's image.
/// The config itself references the subject, so this never throws.
ThreatMatrix evaluate_threats(std::span<const Finding> findings, const ContainerConfig& container);

/// Two-actor policy-module matrix: both sides confined → Mitigated, one side →
/// Partial, neither → Present.
ThreatStatus policy_module_matrix(bool source_has_pm, bool target_has_pm);

/// The same matrix derived from audit findings: scores {LSM-01 on source,
/// LSM-01 on target} with the generic scorer.
ThreatStatus pairwise_confinement_status(std::span<const Finding> findings, std::string_view source,
                                         std::string_view target);

}  // namespace dockguard
