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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dockguard/audit.hpp"

namespace dockguard {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct AuditReport {
    std::string tool_version;
    std::string input_digest;  // SHA-256 of the canonical input document, hex
    std::vector<Finding> findings;
    std::map<std::string, ThreatMatrix> threats;  // per container
    std::map<Severity, std::size_t> summary;      // every severity present, possibly 0

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Digest of canonical_dump(document).
std::string input_digest(const Json& document);

std::map<Severity, std::size_t> severity_histogram(const std::vector<Finding>& findings);

AuditReport build_report(const AuditInput& input, std::string digest,
                         const RuleTable& table = RuleTable::builtin());

/// Parse, audit and digest in one step.
AuditReport audit_document(std::string_view text, const RuleTable& table = RuleTable::builtin(),
                           const CapabilitySet& defaults = default_capabilities());

enum class ReportFormat { Text, Json };

Json to_json(const Finding& f);
Json to_json(const ThreatMatrix& m);
Json to_json(const AuditReport& r);
AuditReport report_from_json(const Json& value);

/// JSON: canonical bytes. Text: one finding per line, then the threat table.
std::string render_report(const AuditReport& r, ReportFormat format);

/// Per-container threat table as printed by `dockguard threats`.
std::string render_threat_table(const std::map<std::string, ThreatMatrix>& threats);

/// The 2x2 source/target policy-module matrix.
std::string render_policy_module_matrix();

}  // namespace dockguard
