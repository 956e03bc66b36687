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

#include "dockguard/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>
#include <sstream>

#include "dockguard/error.hpp"

namespace dockguard {

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0xF]);
    }
    return out;
}

std::string input_digest(const Json& document) { return sha256_hex(canonical_dump(document)); }

std::map<Severity, std::size_t> severity_histogram(const std::vector<Finding>& findings) {
    std::map<Severity, std::size_t> h = {
        {Severity::Critical, 0}, {Severity::High, 0}, {Severity::Medium, 0}, {Severity::Low, 0}, {Severity::Info, 0}};
    for (const auto& f : findings) ++h[f.severity];
    return h;
}

AuditReport build_report(const AuditInput& input, std::string digest, const RuleTable& table) {
    AuditReport r;
    r.tool_version = std::string(kToolVersion);
    r.input_digest = std::move(digest);
    r.findings = run_audit(input, table);
    for (const auto& c : input.containers) r.threats.emplace(c.name, evaluate_threats(r.findings, c));
    r.summary = severity_histogram(r.findings);
    return r;
}

AuditReport audit_document(std::string_view text, const RuleTable& table, const CapabilitySet& defaults) {
    Json root = parse_json_document(text);
    AuditInput input = audit_input_from_json(root, defaults);
    return build_report(input, input_digest(root), table);
}

// --- JSON --------------------------------------------------------------

Json to_json(const Finding& f) {
    return {{"rule", f.rule.str()},
            {"severity", std::string(to_string(f.severity))},
            {"subject", f.subject},
            {"guideline", f.guideline},
            {"message", f.message},
            {"remediation", f.remediation ? Json(*f.remediation) : Json(nullptr)}};
}

Json to_json(const ThreatMatrix& m) {
    Json j = Json::object();
    for (auto cls : kAttackClasses) {
        Json ev = Json::array();
        if (auto it = m.evidence.find(cls); it != m.evidence.end()) {
            for (const auto& id : it->second) ev.push_back(id.str());
        }
        auto st = m.status.find(cls);
        j[std::string(to_string(cls))] = {
            {"status", std::string(to_string(st == m.status.end() ? ThreatStatus::Mitigated : st->second))},
            {"evidence", std::move(ev)}};
    }
    return j;
}

Json to_json(const AuditReport& r) {
    Json j = Json::object();
    j["tool_version"] = r.tool_version;
    j["input_digest"] = r.input_digest;
    j["findings"] = Json::array();
    for (const auto& f : r.findings) j["findings"].push_back(to_json(f));
    j["threats"] = Json::object();
    for (const auto& [name, m] : r.threats) j["threats"][name] = to_json(m);
    j["summary"] = Json::object();
    for (const auto& [sev, n] : r.summary) j["summary"][std::string(to_string(sev))] = n;
    return j;
}

AuditReport report_from_json(const Json& value) {
    ObjectReader top(value, "");
    AuditReport r;
    r.tool_version = top.required_string("tool_version");
    r.input_digest = top.required_string("input_digest");
    if (const Json* fs = top.optional_array("findings")) {
        for (std::size_t i = 0; i < fs->size(); ++i) {
            ObjectReader f((*fs)[i], json_pointer_append("/findings", i));
            r.findings.push_back(Finding{
                .rule = RuleId::parse(f.required_string("rule")),
                .severity = severity_from_string(f.required_string("severity")),
                .subject = f.required_string("subject"),
                .guideline = f.required_string("guideline"),
                .message = f.required_string("message"),
                .remediation = f.optional_string("remediation"),
            });
        }
    }
    if (const Json* ts = top.optional_object("threats")) {
        for (const auto& [name, mj] : ts->items()) {
            const std::string mp = json_pointer_append("/threats", name);
            ObjectReader mr(mj, mp);
            ThreatMatrix m;
            for (auto cls : kAttackClasses) {
                const std::string key(to_string(cls));
                ObjectReader cr(mr.required(key), mr.child(key));
                m.status[cls] = threat_status_from_string(cr.required_string("status"));
                auto& ev = m.evidence[cls];
                for (const auto& id : cr.string_array("evidence")) ev.push_back(RuleId::parse(id));
            }
            r.threats.emplace(name, std::move(m));
        }
    }
    ObjectReader sr(top.required("summary"), "/summary");
    for (auto sev : {Severity::Critical, Severity::High, Severity::Medium, Severity::Low, Severity::Info}) {
        const std::string key(to_string(sev));
        std::int64_t n = expect_int(sr.required(key), sr.child(key));
        if (n < 0) throw ValueError(sr.child(key) + ": negative count");
        r.summary[sev] = static_cast<std::size_t>(n);
    }
    return r;
}

// --- text --------------------------------------------------------------

namespace {

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

}  // namespace

std::string render_threat_table(const std::map<std::string, ThreatMatrix>& threats) {
    std::string out;
    for (const auto& [name, m] : threats) {
        out += "threats " + name + "\n";
        for (auto cls : kAttackClasses) {
            auto st = m.status.find(cls);
            ThreatStatus s = st == m.status.end() ? ThreatStatus::Mitigated : st->second;
            std::string line = "  " + pad(to_string(cls), 20) + pad(to_string(s), 10);
            if (auto it = m.evidence.find(cls); it != m.evidence.end()) {
                for (std::size_t i = 0; i < it->second.size(); ++i) {
                    line += (i == 0 ? "" : ", ") + it->second[i].str();
                }
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
        }
    }
    return out;
}

std::string render_policy_module_matrix() {
    std::ostringstream os;
    os << "policy module matrix (rows: source, columns: target)\n";
    os << pad("", 16) << pad("base", 12) << "policy-module\n";
    for (bool source : {false, true}) {
        os << pad(source ? "policy-module" : "base", 16);
        os << pad(to_string(policy_module_matrix(source, false)), 12);
        os << to_string(policy_module_matrix(source, true)) << "\n";
    }
    return os.str();
}

std::string render_report(const AuditReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) return canonical_dump(to_json(r));

    std::ostringstream os;
    for (const auto& f : r.findings) {
        os << f.rule.str() << ' ' << to_string(f.severity) << ' ' << f.subject << " [" << f.guideline << "] "
           << f.message << "\n";
    }
    if (r.findings.empty()) os << "no findings\n";
    os << "summary";
    for (auto sev : {Severity::Critical, Severity::High, Severity::Medium, Severity::Low, Severity::Info}) {
        auto it = r.summary.find(sev);
        os << ' ' << to_string(sev) << '=' << (it == r.summary.end() ? 0 : it->second);
    }
    os << "\n";
    if (!r.threats.empty()) os << "\n" << render_threat_table(r.threats);
    return os.str();
}

}  // namespace dockguard
