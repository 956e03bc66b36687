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

#include "dockguard/cli.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dockguard/error.hpp"
#include "dockguard/netrules.hpp"
#include "dockguard/report.hpp"

namespace dockguard {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) throw Error("cannot write '" + output_path + "'");
}

struct Options {
    std::string input;
    std::string rules_path;
    std::string caps_path;
    std::string format = "text";
    std::string fail_on = "high";
    std::string output;
    std::string container;
    bool pm_matrix = false;
    std::string source;
    std::string bindings;
};

RuleTable load_rules(const Options& o) {
    if (o.rules_path.empty()) return RuleTable::builtin();
    RuleTable t = RuleTable::parse(read_file(o.rules_path));
    require_catalog(t);
    return t;
}

CapabilitySet load_caps(const Options& o) {
    if (o.caps_path.empty()) return default_capabilities();
    return parse_capability_list(read_file(o.caps_path));
}

int cmd_audit(const Options& o, std::ostream& out) {
    const Severity threshold = severity_from_string(o.fail_on);
    const RuleTable table = load_rules(o);
    AuditReport report = audit_document(read_file(o.input), table, load_caps(o));
    emit(render_report(report, o.format == "json" ? ReportFormat::Json : ReportFormat::Text), o.output, out);
    bool failing = std::any_of(report.findings.begin(), report.findings.end(),
                               [&](const Finding& f) { return f.severity >= threshold; });
    return failing ? kExitFindings : kExitOk;
}

int cmd_threats(const Options& o, std::ostream& out) {
    const RuleTable table = load_rules(o);
    AuditInput input = parse_audit_document(read_file(o.input), load_caps(o));
    std::vector<Finding> findings = run_audit(input, table);

    std::map<std::string, ThreatMatrix> threats;
    if (!o.container.empty()) {
        threats.emplace(o.container, evaluate_threats(input, findings, o.container));
    } else {
        for (const auto& c : input.containers) threats.emplace(c.name, evaluate_threats(findings, c));
    }

    std::string text;
    if (o.format == "json") {
        Json j = Json::object();
        j["threats"] = Json::object();
        for (const auto& [name, m] : threats) j["threats"][name] = to_json(m);
        if (o.pm_matrix) {
            j["policy_module_matrix"] = {
                {"source_base", {{"target_base", to_string(policy_module_matrix(false, false))},
                                 {"target_policy_module", to_string(policy_module_matrix(false, true))}}},
                {"source_policy_module", {{"target_base", to_string(policy_module_matrix(true, false))},
                                          {"target_policy_module", to_string(policy_module_matrix(true, true))}}}};
        }
        text = canonical_dump(j);
    } else {
        text = render_threat_table(threats);
        if (o.pm_matrix) text += (text.empty() ? "" : "\n") + render_policy_module_matrix();
    }
    emit(text, o.output, out);
    return kExitOk;
}

int cmd_rules_iptables(const Options& o, std::ostream& out) {
    emit(iptables_reject_rule(CidrRange::parse(o.source)) + "\n", o.output, out);
    return kExitOk;
}

int cmd_rules_ebtables(const Options& o, std::ostream& out) {
    auto bindings = parse_bindings(read_file(o.bindings));
    emit(ebtables_antispoof_rules(bindings), o.output, out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Static container-hardening auditor", "dockguard"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;

    auto* audit = app.add_subcommand("audit", "Audit a native audit document and report findings");
    audit->add_option("--input", o.input, "Audit document (JSON)")->required();
    audit->add_option("--rules", o.rules_path, "Alternative rule table (JSON)");
    audit->add_option("--capabilities", o.caps_path, "Alternative default-capability list");
    audit->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    audit->add_option("--fail-on", o.fail_on, "Lowest severity that makes the run fail")
        ->check(CLI::IsMember({"critical", "high", "medium", "low", "info"}));
    audit->add_option("--output", o.output, "Write the report here instead of stdout");

    auto* threats = app.add_subcommand("threats", "Print the per-container attack-class threat matrix");
    threats->add_option("--input", o.input, "Audit document (JSON)")->required();
    threats->add_option("--rules", o.rules_path, "Alternative rule table (JSON)");
    threats->add_option("--capabilities", o.caps_path, "Alternative default-capability list");
    threats->add_option("--container", o.container, "Only this container");
    threats->add_flag("--pm-matrix", o.pm_matrix, "Also print the source/target policy-module matrix");
    threats->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    threats->add_option("--output", o.output, "Write the output here instead of stdout");

    auto* rules = app.add_subcommand("rules", "Generate firewall rule text");
    rules->require_subcommand(1);
    auto* iptables = rules->add_subcommand("iptables", "docker0 source-range REJECT rule");
    iptables->add_option("--source", o.source, "Source range, a.b.c.d/p")->required();
    iptables->add_option("--output", o.output, "Write the rule here instead of stdout");
    auto* ebtables = rules->add_subcommand("ebtables", "ARP/MAC anti-spoofing rules");
    ebtables->add_option("--bindings", o.bindings, "Bindings file (JSON)")->required();
    ebtables->add_option("--output", o.output, "Write the rules here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) != nullptr ? e.what() : app.help()) << "\n";
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (audit->parsed()) return cmd_audit(o, out);
        if (threats->parsed()) return cmd_threats(o, out);
        if (iptables->parsed()) return cmd_rules_iptables(o, out);
        if (ebtables->parsed()) return cmd_rules_ebtables(o, out);
    } catch (const SchemaError& e) {
        err << "error: schema: " << e.what() << "\n";
        return kExitError;
    } catch (const UnknownSubject& e) {
        err << "error: UnknownSubject: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace dockguard
