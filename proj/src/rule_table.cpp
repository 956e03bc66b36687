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

#include "dockguard/rule_table.hpp"

#include <algorithm>
#include <set>

#include "dockguard/embedded_data.hpp"
#include "dockguard/error.hpp"
#include "dockguard/json_io.hpp"

namespace dockguard {

std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::Critical: return "critical";
        case Severity::High: return "high";
        case Severity::Medium: return "medium";
        case Severity::Low: return "low";
        case Severity::Info: return "info";
    }
    return "info";
}

Severity severity_from_string(std::string_view s) {
    if (s == "critical") return Severity::Critical;
    if (s == "high") return Severity::High;
    if (s == "medium") return Severity::Medium;
    if (s == "low") return Severity::Low;
    if (s == "info") return Severity::Info;
    throw ValueError("unknown severity '" + std::string(s) + "'");
}

bool RuleId::valid(std::string_view text) {
    auto dash = text.find('-');
    if (dash < 2 || dash > 4 || text.size() != dash + 3) return false;
    for (std::size_t i = 0; i < dash; ++i) {
        if (text[i] < 'A' || text[i] > 'Z') return false;
    }
    return text[dash + 1] >= '0' && text[dash + 1] <= '9' && text[dash + 2] >= '0' && text[dash + 2] <= '9';
}

RuleId RuleId::parse(std::string_view text) {
    if (!valid(text)) throw ValueError("malformed rule id '" + std::string(text) + "'");
    return RuleId(std::string(text));
}

RuleTable RuleTable::parse(std::string_view json_text) {
    Json root = parse_json_document(json_text);
    ObjectReader top(root, "");
    const Json* rules = top.optional_array("rules");
    if (rules == nullptr) throw SchemaError("/rules", "required field missing");
    (void)top.optional_int("version");

    RuleTable table;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rules->size(); ++i) {
        ObjectReader r((*rules)[i], json_pointer_append("/rules", i));
        std::string id = r.required_string("id");
        if (!RuleId::valid(id)) throw ValueError(r.child("id") + ": malformed rule id '" + id + "'");
        if (!seen.insert(id).second) throw ValueError(r.child("id") + ": duplicate rule id '" + id + "'");
        Severity sev;
        try {
            sev = severity_from_string(r.required_string("severity"));
        } catch (const ValueError& e) {
            throw ValueError(r.child("severity") + ": " + e.what());
        }
        std::string guideline = r.required_string("guideline");
        if (guideline.empty()) throw ValueError(r.child("guideline") + ": must be non-empty");
        table.rules_.push_back(RuleSpec{
            .id = RuleId::parse(id),
            .severity = sev,
            .guideline = std::move(guideline),
            .scope = r.optional_string("scope").value_or(""),
            .title = r.optional_string("title").value_or(""),
            .trigger = r.optional_string("trigger").value_or(""),
            .remediation = r.optional_string("remediation"),
            .placeholders = r.string_array("placeholders"),
        });
    }
    std::sort(table.rules_.begin(), table.rules_.end(),
              [](const RuleSpec& a, const RuleSpec& b) { return a.id < b.id; });
    return table;
}

const RuleTable& RuleTable::builtin() {
    static const RuleTable table = parse(embedded::kRuleTable);
    return table;
}

const RuleSpec* RuleTable::find(std::string_view id) const {
    auto it = std::lower_bound(rules_.begin(), rules_.end(), id,
                               [](const RuleSpec& r, std::string_view v) { return r.id.str() < v; });
    return it != rules_.end() && it->id == id ? &*it : nullptr;
}

const RuleSpec& RuleTable::at(std::string_view id) const {
    if (const RuleSpec* r = find(id)) return *r;
    throw ValueError("rule table has no entry for '" + std::string(id) + "'");
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& bindings) {
    std::string out;
    out.reserve(tmpl.size());
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '<') {
            auto close = tmpl.find('>', i + 1);
            if (close != std::string_view::npos) {
                auto it = bindings.find(std::string(tmpl.substr(i + 1, close - i - 1)));
                if (it != bindings.end()) {
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(tmpl[i++]);
    }
    return out;
}

namespace {

std::vector<GuidelineEntry> read_entries(ObjectReader& top, std::string_view key) {
    std::vector<GuidelineEntry> out;
    const Json* arr = top.optional_array(key);
    if (arr == nullptr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        ObjectReader r((*arr)[i], json_pointer_append(top.child(key), i));
        out.push_back(GuidelineEntry{
            .id = r.required_string("id"),
            .title = r.optional_string("title").value_or(""),
            .rules = r.string_array("rules"),
            .note = r.optional_string("note"),
        });
    }
    return out;
}

}  // namespace

GuidelineMap GuidelineMap::parse(std::string_view json_text) {
    Json root = parse_json_document(json_text);
    ObjectReader top(root, "");
    GuidelineMap m;
    m.guidelines = read_entries(top, "guidelines");
    m.attacks = read_entries(top, "attacks");
    m.mechanisms = read_entries(top, "mechanisms");
    if (const Json* arr = top.optional_array("unverifiable")) {
        for (std::size_t i = 0; i < arr->size(); ++i) {
            ObjectReader r((*arr)[i], json_pointer_append("/unverifiable", i));
            m.unverifiable.push_back(UnverifiableNote{
                .topic = r.required_string("topic"),
                .source = r.optional_string("source").value_or(""),
                .reason = r.optional_string("reason").value_or(""),
            });
        }
    }
    return m;
}

const GuidelineMap& GuidelineMap::builtin() {
    static const GuidelineMap m = parse(embedded::kGuidelineMap);
    return m;
}

}  // namespace dockguard
