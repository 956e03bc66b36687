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

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dockguard {

/// Ascending order, so `a > b` reads "a is more severe than b".
enum class Severity { Info, Low, Medium, High, Critical };

std::string_view to_string(Severity s);
/// Throws ValueError for anything but critical/high/medium/low/info.
Severity severity_from_string(std::string_view s);

/// Catalog rule identifier of the form `[A-Z]{2,4}-[0-9]{2}`, e.g. CAP-01.
class RuleId {
public:
    static RuleId parse(std::string_view text);
    static bool valid(std::string_view text);

    const std::string& str() const noexcept { return value_; }

    friend auto operator<=>(const RuleId&, const RuleId&) = default;
    friend bool operator==(const RuleId&, const RuleId&) = default;
    friend bool operator==(const RuleId& a, std::string_view b) { return a.value_ == b; }

private:
    explicit RuleId(std::string v) : value_(std::move(v)) {}
    std::string value_;
};

struct RuleSpec {
    RuleId id;
    Severity severity;
    std::string guideline;  // DG-nn, ATK-* or PM
    std::string scope;      // container | daemon | image
    std::string title;
    std::string trigger;
    std::optional<std::string> remediation;
    std::vector<std::string> placeholders;
};

/// Machine-readable rule table (data/rules.json). The engine decides *when* a
/// rule fires; the table supplies severity, guideline reference and
/// remediation text.
class RuleTable {
public:
    static RuleTable parse(std::string_view json_text);
    static const RuleTable& builtin();

    const RuleSpec* find(std::string_view id) const;
    /// Throws ValueError for ids not in the table.
    const RuleSpec& at(std::string_view id) const;
    const std::vector<RuleSpec>& rules() const noexcept { return rules_; }

private:
    std::vector<RuleSpec> rules_;  // sorted by id
};

/// Replaces `<name>` for every bound name; unbound placeholders stay as-is.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& bindings);

struct GuidelineEntry {
    std::string id;
    std::string title;
    std::vector<std::string> rules;
    std::optional<std::string> note;
};

struct UnverifiableNote {
    std::string topic;
    std::string source;
    std::string reason;
};

/// Guideline → rule coverage map (data/guidelines.json).
struct GuidelineMap {
    std::vector<GuidelineEntry> guidelines;
    std::vector<GuidelineEntry> attacks;
    std::vector<GuidelineEntry> mechanisms;  // labels for rules outside both lists, e.g. PM
    std::vector<UnverifiableNote> unverifiable;

    static GuidelineMap parse(std::string_view json_text);
    static const GuidelineMap& builtin();
};

}  // namespace dockguard
