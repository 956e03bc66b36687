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

// Schema-checked reading of JSON documents. Every accessor reports failures
// as SchemaError carrying a JSON pointer, so the CLI can name the exact field.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace dockguard {

using Json = nlohmann::json;

/// Parses UTF-8 text. Throws SyntaxError on malformed input.
Json parse_json_document(std::string_view text);

/// Sorted keys, compact, UTF-8, single trailing LF.
std::string canonical_dump(const Json& value);

/// Unknown-field bookkeeping filled in by the parsers.
struct ParseDiagnostics {
    std::vector<std::string> ignored_paths;
    std::size_t ignored_fields() const noexcept { return ignored_paths.size(); }
};

std::string json_pointer_append(const std::string& base, std::string_view token);
std::string json_pointer_append(const std::string& base, std::size_t index);

class ObjectReader {
public:
    ObjectReader(const Json& value, std::string path);

    const std::string& path() const noexcept { return path_; }
    std::string child(std::string_view key) const { return json_pointer_append(path_, key); }

    bool has(std::string_view key) const;
    /// nullptr when absent or null. Marks the key as consumed either way.
    const Json* find(std::string_view key);
    const Json& required(std::string_view key);

    std::string required_string(std::string_view key);
    std::optional<std::string> optional_string(std::string_view key);
    bool required_bool(std::string_view key);
    std::optional<bool> optional_bool(std::string_view key);
    std::optional<std::int64_t> optional_int(std::string_view key);
    std::vector<std::string> string_array(std::string_view key);
    const Json* optional_array(std::string_view key);
    const Json* optional_object(std::string_view key);

    /// Records every key that no accessor touched.
    void report_unknown(ParseDiagnostics* diag) const;

private:
    const Json& value_;
    std::string path_;
    std::set<std::string, std::less<>> consumed_;
};

std::string expect_string(const Json& value, const std::string& path);
bool expect_bool(const Json& value, const std::string& path);
std::int64_t expect_int(const Json& value, const std::string& path);

}  // namespace dockguard
