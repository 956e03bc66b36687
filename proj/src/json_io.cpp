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

#include "dockguard/json_io.hpp"

#include "dockguard/error.hpp"

namespace dockguard {

Json parse_json_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw SyntaxError(e.what());
    } catch (const Json::out_of_range& e) {
        // Numbers too large for a double, e.g. 1e999.
        throw SyntaxError(e.what());
    }
}

std::string canonical_dump(const Json& value) {
    // nlohmann::json keeps object keys in a std::map, so dump() is already sorted.
    std::string out = value.dump(-1, ' ', false, Json::error_handler_t::strict);
    out.push_back('\n');
    return out;
}

std::string json_pointer_append(const std::string& base, std::string_view token) {
    std::string out = base;
    out.push_back('/');
    for (char ch : token) {
        if (ch == '~') {
            out += "~0";
        } else if (ch == '/') {
            out += "~1";
        } else {
            out.push_back(ch);
        }
    }
    return out;
}

std::string json_pointer_append(const std::string& base, std::size_t index) {
    return base + "/" + std::to_string(index);
}

ObjectReader::ObjectReader(const Json& value, std::string path)
    : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) {
        throw SchemaError(path_.empty() ? "/" : path_, "expected an object");
    }
}

bool ObjectReader::has(std::string_view key) const {
    auto it = value_.find(key);
    return it != value_.end() && !it->is_null();
}

const Json* ObjectReader::find(std::string_view key) {
    consumed_.emplace(key);
    auto it = value_.find(key);
    if (it == value_.end() || it->is_null()) return nullptr;
    return &*it;
}

const Json& ObjectReader::required(std::string_view key) {
    const Json* v = find(key);
    if (v == nullptr) throw SchemaError(child(key), "required field missing");
    return *v;
}

std::string ObjectReader::required_string(std::string_view key) {
    return expect_string(required(key), child(key));
}

std::optional<std::string> ObjectReader::optional_string(std::string_view key) {
    const Json* v = find(key);
    if (v == nullptr) return std::nullopt;
    return expect_string(*v, child(key));
}

bool ObjectReader::required_bool(std::string_view key) {
    return expect_bool(required(key), child(key));
}

std::optional<bool> ObjectReader::optional_bool(std::string_view key) {
    const Json* v = find(key);
    if (v == nullptr) return std::nullopt;
    return expect_bool(*v, child(key));
}

std::optional<std::int64_t> ObjectReader::optional_int(std::string_view key) {
    const Json* v = find(key);
    if (v == nullptr) return std::nullopt;
    return expect_int(*v, child(key));
}

std::vector<std::string> ObjectReader::string_array(std::string_view key) {
    std::vector<std::string> out;
    const Json* v = optional_array(key);
    if (v == nullptr) return out;
    const std::string base = child(key);
    for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(expect_string((*v)[i], json_pointer_append(base, i)));
    }
    return out;
}

const Json* ObjectReader::optional_array(std::string_view key) {
    const Json* v = find(key);
    if (v != nullptr && !v->is_array()) throw SchemaError(child(key), "expected an array");
    return v;
}

const Json* ObjectReader::optional_object(std::string_view key) {
    const Json* v = find(key);
    if (v != nullptr && !v->is_object()) throw SchemaError(child(key), "expected an object");
    return v;
}

void ObjectReader::report_unknown(ParseDiagnostics* diag) const {
    if (diag == nullptr) return;
    for (const auto& [key, _] : value_.items()) {
        if (!consumed_.contains(key)) diag->ignored_paths.push_back(child(key));
    }
}

std::string expect_string(const Json& value, const std::string& path) {
    if (!value.is_string()) throw SchemaError(path, "expected a string");
    return value.get<std::string>();
}

bool expect_bool(const Json& value, const std::string& path) {
    if (!value.is_boolean()) throw SchemaError(path, "expected a boolean");
    return value.get<bool>();
}

std::int64_t expect_int(const Json& value, const std::string& path) {
    if (value.is_number_unsigned()) {
        auto u = value.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) throw ValueError(path + ": integer out of range");
        return static_cast<std::int64_t>(u);
    }
    if (!value.is_number_integer()) throw SchemaError(path, "expected an integer");
    return value.get<std::int64_t>();
}

}  // namespace dockguard
