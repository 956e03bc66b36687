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

#include <stdexcept>
#include <string>

namespace dockguard {

/// Base of every error the library reports. Callers that only need to know
/// "the input was rejected" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed document (not valid JSON, or not valid UTF-8).
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// Required field missing or of the wrong type. `path()` is a JSON pointer
/// to the offending location, e.g. `/containers/0/name`.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Well-typed but semantically invalid value (negative limit, bad version,
/// unknown capability, host bits set in a CIDR, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

class MergeConflict : public Error {
public:
    using Error::Error;
};

class AdmissibilityError : public Error {
public:
    using Error::Error;
};

class AmbiguityError : public Error {
public:
    using Error::Error;
};

class UnknownSubject : public Error {
public:
    using Error::Error;
};

}  // namespace dockguard
