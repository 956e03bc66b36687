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

#include <ostream>

namespace dockguard {

/// Exit codes: 0 success / nothing at or above --fail-on, 1 findings at or
/// above --fail-on, 2 usage, I/O or input errors.
enum ExitCode : int { kExitOk = 0, kExitFindings = 1, kExitError = 2 };

/// Entry point behind the `dockguard` binary; streams are injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dockguard
