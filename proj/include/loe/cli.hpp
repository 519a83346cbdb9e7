// Copyright 2026 The loe-page Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loe::cli {

/// Exit codes of the `loe` binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`; errors go to `err` as single `code: message` lines.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Splits a comma-separated list, trimming blanks around each item.
std::vector<std::string> split_list(const std::string &text);

}  // namespace loe::cli
