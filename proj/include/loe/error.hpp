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

#include <stdexcept>
#include <string>
#include <string_view>

namespace loe {

/// Coarse classification used by the CLI to pick an exit code.
enum class ErrorKind {
    validation,  // bad input, violated precondition, resource guard
    runtime,     // I/O, numerical failure
};

/// Library-wide exception. `code()` is a short machine-readable token
/// ("degree_mismatch", "guard", ...), `what()` the human message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string code, const std::string &message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string &code() const noexcept { return code_; }

  private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail(std::string_view code, const std::string &message) {
    throw Error(ErrorKind::validation, std::string(code), message);
}

[[noreturn]] inline void fail_runtime(std::string_view code, const std::string &message) {
    throw Error(ErrorKind::runtime, std::string(code), message);
}

inline void require(bool condition, std::string_view code, const std::string &message) {
    if (!condition) {
        fail(code, message);
    }
}

}  // namespace loe
