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

#include <string>
#include <string_view>

namespace loe {

/// Order of an entanglement entropy: an integer Renyi index k >= 2, the von
/// Neumann limit, the Hartley (k = 0) entropy or the min-entropy.
struct EntropyOrder {
    enum class Kind { renyi, von_neumann, hartley, min };
    Kind kind = Kind::von_neumann;
    int k = 1;

    static EntropyOrder renyi(int k);
    static EntropyOrder von_neumann() { return {Kind::von_neumann, 1}; }
    static EntropyOrder hartley() { return {Kind::hartley, 0}; }
    static EntropyOrder min_entropy() { return {Kind::min, 0}; }

    /// Accepts "1" or "vn" (von Neumann), "0", "inf", or an integer >= 2.
    static EntropyOrder parse(std::string_view text);

    /// Renyi orders carry a purity; vn, 0 and inf do not.
    bool has_purity() const { return kind == Kind::renyi; }
    /// CSV label: "vn", "0", "inf" or the integer.
    std::string label() const;

    bool operator==(const EntropyOrder &) const = default;
};

}  // namespace loe
