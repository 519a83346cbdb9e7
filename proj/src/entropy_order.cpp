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

#include "loe/entropy_order.hpp"

#include <charconv>

#include "loe/error.hpp"

namespace loe {

EntropyOrder EntropyOrder::renyi(int k) {
    require(k >= 2, "invalid_order", "Renyi order must be an integer >= 2 (use vn, 0 or inf otherwise)");
    return {Kind::renyi, k};
}

EntropyOrder EntropyOrder::parse(std::string_view text) {
    if (text == "vn" || text == "1") {
        return von_neumann();
    }
    if (text == "inf") {
        return min_entropy();
    }
    if (text == "0") {
        return hartley();
    }
    int k = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    require(ec == std::errc() && end == text.data() + text.size(), "invalid_order",
            "cannot parse entropy order '" + std::string(text) + "'");
    return renyi(k);
}

std::string EntropyOrder::label() const {
    switch (kind) {
    case Kind::von_neumann:
        return "vn";
    case Kind::hartley:
        return "0";
    case Kind::min:
        return "inf";
    case Kind::renyi:
        break;
    }
    return std::to_string(k);
}

}  // namespace loe
