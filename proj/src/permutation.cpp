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

#include "loe/permutation.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "loe/error.hpp"

namespace loe {

namespace {

constexpr int kMaxKernelDegree = 16;

int count_cycles(const std::vector<int> &word) {
    std::vector<char> seen(word.size(), 0);
    int cycles = 0;
    for (std::size_t start = 0; start < word.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++cycles;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(word[x])) {
            seen[x] = 1;
        }
    }
    return cycles;
}

void require_same_degree(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree()) {
        fail("degree_mismatch", "permutations of degree " + std::to_string(a.degree()) + " and " +
                                    std::to_string(b.degree()));
    }
}

}  // namespace

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        require(p > 0, "invalid_cycle_type", "cycle type parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::uint64_t CycleType::class_size() const {
    // n! / prod_j (j^{m_j} m_j!)
    std::uint64_t size = 1;
    for (int i = 2; i <= degree(); ++i) {
        size *= static_cast<std::uint64_t>(i);
    }
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) {
            ++j;
        }
        const auto mult = static_cast<std::uint64_t>(j - i);
        for (std::uint64_t m = 0; m < mult; ++m) {
            size /= static_cast<std::uint64_t>(parts_[i]);
        }
        for (std::uint64_t m = 2; m <= mult; ++m) {
            size /= m;
        }
        i = j;
    }
    return size;
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) {
            out += '+';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<CycleType> partitions(int n) {
    require(n >= 0, "invalid_degree", "partitions of a negative integer");
    std::vector<CycleType> out;
    std::vector<int> current;
    auto recurse = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = degree();
    std::vector<char> hit(word_.size(), 0);
    for (int x : word_) {
        if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) {
            fail("invalid_permutation", "word is not a bijection on {0.." + std::to_string(n - 1) + "}");
        }
        hit[static_cast<std::size_t>(x)] = 1;
    }
    cycle_count_ = count_cycles(word_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return Permutation(std::move(w));
}

Permutation Permutation::full_cycle(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto &cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int x = cycle[i];
            if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) {
                fail("invalid_permutation", "cycles are not disjoint points of {0.." + std::to_string(n - 1) + "}");
            }
            used[static_cast<std::size_t>(x)] = 1;
            w[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(w));
}

CycleType Permutation::cycle_type() const {
    std::vector<int> parts;
    for (const auto &c : cycles()) {
        parts.push_back(static_cast<int>(c.size()));
    }
    return CycleType(std::move(parts));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(word_.size(), 0);
    for (std::size_t start = 0; start < word_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> cycle;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(word_[x])) {
            seen[x] = 1;
            cycle.push_back(static_cast<int>(x));
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t x = 0; x < word_.size(); ++x) {
        w[static_cast<std::size_t>(word_[x])] = static_cast<int>(x);
    }
    return Permutation(std::move(w));
}

bool Permutation::is_fixed_point_free_involution() const {
    for (std::size_t x = 0; x < word_.size(); ++x) {
        const auto y = static_cast<std::size_t>(word_[x]);
        if (y == x || static_cast<std::size_t>(word_[y]) != x) {
            return false;
        }
    }
    return true;
}

Permutation compose(const Permutation &a, const Permutation &b) {
    require_same_degree(a, b);
    std::vector<int> w(static_cast<std::size_t>(a.degree()));
    for (int x = 0; x < a.degree(); ++x) {
        w[static_cast<std::size_t>(x)] = b[a[x]];
    }
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation &p) { return p.inverse(); }

int cayley_distance(const Permutation &a, const Permutation &b) {
    require_same_degree(a, b);
    return a.degree() - compose(a, b.inverse()).cycle_count();
}

std::pair<Permutation, Permutation> staggered_pairings(int k) {
    require(k >= 1, "invalid_order", "staggered pairings need k >= 1");
    const int n = 2 * k;
    std::vector<int> e(static_cast<std::size_t>(n));
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
        e[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
        e[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
        const int a = 2 * i + 1;
        const int b = (2 * i + 2) % n;
        g[static_cast<std::size_t>(a)] = b;
        g[static_cast<std::size_t>(b)] = a;
    }
    return {Permutation(std::move(e)), Permutation(std::move(g))};
}

Permutation second_moment_pairing(int k) {
    const Permutation single = staggered_pairings(k).second;
    const int n = 2 * k;
    std::vector<int> w(static_cast<std::size_t>(2 * n));
    for (int x = 0; x < n; ++x) {
        w[static_cast<std::size_t>(x)] = single[x];
        w[static_cast<std::size_t>(x + n)] = single[x] + n;
    }
    return Permutation(std::move(w));
}

// ---------------------------------------------------------------- notation

Permutation parse_cycles(std::string_view text, int degree) {
    std::vector<std::vector<int>> cycles;
    int max_point = 0;
    std::size_t i = 0;
    auto bad = [&](const std::string &why) {
        fail("parse_error", "cannot parse cycle notation '" + std::string(text) + "': " + why);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != '(') {
            bad("expected '('");
        }
        const std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) {
            bad("unbalanced parenthesis");
        }
        const std::string_view body = text.substr(i + 1, close - i - 1);
        const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
        std::vector<int> cycle;
        if (separated) {
            std::string token;
            auto flush = [&] {
                if (!token.empty()) {
                    cycle.push_back(std::stoi(token));
                    token.clear();
                }
            };
            for (char ch : body) {
                if (std::isdigit(static_cast<unsigned char>(ch))) {
                    token += ch;
                } else if (ch == ' ' || ch == ',' || ch == '\t') {
                    flush();
                } else {
                    bad("unexpected character");
                }
            }
            flush();
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    bad("unexpected character");
                }
                cycle.push_back(ch - '0');
            }
        }
        if (cycle.empty()) {
            bad("empty cycle");
        }
        for (int &x : cycle) {
            if (x < 1) {
                bad("points are 1-indexed");
            }
            max_point = std::max(max_point, x);
            --x;
        }
        cycles.push_back(std::move(cycle));
        i = close + 1;
    }
    if (degree == 0) {
        degree = max_point;
    }
    if (max_point > degree) {
        bad("point exceeds degree " + std::to_string(degree));
    }
    return Permutation::from_cycles(degree, cycles);
}

std::string format_cycles(const Permutation &p) {
    std::ostringstream out;
    for (const auto &cycle : p.cycles()) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i != 0) {
                out << ' ';
            }
            out << cycle[i] + 1;
        }
        out << ')';
    }
    return out.str();
}

// ---------------------------------------------------------------- Brauer

BrauerPairing::BrauerPairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    const int n = 2 * k();
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (auto &[a, b] : pairs_) {
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 0 || b >= n || a == b || hit[static_cast<std::size_t>(a)] || hit[static_cast<std::size_t>(b)]) {
            fail("invalid_pairing", "pairs do not form a perfect matching on " + std::to_string(n) + " points");
        }
        hit[static_cast<std::size_t>(a)] = hit[static_cast<std::size_t>(b)] = 1;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

BrauerPairing BrauerPairing::from_permutation(const Permutation &p) {
    require(p.is_fixed_point_free_involution(), "invalid_pairing",
            "permutation " + format_cycles(p) + " is not a fixed-point-free involution");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < p.degree(); ++x) {
        if (x < p[x]) {
            pairs.emplace_back(x, p[x]);
        }
    }
    return BrauerPairing(std::move(pairs));
}

Permutation BrauerPairing::to_permutation() const {
    std::vector<int> w(static_cast<std::size_t>(2 * k()));
    for (const auto &[a, b] : pairs_) {
        w[static_cast<std::size_t>(a)] = b;
        w[static_cast<std::size_t>(b)] = a;
    }
    return Permutation(std::move(w));
}

int brauer_loop_count(const BrauerPairing &a, const BrauerPairing &b) {
    require(a.k() == b.k(), "degree_mismatch", "pairings on different point sets");
    const int n = 2 * a.k();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = n;
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
            parent[static_cast<std::size_t>(x)] = y;
            --components;
        }
    };
    for (const auto &[x, y] : a.pairs()) {
        unite(x, y);
    }
    for (const auto &[x, y] : b.pairs()) {
        unite(x, y);
    }
    return components;
}

int brauer_distance(const BrauerPairing &a, const BrauerPairing &b) { return a.k() - brauer_loop_count(a, b); }

std::vector<BrauerPairing> all_pairings(int two_k) {
    require(two_k >= 0 && two_k % 2 == 0, "odd_degree", "pairings need an even number of points");
    std::vector<BrauerPairing> out;
    std::vector<std::pair<int, int>> current;
    std::vector<char> used(static_cast<std::size_t>(two_k), 0);
    auto recurse = [&](auto &&self) -> void {
        int first = 0;
        while (first < two_k && used[static_cast<std::size_t>(first)]) {
            ++first;
        }
        if (first == two_k) {
            out.emplace_back(current);
            return;
        }
        used[static_cast<std::size_t>(first)] = 1;
        for (int partner = first + 1; partner < two_k; ++partner) {
            if (used[static_cast<std::size_t>(partner)]) {
                continue;
            }
            used[static_cast<std::size_t>(partner)] = 1;
            current.emplace_back(first, partner);
            self(self);
            current.pop_back();
            used[static_cast<std::size_t>(partner)] = 0;
        }
        used[static_cast<std::size_t>(first)] = 0;
    };
    recurse(recurse);
    return out;
}

// ---------------------------------------------------------------- kernels

namespace kernels {

int cycle_count(Word w) {
    std::array<bool, kMaxKernelDegree> seen{};
    int cycles = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++cycles;
        for (std::size_t x = s; !seen[x]; x = w[x]) {
            seen[x] = true;
        }
    }
    return cycles;
}

int quotient_cycle_count(Word a, Word b_inverse) {
    std::array<std::uint8_t, kMaxKernelDegree> q{};
    for (std::size_t x = 0; x < a.size(); ++x) {
        q[x] = b_inverse[a[x]];
    }
    return cycle_count(Word(q.data(), a.size()));
}

std::uint64_t cycle_type_key(Word w) {
    std::array<bool, kMaxKernelDegree> seen{};
    std::array<int, kMaxKernelDegree> lengths{};
    std::size_t count = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = w[x]) {
            seen[x] = true;
            ++len;
        }
        lengths[count++] = len;
    }
    std::sort(lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(count), std::greater<>());
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < count; ++i) {
        key |= static_cast<std::uint64_t>(lengths[i]) << (4 * i);
    }
    return key;
}

std::uint64_t cycle_type_key(const CycleType &c) {
    require(c.degree() < kMaxKernelDegree, "unsupported_degree", "cycle-type keys need degree < 16");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < c.parts().size(); ++i) {
        key |= static_cast<std::uint64_t>(c.parts()[i]) << (4 * i);
    }
    return key;
}

}  // namespace kernels

}  // namespace loe
