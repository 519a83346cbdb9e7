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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loe {

/// Integer partition of n, parts in non-increasing order. Used as the
/// conjugacy-class key of S_n.
class CycleType {
  public:
    CycleType() = default;
    explicit CycleType(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Number of permutations in the conjugacy class.
    std::uint64_t class_size() const;

    /// "3+1+1"
    std::string to_string() const;

    auto operator<=>(const CycleType &) const = default;

  private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<CycleType> partitions(int n);

/// Element of S_n in 0-indexed one-line form: word()[x] is the image of x.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// The full cycle (1 2 ... n), i.e. x -> x+1 mod n.
    static Permutation full_cycle(int n);
    /// Builds from 0-indexed disjoint cycles; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);

    int degree() const { return static_cast<int>(word_.size()); }
    int operator[](int x) const { return word_[static_cast<std::size_t>(x)]; }
    const std::vector<int> &word() const { return word_; }

    int cycle_count() const { return cycle_count_; }
    CycleType cycle_type() const;
    /// Cycles in canonical order: each starts at its smallest point, sorted
    /// by that point. Fixed points included.
    std::vector<std::vector<int>> cycles() const;

    Permutation inverse() const;
    bool is_identity() const { return cycle_count_ == degree(); }
    bool is_fixed_point_free_involution() const;

    auto operator<=>(const Permutation &other) const { return word_ <=> other.word_; }
    bool operator==(const Permutation &other) const { return word_ == other.word_; }

  private:
    std::vector<int> word_;
    int cycle_count_ = 0;
};

/// Product that applies `a` first and then `b`: result[x] = b[a[x]].
/// Left-to-right order: (1 2)(3) then (2 3) gives (1 3 2).
Permutation compose(const Permutation &a, const Permutation &b);
Permutation inverse(const Permutation &p);

/// n - #(a b^{-1}); the minimal number of transpositions taking a to b.
int cayley_distance(const Permutation &a, const Permutation &b);

/// The boundary pairings of the k-purity contraction in S_{2k}:
/// first = (1 2)(3 4)...(2k-1 2k), second = (2k 1)(2 3)...(2k-2 2k-1).
std::pair<Permutation, Permutation> staggered_pairings(int k);

/// Two disjoint copies of the shifted pairing acting on replicas 1..2k and
/// 2k+1..4k; an element of S_{4k}.
Permutation second_moment_pairing(int k);

/// Parses 1-indexed cycle notation. Points inside a cycle may be separated
/// by spaces or commas; a cycle written without separators ("(14)(23)") is
/// read digit by digit. Missing points are fixed. degree 0 infers it.
Permutation parse_cycles(std::string_view text, int degree = 0);

/// 1-indexed cycle notation with fixed points, e.g. "(1)(2 3)(4)".
std::string format_cycles(const Permutation &p);

/// Perfect matching on 2k points, stored as k pairs (first < second),
/// sorted by first element.
class BrauerPairing {
  public:
    BrauerPairing() = default;
    explicit BrauerPairing(std::vector<std::pair<int, int>> pairs);

    /// A fixed-point-free involution of S_{2k} viewed as a matching.
    static BrauerPairing from_permutation(const Permutation &p);
    Permutation to_permutation() const;

    int k() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>> &pairs() const { return pairs_; }

    auto operator<=>(const BrauerPairing &) const = default;

  private:
    std::vector<std::pair<int, int>> pairs_;
};

/// Number of closed loops formed by overlaying two matchings on the same
/// 2k points.
int brauer_loop_count(const BrauerPairing &a, const BrauerPairing &b);

/// k - loops(a, b). Equals half the Cayley distance of the underlying
/// involutions.
int brauer_distance(const BrauerPairing &a, const BrauerPairing &b);

/// All (2k-1)!! perfect matchings of 2k points.
std::vector<BrauerPairing> all_pairings(int two_k);

namespace kernels {

/// Raw one-line word used on the enumeration hot paths. Degree <= 16.
using Word = std::span<const std::uint8_t>;

int cycle_count(Word w);
/// Cycle count of "a then b^{-1}"-style quotients without allocating:
/// #(x -> binv[a[x]]).
int quotient_cycle_count(Word a, Word b_inverse);
/// Sorted cycle lengths packed into 4-bit nibbles (largest first).
std::uint64_t cycle_type_key(Word w);
std::uint64_t cycle_type_key(const CycleType &c);

/// Visits every element of S_n in lexicographic order.
template <class Visitor>
void for_each_permutation(int n, Visitor &&visit) {
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    do {
        visit(Word(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace kernels

}  // namespace loe
