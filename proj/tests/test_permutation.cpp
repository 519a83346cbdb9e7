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

#include <random>
#include <set>

#include "doctest.h"
#include "loe/error.hpp"
#include "loe/permutation.hpp"

using namespace loe;

namespace {

Permutation random_permutation(int n, std::mt19937_64 &rng) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation(w);
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

}  // namespace

TEST_CASE("compose applies the left argument first") {
    const Permutation a = parse_cycles("(1 2)(3)");
    const Permutation b = parse_cycles("(2 3)(1)");
    const Permutation ab = compose(a, b);
    CHECK(ab.word() == std::vector<int>{2, 0, 1});
    CHECK(format_cycles(ab) == "(1 3 2)");

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 8;
        const Permutation p = random_permutation(n, rng);
        const Permutation q = random_permutation(n, rng);
        const Permutation r = random_permutation(n, rng);
        CHECK(compose(Permutation::identity(n), p) == p);
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    }
}

TEST_CASE("compose rejects mismatched degrees") {
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), Error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
}

TEST_CASE("cycle notation round trip") {
    CHECK(format_cycles(parse_cycles("(14)(23)")) == "(1 4)(2 3)");
    CHECK(format_cycles(parse_cycles("(1,4)(2)", 5)) == "(1 4)(2)(3)(5)");
    CHECK(parse_cycles("(156)(2)(3)(487)").cycle_count() == 4);
    CHECK_THROWS_AS(parse_cycles("(1 2"), Error);
    CHECK_THROWS_AS(parse_cycles("(1 1)"), Error);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation p = random_permutation(1 + trial % 9, rng);
        CHECK(parse_cycles(format_cycles(p), p.degree()) == p);
    }
}

TEST_CASE("cycle types and class sizes") {
    CHECK(parse_cycles("(1 2)(3)").cycle_type().parts() == std::vector<int>{2, 1});
    CHECK(CycleType({1, 3, 1}).to_string() == "3+1+1");
    const std::vector<std::size_t> partition_counts{1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
        const auto classes = partitions(n);
        CHECK(classes.size() == partition_counts[static_cast<std::size_t>(n - 1)]);
        CHECK(classes.front().parts() == std::vector<int>{n});
        CHECK(classes.back().length() == n);
        std::uint64_t total = 0;
        for (const auto &c : classes) {
            CHECK(c.degree() == n);
            total += c.class_size();
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("cayley distance is a conjugation-invariant metric") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(cayley_distance(Permutation::identity(n), Permutation::full_cycle(n)) == n - 1);
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        const Permutation a = random_permutation(n, rng);
        const Permutation b = random_permutation(n, rng);
        const Permutation c = random_permutation(n, rng);
        const Permutation g = random_permutation(n, rng);
        CHECK(cayley_distance(a, a) == 0);
        CHECK(cayley_distance(a, b) == cayley_distance(b, a));
        CHECK((cayley_distance(a, b) == 0) == (a == b));
        CHECK(cayley_distance(a, c) <= cayley_distance(a, b) + cayley_distance(b, c));
        const Permutation gi = inverse(g);
        CHECK(cayley_distance(compose(compose(gi, a), g), compose(compose(gi, b), g)) == cayley_distance(a, b));
        CHECK(a.cycle_count() + cayley_distance(a, Permutation::identity(n)) == n);
    }
}

TEST_CASE("staggered pairings") {
    const auto [e2, g2] = staggered_pairings(2);
    CHECK(e2 == parse_cycles("(12)(34)"));
    CHECK(g2 == parse_cycles("(41)(23)"));
    const auto [e1, g1] = staggered_pairings(1);
    CHECK(e1 == g1);
    const auto [e4, g4] = staggered_pairings(4);
    CHECK(g4 == parse_cycles("(81)(23)(45)(67)"));
    CHECK(g4.cycle_count() == 4);
    for (int k = 1; k <= 6; ++k) {
        const auto [te, tg] = staggered_pairings(k);
        CHECK(te.cycle_count() == k);
        CHECK(tg.cycle_count() == k);
        CHECK(te.is_fixed_point_free_involution());
        CHECK(tg.is_fixed_point_free_involution());
        // 2 dist_B(e~, gamma~) = 2(k-1)
        CHECK(cayley_distance(te, tg) == 2 * (k - 1));
    }
}

TEST_CASE("second moment pairing") {
    CHECK(second_moment_pairing(2) == parse_cycles("(41)(23)(85)(67)"));
    for (int k = 1; k <= 3; ++k) {
        const Permutation t = second_moment_pairing(k);
        CHECK(t.degree() == 4 * k);
        CHECK(t.cycle_count() == 2 * k);
        CHECK(cayley_distance(Permutation::identity(4 * k), t) == 2 * k);
    }
}

TEST_CASE("brauer loops") {
    const auto [te, tg] = staggered_pairings(4);
    const BrauerPairing e = BrauerPairing::from_permutation(te);
    const BrauerPairing g = BrauerPairing::from_permutation(tg);
    const Permutation alpha = parse_cycles("(14)(23)(57)(68)");
    const BrauerPairing a = BrauerPairing::from_permutation(alpha);
    CHECK(brauer_loop_count(a, a) == 4);
    CHECK(brauer_distance(a, a) == 0);
    CHECK(brauer_loop_count(a, g) == 2);
    // The product of the two involutions is the one drawn in the loop picture.
    CHECK(compose(alpha, tg) == parse_cycles("(156)(2)(3)(487)"));
    CHECK(brauer_loop_count(e, g) == 1);
    CHECK(brauer_distance(e, g) == 3);
    CHECK(a.to_permutation() == alpha);
    CHECK_THROWS_AS(BrauerPairing::from_permutation(Permutation::full_cycle(4)), Error);
}

TEST_CASE("brauer distance is half the cayley distance on all pairings") {
    const std::vector<std::size_t> double_factorial{1, 3, 15, 105};
    for (int k = 1; k <= 4; ++k) {
        const auto all = all_pairings(2 * k);
        CHECK(all.size() == double_factorial[static_cast<std::size_t>(k - 1)]);
        CHECK(std::set<BrauerPairing>(all.begin(), all.end()).size() == all.size());
        for (const auto &a : all) {
            for (const auto &b : all) {
                CHECK(2 * brauer_distance(a, b) == cayley_distance(a.to_permutation(), b.to_permutation()));
            }
        }
    }
}

TEST_CASE("kernels agree with the Permutation class") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 12;
        const Permutation a = random_permutation(n, rng);
        const Permutation b = random_permutation(n, rng);
        const std::vector<std::uint8_t> wa(a.word().begin(), a.word().end());
        const std::vector<std::uint8_t> wb(b.word().begin(), b.word().end());
        const Permutation binv = inverse(b);
        const std::vector<std::uint8_t> wbinv(binv.word().begin(), binv.word().end());
        CHECK(kernels::cycle_count(kernels::Word(wa)) == a.cycle_count());
        CHECK(kernels::quotient_cycle_count(kernels::Word(wa), kernels::Word(wbinv)) == compose(a, binv).cycle_count());
        CHECK(kernels::cycle_type_key(kernels::Word(wa)) == kernels::cycle_type_key(a.cycle_type()));
        (void)wb;
    }
    int visited = 0;
    kernels::for_each_permutation(5, [&](kernels::Word) { ++visited; });
    CHECK(visited == 120);
}
