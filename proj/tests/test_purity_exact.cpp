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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "loe/error.hpp"
#include "loe/purity_exact.hpp"

using namespace loe;

namespace {

using Q = ExactScalar;

Q ipow(std::int64_t base, int e) {
    Q out = 1;
    for (int i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

// Direct double sum over S_{2k} x S_{2k}.
Q naive_purity(int k, std::int64_t da, std::int64_t db, const MomentProfile<Q> &profile) {
    const int n = 2 * k;
    const std::int64_t dim = da * db;
    const auto wg = weingarten_exact(n, dim, WeingartenBackend::gram);
    const auto [tau_e, tau_g] = staggered_pairings(k);
    std::vector<Permutation> group;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = i;
    }
    do {
        group.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::vector<Q> boundary;
    std::vector<Q> weight;
    for (const auto &g : group) {
        const Permutation gi = inverse(g);
        boundary.push_back(ipow(da, compose(gi, tau_g).cycle_count()) * ipow(db, compose(gi, tau_e).cycle_count()));
        weight.push_back(moment_of_permutation(profile, g) * ipow(dim, g.cycle_count()));
    }
    Q sum = 0;
    for (std::size_t p = 0; p < group.size(); ++p) {
        if (weight[p] == 0) {
            continue;
        }
        for (std::size_t s = 0; s < group.size(); ++s) {
            sum += wg->value(group[p], group[s]) * weight[p] * boundary[s];
        }
    }
    return sum / ipow(dim, k);
}

MomentProfile<Q> random_symmetric_profile(int order, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> num(0, 40);
    std::vector<Q> m;
    for (int l = 1; l <= order; ++l) {
        if (l % 2 == 1) {
            m.emplace_back(0);
        } else if (l == 2) {
            m.emplace_back(1);
        } else {
            m.emplace_back(num(rng) + 1, 3);
        }
    }
    return MomentProfile<Q>(m);
}

MomentProfile<Q> pauli() { return pauli_moments<Q>(8); }

}  // namespace

TEST_CASE("engine matches the direct double sum") {
    std::mt19937_64 rng(21);
    const MomentProfile<Q> skew({Q(1, 2), Q(1), Q(-1, 3), Q(5, 2), Q(2), Q(7)});
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {3, 5}}) {
        for (const auto &profile : {pauli(), skew}) {
            const Q v = average_purity_exact(PurityQuery{2, da, db, profile, true}).value;
            CHECK(v == naive_purity(2, da, db, profile));
        }
    }
    const auto profile = random_symmetric_profile(6, rng);
    CHECK(average_purity_exact(PurityQuery{3, 2, 3, profile, true}).value == naive_purity(3, 2, 3, profile));
    CHECK(average_purity_exact(PurityQuery{3, 3, 3, skew, true}).value == naive_purity(3, 3, 3, skew));
}

TEST_CASE("basic properties") {
    CHECK(average_purity_exact(PurityQuery{1, 3, 4, pauli()}).value == 1);
    for (int k = 2; k <= 4; ++k) {
        for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {3, 3}, {4, 7}}) {
            const Q v = average_purity_exact(PurityQuery{k, da, db, pauli()}).value;
            CHECK(v > 0);
            CHECK(v <= 1);
            CHECK(v == average_purity_exact(PurityQuery{k, db, da, pauli()}).value);
        }
    }
    CHECK(average_purity_exact(PurityQuery{2, 4, 4, MomentProfile<Q>({Q(0), Q(1), Q(0), Q(1)})}).value ==
          Q(509, 4199));
}

TEST_CASE("breakdown and backends") {
    const PurityQuery q{3, 3, 4, pauli()};
    const auto r = average_purity_exact(q, true);
    Q total = 0;
    for (const auto &[type, part] : r.breakdown) {
        total += part;
    }
    CHECK(total == r.value);
    CHECK(!r.breakdown.empty());
    CHECK(average_purity_exact(q, false, WeingartenBackend::gram).value == r.value);
}

TEST_CASE("trace part only shifts the normalization") {
    // O = w 1 + sqrt(1 - w^2) P: moments of a two-point spectrum.
    // At w = 1 (O = identity) the state |1>/sqrt(D) is a product and every
    // purity is 1.
    const MomentProfile<Q> identity({Q(1), Q(1), Q(1), Q(1), Q(1), Q(1)});
    for (int k = 2; k <= 3; ++k) {
        CHECK(average_purity_exact(PurityQuery{k, 3, 4, identity}).value == 1);
    }
}

TEST_CASE("half-cut series") {
    const auto s2 = operator_purity_series(2, pauli(), 4);
    CHECK(s2[1] == 2);
    CHECK(s2[2] == -1);  // 1 + 2 kappa4 with kappa4 = -1
    const auto s3 = operator_purity_series(3, pauli(), 4);
    CHECK(s3[2] == 5);
    CHECK(s3[3] == -6);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2; ++trial) {
        const auto profile = random_symmetric_profile(8, rng);
        const Q kappa4 = profile.at(4) - 2;
        const auto s = operator_purity_series(2, profile, 3);
        CHECK(s[1] == 2);
        CHECK(s[2] == 1 + 2 * kappa4);
        const auto t = operator_purity_series(3, profile, 4);
        CHECK(t[2] == 5);
        CHECK(t[3] == 6 + 12 * kappa4);
    }
}

TEST_CASE("leading order approaches the Catalan number") {
    for (int k = 2; k <= 3; ++k) {
        double prev = 1e9;
        for (std::int64_t s : {4, 8, 16}) {
            const Q v = average_purity_exact(PurityQuery{k, s, s, pauli()}).value;
            const double scaled = v.get_d() * std::pow(static_cast<double>(s * s), k - 1);
            const double err = std::abs(scaled - static_cast<double>(catalan(k)));
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("state purity") {
    // plain k = 2: (d_A + d_B) / (d_A d_B + 1)
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {4, 4}, {1, 7}}) {
        CHECK(average_state_purity_exact(2, da, db, StateSpace::plain).value == Q(da + db) / Q(da * db + 1));
        CHECK(average_state_purity_exact(3, da, db).value ==
              average_state_purity_exact(3, da * da, db * db, StateSpace::plain).value);
    }
    CHECK(average_state_purity_exact(1, 3, 5).value == 1);
    CHECK(state_purity_series(2, 4) == std::vector<Q>{0, 2, 0, -2});
    CHECK(state_purity_series(3, 5) == std::vector<Q>{0, 0, 5, 0, -14});
    const auto s4 = state_purity_series(4, 8);
    CHECK(s4[3] == 14);
    CHECK(s4[5] == -74);
    CHECK(s4[7] == 290);
    CHECK_THROWS_AS(average_state_purity_exact(9, 2, 2), Error);
}

TEST_CASE("second moment") {
    for (std::int64_t s : {3, 4}) {
        const PurityQuery q{2, s, s, pauli()};
        const Q first = average_purity_exact(q).value;
        const Q second = average_purity_second_moment_exact(q).value;
        CHECK(second >= first * first);
        CHECK(second <= 1);
    }
    const auto s = second_moment_series(pauli(), 6);
    CHECK(s[2] == 4);
    CHECK(s[3] == -4);
    CHECK(s[4] == 5);
    CHECK(s[5] == 28);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(average_purity_exact(PurityQuery{5, 4, 4, pauli_moments<Q>(10)}), Error);
    CHECK_THROWS_AS(average_purity_exact(PurityQuery{3, 2, 2, pauli()}), Error);
    CHECK_THROWS_AS(average_purity_exact(PurityQuery{3, 3, 3, pauli_moments<Q>(4)}), Error);
    CHECK_THROWS_AS(average_purity_exact(PurityQuery{2, 3, 3, MomentProfile<Q>({Q(0), Q(2), Q(0), Q(4)})}), Error);
    CHECK_NOTHROW(average_purity_exact(PurityQuery{2, 3, 3, MomentProfile<Q>({Q(0), Q(2), Q(0), Q(4)}), true}));
    CHECK_THROWS_AS(average_purity_second_moment_exact(PurityQuery{3, 4, 4, pauli()}), Error);
    CHECK_THROWS_AS(average_purity_second_moment_exact(PurityQuery{2, 2, 3, pauli()}), Error);
    try {
        average_purity_exact(PurityQuery{2, 1, 3, pauli()});
        FAIL("expected dimension guard");
    } catch (const Error &e) {
        CHECK(e.code() == "dimension_too_small");
    }
}
