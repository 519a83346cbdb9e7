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

#include <cmath>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "doctest.h"
#include "loe/error.hpp"
#include "loe/page.hpp"
#include "loe/purity_exact.hpp"

using namespace loe;

namespace {

double narayana(int k, int j) {
    return boost::math::binomial_coefficient<double>(k, j) * boost::math::binomial_coefficient<double>(k, j - 1) / k;
}

// sum_j N(k, j) d_A^{-2(j-1)} d_B^{-2(k-j)}
double narayana_purity(int k, double da, double db) {
    double sum = 0;
    for (int j = 1; j <= k; ++j) {
        sum += narayana(k, j) * std::pow(da, -2.0 * (j - 1)) * std::pow(db, -2.0 * (k - j));
    }
    return sum;
}

// Exact mean von Neumann entropy of a Haar state on m x n, m <= n.
double page_exact(double m, double n) {
    return boost::math::digamma(m * n + 1) - boost::math::digamma(n + 1) - (m - 1) / (2 * n);
}

}  // namespace

TEST_CASE("cycle-count profile is Narayana") {
    for (int k = 1; k <= 10; ++k) {
        const auto profile = nc_cycle_count_profile(k);
        REQUIRE(profile.size() == static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) {
            CHECK(static_cast<double>(profile[static_cast<std::size_t>(j - 1)]) == narayana(k, j));
        }
    }
}

TEST_CASE("page purity") {
    for (int k = 2; k <= 8; ++k) {
        for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {8, 8}, {16, 2}}) {
            const double v = page_purity(k, da, db);
            CHECK(v == doctest::Approx(narayana_purity(k, static_cast<double>(da), static_cast<double>(db))).epsilon(1e-13));
            CHECK(v == doctest::Approx(page_purity(k, db, da)).epsilon(1e-13));
        }
        CHECK(page_purity(k, 1, 64) == 1.0);
        CHECK(page_purity(k, 64, 1) == 1.0);
    }
    // Small subsystem: only pi = e survives, P ~ d_A^{-2(k-1)}.
    CHECK(page_purity(3, 4, 4096) * std::pow(4.0, 4) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(page_purity(13, 2, 2), Error);
}

TEST_CASE("half-chain correction") {
    CHECK(*half_chain_correction(1, 0.3) == 0);
    CHECK(*half_chain_correction(2, -1) == -1);
    CHECK(*half_chain_correction(3, 0.5) == 12);
    CHECK(*half_chain_correction(4, 0) == 29);
    CHECK_FALSE(half_chain_correction(5, 0).has_value());
    CHECK(half_chain_purity_corrected(2, 256, -1) == doctest::Approx(2.0 / 256 - 1.0 / 65536).epsilon(1e-15));
    CHECK_THROWS_AS(half_chain_purity_corrected(2, 200, 0), Error);
    CHECK_THROWS_AS(half_chain_purity_corrected(5, 256, 0), Error);

    // Slope of the cubic through f_1..f_4 at k = 1, by Lagrange weights.
    auto slope = [](double kappa4) {
        const double w[] = {-11.0 / 6, 3, -1.5, 1.0 / 3};
        double s = 0;
        for (int k = 1; k <= 4; ++k) {
            s += w[k - 1] * *half_chain_correction(k, kappa4);
        }
        return s;
    };
    const auto c = half_chain_correction_slope();
    CHECK(c.value == doctest::Approx(slope(0)));
    CHECK(c.value + c.slope_kappa4 == doctest::Approx(slope(1)));
}

TEST_CASE("corrected purity against the exact engine") {
    using Q = ExactScalar;
    const auto profile = pauli_moments<Q>(8);
    for (int k = 2; k <= 4; ++k) {
        for (std::int64_t s : {8, 16}) {
            const double dim = static_cast<double>(s * s);
            const double exact = average_purity_exact(PurityQuery{k, s, s, profile}).value.get_d();
            const double predicted = half_chain_purity_corrected(k, s * s, -1);
            const double leading = catalan(k) / std::pow(dim, k - 1);
            CHECK(std::abs(exact - predicted) * std::pow(dim, k + 1) < 400);
            CHECK(std::abs(exact - predicted) < std::abs(exact - leading));
        }
    }
}

TEST_CASE("renyi and von Neumann predictions") {
    CHECK(renyi_page_entropy(2, 4, 4) == doctest::Approx(-std::log(page_purity(2, 4, 4))));
    CHECK(renyi_page_entropy(3, 4, 16) == doctest::Approx(-0.5 * std::log(page_purity(3, 4, 16))));
    CHECK(renyi_page_entropy(2, 16, 16, -1.0) ==
          doctest::Approx(-std::log(half_chain_purity_corrected(2, 256, -1))));
    CHECK(renyi_page_entropy(2, 1, 16) == 0);
    CHECK(vn_page_entropy(16, 16) == doctest::Approx(std::log(256.0) - 0.5));
    CHECK(vn_page_entropy(4, 16) == doctest::Approx(std::log(16.0) - 16.0 / 512));
    CHECK(vn_page_entropy(16, 4) == vn_page_entropy(4, 16));
    CHECK(vn_page_entropy(1, 16) == 0);
    const auto c = half_chain_correction_slope();
    CHECK(vn_page_entropy(16, 16, 0.5) ==
          doctest::Approx(std::log(256.0) - 0.5 - (c.value + 0.5 * c.slope_kappa4) / 256));

    // Asymptotic form against the digamma expression.
    for (auto [m, n] : {std::pair<double, double>{16, 256}, {256, 256}, {64, 4096}}) {
        CHECK(std::abs(vn_page_entropy(static_cast<std::int64_t>(std::sqrt(m)),
                                       static_cast<std::int64_t>(std::sqrt(n))) -
                       page_exact(m, n)) < 1.0 / n);
    }
}

TEST_CASE("entropy ordering") {
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{4, 4}, {2, 16}, {8, 32}}) {
        double prev = vn_page_entropy(da, db);
        for (int k = 2; k <= 6; ++k) {
            const double s = renyi_page_entropy(k, da, db);
            CHECK(s <= prev + 1e-12);
            prev = s;
        }
    }
}

TEST_CASE("operator spreading correction") {
    CHECK(haar_ose_correction(2) == doctest::Approx(-std::log(3.0)));
    CHECK(haar_ose_correction(3) == doctest::Approx(-std::log(15.0) / 2));
    for (int k = 2; k <= 6; ++k) {
        const double loe = std::log(static_cast<double>(catalan(k))) / (1 - k);
        CHECK(std::abs(haar_ose_correction(k)) >= std::abs(loe));
    }
    CHECK_THROWS_AS(haar_ose_correction(1), Error);
}

TEST_CASE("general leading purity") {
    // Semicircular cumulants: only pairings contribute; large D matches Catalan.
    const CumulantProfile<double> free_pair({0, 1, 0, 0, 0, 0, 0, 0});
    for (int k = 2; k <= 4; ++k) {
        const double dim = 64.0 * 64.0;
        const double v = purity_leading_general(k, 64, 64, free_pair) * std::pow(dim, k - 1);
        CHECK(v == doctest::Approx(static_cast<double>(catalan(k))).epsilon(10.0 / dim));
    }
    // A traceless Pauli operator: close to the exact engine at moderate D.
    const CumulantProfile<double> pauli({0, 1, 0, -1, 0, 0, 0, 0});
    for (int k = 2; k <= 3; ++k) {
        const double exact =
            average_purity_exact(PurityQuery{k, 8, 8, pauli_moments<ExactScalar>(8)}).value.get_d();
        CHECK(purity_leading_general(k, 8, 8, pauli) == doctest::Approx(exact).epsilon(0.05));
    }
    CHECK_THROWS_AS(purity_leading_general(2, 4, 4, CumulantProfile<double>({0, 1})), Error);
}

TEST_CASE("predicted curve") {
    for (const auto order : {EntropyOrder::von_neumann(), EntropyOrder::renyi(2), EntropyOrder::renyi(3)}) {
        const auto curve = predicted_page_curve(order, 8);
        REQUIRE(curve.size() == 9);
        for (int n = 0; n <= 8; ++n) {
            CHECK(curve[static_cast<std::size_t>(n)].n_a == n);
            CHECK(curve[static_cast<std::size_t>(n)].entropy ==
                  doctest::Approx(curve[static_cast<std::size_t>(8 - n)].entropy));
        }
        CHECK(curve[0].entropy == 0);
        for (int n = 1; n <= 4; ++n) {
            CHECK(curve[static_cast<std::size_t>(n)].entropy > curve[static_cast<std::size_t>(n - 1)].entropy);
        }
    }
    CHECK(predicted_page_curve(EntropyOrder::von_neumann(), 8)[4].entropy ==
          doctest::Approx(std::log(256.0) - 0.5));
    CHECK_THROWS_AS(predicted_page_curve(EntropyOrder::hartley(), 4), Error);
}
