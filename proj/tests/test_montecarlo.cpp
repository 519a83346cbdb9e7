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
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "doctest.h"
#include "loe/curve_io.hpp"
#include "loe/error.hpp"
#include "loe/haar.hpp"
#include "loe/montecarlo.hpp"
#include "loe/purity_exact.hpp"

using namespace loe;

namespace {

// tr[(M M^dag)^k] with M built digit by digit from the vectorization
// psi[(i, i')] = O[i][i'] / sqrt(D), sites of A leading in both copies.
double contraction_purity(const ComplexMatrix &evolved, int qubits, int n_a, int k) {
    const int da = 1 << n_a;
    const int db = 1 << (qubits - n_a);
    const int dim = da * db;
    const int rows = da * da;
    const int cols = db * db;
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < dim; ++i) {
        for (int ip = 0; ip < dim; ++ip) {
            const int ia = i / db, ib = i % db;
            const int ipa = ip / db, ipb = ip % db;
            m(ia * da + ipa, ib * db + ipb) = evolved(i, ip) / std::sqrt(static_cast<double>(dim));
        }
    }
    // Cyclic index sum over k copies of M and k copies of M^dag.
    Complex sum = 0;
    if (k == 2) {
        for (int a1 = 0; a1 < rows; ++a1)
            for (int b1 = 0; b1 < cols; ++b1)
                for (int a2 = 0; a2 < rows; ++a2)
                    for (int b2 = 0; b2 < cols; ++b2)
                        sum += m(a1, b1) * std::conj(m(a2, b1)) * m(a2, b2) * std::conj(m(a1, b2));
    } else {
        for (int a1 = 0; a1 < rows; ++a1)
            for (int b1 = 0; b1 < cols; ++b1)
                for (int a2 = 0; a2 < rows; ++a2)
                    for (int b2 = 0; b2 < cols; ++b2)
                        for (int a3 = 0; a3 < rows; ++a3)
                            for (int b3 = 0; b3 < cols; ++b3)
                                sum += m(a1, b1) * std::conj(m(a2, b1)) * m(a2, b2) * std::conj(m(a3, b2)) *
                                       m(a3, b3) * std::conj(m(a1, b3));
    }
    return sum.real();
}

ComplexMatrix evolve(const ComplexMatrix &op, const ComplexMatrix &u) { return u.adjoint() * op * u; }

}  // namespace

TEST_CASE("haar samples") {
    const ComplexMatrix u = haar_sample(8, 17);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(8, 8)).norm() < 1e-12);
    CHECK((haar_sample(8, 17) - u).norm() == 0);
    CHECK((haar_sample(8, 18) - u).norm() > 0.1);
    CHECK(derive_seed(5, kUnitaryStream, 0) != derive_seed(5, kOperatorStream, 0));
    CHECK(derive_seed(5, kUnitaryStream, 0) != derive_seed(5, kUnitaryStream, 1));
    const Eigen::VectorXcd v = haar_state(16, 3);
    CHECK(std::abs(v.norm() - 1) < 1e-12);
}

TEST_CASE("twirl averages") {
    // E|U_00|^2 = 1/D with variance 2/(D(D+1)) - 1/D^2; E[U^dag Z_1 U]_00 = 0
    // with variance 1/(D+1).
    const int dim = 4;
    const int n = 10000;
    const ComplexMatrix z = build_operator(OperatorSpec::parse("pauli:Z1", 2), 0);
    std::vector<double> p;
    std::vector<double> diag;
    for (int i = 0; i < n; ++i) {
        const ComplexMatrix u = haar_sample(dim, derive_seed(99, kUnitaryStream, static_cast<std::uint64_t>(i)));
        p.push_back(std::norm(u(0, 0)));
        diag.push_back(evolve(z, u)(0, 0).real());
    }
    CHECK(std::abs(pairwise_sum(p) / n - 0.25) < 5 * std::sqrt(0.0375 / n));
    CHECK(std::abs(pairwise_sum(diag) / n) < 5 * std::sqrt(0.2 / n));
}

TEST_CASE("spectrum of a product operator") {
    const ComplexMatrix z = build_operator(OperatorSpec::parse("pauli:Z1", 2), 0);
    const auto s = loe_spectrum(z, Cut{2, 2, 1});
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pairwise_sum(s) == doctest::Approx(1.0).epsilon(1e-12));
    const ComplexMatrix zz = build_operator(OperatorSpec::parse("pauli:Z1Z2", 2), 0);
    CHECK(loe_spectrum(zz, Cut{2, 2, 1})[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(loe_spectrum(z, Cut{3, 2, 1}), Error);
    CHECK_THROWS_AS(loe_spectrum(z, Cut{2, 2, 1}, 8), Error);
}

TEST_CASE("spectrum matches the explicit contraction") {
    const ComplexMatrix op = build_operator(OperatorSpec::parse("pauli:X1", 2), 0);
    for (int draw = 0; draw < 5; ++draw) {
        const ComplexMatrix evolved = evolve(op, haar_sample(4, 1000 + static_cast<std::uint64_t>(draw)));
        const auto s = loe_spectrum(evolved, Cut{2, 2, 1});
        for (int k : {2, 3}) {
            CHECK(std::abs(purity_from_spectrum(s, k) - contraction_purity(evolved, 2, 1, k)) < 1e-12);
        }
    }
}

TEST_CASE("entropies from a spectrum") {
    const std::vector<EntropyOrder> orders{EntropyOrder::von_neumann(), EntropyOrder::renyi(2), EntropyOrder::hartley(),
                                           EntropyOrder::min_entropy()};
    const auto flat = entropies_from_spectrum({0.5, 0.5, 0.0}, orders);
    for (double e : flat) {
        CHECK(e == doctest::Approx(std::log(2.0)));
    }
    const auto e = entropies_from_spectrum({0.75, 0.25}, orders);
    CHECK(e[0] == doctest::Approx(-0.75 * std::log(0.75) - 0.25 * std::log(0.25)));
    CHECK(e[1] == doctest::Approx(-std::log(0.625)));
    CHECK(e[2] == doctest::Approx(std::log(2.0)));
    CHECK(e[3] == doctest::Approx(-std::log(0.75)));
    CHECK(entropies_from_spectrum({1.0, 1e-16}, orders)[2] == 0);
    CHECK_THROWS_AS(entropies_from_spectrum({0.5, 0.4}, orders), Error);
    CHECK_THROWS_AS(entropies_from_spectrum({1.1, -0.1}, orders), Error);
}

TEST_CASE("spectral invariants") {
    const ComplexMatrix op = build_operator(OperatorSpec::parse("pauli:Z2", 4), 0);
    const ComplexMatrix evolved = evolve(op, haar_sample(16, 5));
    const std::vector<EntropyOrder> orders{EntropyOrder::min_entropy(), EntropyOrder::renyi(3), EntropyOrder::renyi(2),
                                           EntropyOrder::von_neumann(), EntropyOrder::hartley()};
    for (int n_a = 0; n_a <= 4; ++n_a) {
        const auto s = loe_spectrum(evolved, Cut{4, 2, n_a});
        CHECK(s.size() == static_cast<std::size_t>(1 << (2 * std::min(n_a, 4 - n_a))));
        CHECK(pairwise_sum(s) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t i = 1; i < s.size(); ++i) {
            CHECK(s[i - 1] >= s[i]);
        }
        const auto e = entropies_from_spectrum(s, orders);
        for (std::size_t i = 1; i < e.size(); ++i) {
            CHECK(e[i - 1] <= e[i] + 1e-12);
        }
        CHECK(e.back() <= 2 * std::min(n_a, 4 - n_a) * std::log(2.0) + 1e-12);
    }
}

TEST_CASE("scan is independent of the thread count") {
    ScanOptions opt;
    opt.samples = 12;
    opt.orders = {EntropyOrder::von_neumann(), EntropyOrder::renyi(2)};
    opt.seed = 7;
    const auto spec = OperatorSpec::parse("gue", 3);
    std::ostringstream one;
    write_curve_csv(page_curve_scan(spec, opt), one);
    opt.threads = 3;
    std::ostringstream three;
    write_curve_csv(page_curve_scan(spec, opt), three);
    CHECK(one.str() == three.str());
    opt.seed = 8;
    std::ostringstream other;
    write_curve_csv(page_curve_scan(spec, opt), other);
    CHECK(one.str() != other.str());
}

TEST_CASE("scan rows") {
    ScanOptions opt;
    opt.samples = 20;
    opt.orders = {EntropyOrder::renyi(2), EntropyOrder::von_neumann()};
    opt.seed = 1;
    const auto curve = page_curve_scan(OperatorSpec::parse("pauli:Z1", 3), opt);
    CHECK(curve.rows.size() == 8);
    const auto &r = curve.at(1, EntropyOrder::renyi(2));
    CHECK(r.samples == 20);
    CHECK(r.annealed_entropy == doctest::Approx(-std::log(r.mean_purity)));
    CHECK(std::isnan(curve.at(1, EntropyOrder::von_neumann()).annealed_entropy));
    CHECK(curve.at(0, EntropyOrder::renyi(2)).mean_entropy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(curve.at(5, EntropyOrder::renyi(2)), Error);
    opt.max_qubits = 2;
    CHECK_THROWS_AS(page_curve_scan(OperatorSpec::parse("pauli:Z1", 3), opt), Error);
    opt.max_qubits = 10;
    opt.amplitude_cap = 16;
    CHECK_THROWS_AS(page_curve_scan(OperatorSpec::parse("pauli:Z1", 3), opt), Error);
}

TEST_CASE("sampled purity agrees with the exact average") {
    // (N, n_a, k): D = 4 for k = 2 and D = 8 for k = 3.
    for (auto [n, n_a, k] : {std::tuple<int, int, int>{2, 1, 2}, {3, 1, 3}}) {
        ScanOptions opt;
        opt.samples = 4000;
        opt.orders = {EntropyOrder::renyi(k)};
        opt.seed = 11;
        opt.cuts = {n_a};
        const auto curve = page_curve_scan(OperatorSpec::parse("pauli:Z1", n), opt);
        const auto &row = curve.at(n_a, EntropyOrder::renyi(k));
        const std::int64_t da = std::int64_t{1} << n_a;
        const std::int64_t db = std::int64_t{1} << (n - n_a);
        const double exact = average_purity_exact(PurityQuery{k, da, db, pauli_moments<ExactScalar>(6)}).value.get_d();
        const double se = std::sqrt(row.purity_variance / static_cast<double>(row.samples));
        CHECK(std::abs(row.mean_purity - exact) < 4 * se);
    }
}

TEST_CASE("state scan") {
    ScanOptions opt;
    opt.samples = 2000;
    opt.orders = {EntropyOrder::renyi(2)};
    opt.seed = 3;
    const auto curve = state_page_scan(2, 2, opt);
    const auto &row = curve.at(1, EntropyOrder::renyi(2));
    const double exact = average_state_purity_exact(2, 2, 2).value.get_d();
    CHECK(exact == doctest::Approx(8.0 / 17));
    CHECK(std::abs(row.mean_purity - exact) < 4 * std::sqrt(row.purity_variance / 2000));
}

TEST_CASE("fluctuation scan") {
    ScanOptions opt;
    opt.samples = 40;
    opt.seed = 4;
    const auto r = fluctuation_scan("pauli:Z1", 2, {2, 4}, opt);
    REQUIRE(r.points.size() == 2);
    for (const auto &p : r.points) {
        CHECK(p.purity_variance >= 0);
        CHECK(p.relative_variance == doctest::Approx(p.purity_variance / (p.mean_purity * p.mean_purity)));
    }
    CHECK(r.points[1].relative_variance < r.points[0].relative_variance);
    CHECK(r.slope < 0);
    CHECK_THROWS_AS(fluctuation_scan("pauli:Z1", 1, {2, 4}, opt), Error);
    CHECK_THROWS_AS(fluctuation_scan("pauli:Z1", 2, {2}, opt), Error);
}

TEST_CASE("operators") {
    const auto t = operator_moments(build_operator(OperatorSpec::parse("trace:0.5", 2), 0), 4);
    CHECK(t.at(1) == doctest::Approx(0.5));
    CHECK(t.at(2) == doctest::Approx(1.0));
    const auto g = operator_moments(build_operator(OperatorSpec::parse("gue", 3), 9), 2);
    CHECK(std::abs(g.at(1)) < 1e-12);
    CHECK(g.at(2) == doctest::Approx(1.0));
    const auto r = build_operator(OperatorSpec::parse("random_traceless", 3), 9);
    CHECK((r - r.adjoint()).norm() < 1e-12);
    CHECK_THROWS_AS(OperatorSpec::parse("pauli:Q1", 2), Error);
    CHECK_THROWS_AS(OperatorSpec::parse("pauli:Z3", 2), Error);
    CHECK_THROWS_AS(OperatorSpec::parse("pauli:Z1Z1", 2), Error);
    CHECK_THROWS_AS(OperatorSpec::parse("trace:2", 2), Error);
    CHECK_THROWS_AS(OperatorSpec::parse("banana", 2), Error);
    CHECK_THROWS_AS(OperatorSpec::parse("gue", 15), Error);

    const std::string path = "loe_test_operator.txt";
    {
        std::ofstream f(path);
        f << "2\n1,0 0,-1\n0,1 -1,0\n";
    }
    const ComplexMatrix y = read_operator_file(path);
    CHECK(y(0, 1) == Complex(0, -1));
    const ComplexMatrix via_spec = build_operator(OperatorSpec::parse("file:" + path, 1), 0);
    CHECK(std::abs(via_spec.trace()) < 1e-12);
    {
        std::ofstream f(path);
        f << "2\n1,0 1,0\n0,0 1,0\n";
    }
    CHECK_THROWS_AS(read_operator_file(path), Error);
    {
        std::ofstream f(path);
        f << "2\n1,0 0,0\n0,0\n";
    }
    CHECK_THROWS_AS(read_operator_file(path), Error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_operator_file("does/not/exist"), Error);
}

TEST_CASE("helpers") {
    CHECK(least_squares_slope({0, 1, 2}, {1, 3, 5}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(least_squares_slope({1, 1}, {0, 1}), Error);
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0));
    std::vector<int> hits(50, 0);
    parallel_for(50, 4, [&](std::int64_t i) { hits[static_cast<std::size_t>(i)] += 1; });
    CHECK(std::count(hits.begin(), hits.end(), 1) == 50);
}
