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

#include "loe/purity_exact.hpp"

#include <cmath>
#include <string>

#include "loe/detail/replica.hpp"
#include "loe/error.hpp"
#include "loe/series.hpp"

namespace loe {

namespace {

ExactScalar power(std::int64_t base, int exponent) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return ExactScalar(z);
}

ExactScalar from_u64(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return ExactScalar(z);
}

// D^{-n/2} sum_nu h(nu) B(nu) for boundary pairings t_a, t_b in S_n.
ExactPurityResult contract(const PurityQuery &query, const Permutation &t_a, const Permutation &t_b,
                           bool with_breakdown, WeingartenBackend backend) {
    const int n = t_a.degree();
    const std::int64_t dim = query.dim_a * query.dim_b;
    const auto wg = weingarten_exact(n, dim, backend);
    const auto conv = detail::class_convolution(n);
    const auto hist = detail::boundary_histogram(t_a, t_b);
    const auto &classes = conv->classes;

    std::vector<ExactScalar> weighted_moments;  // <O>_lambda D^{#lambda}
    for (const auto &lambda : classes) {
        weighted_moments.push_back(moment_of_cycle_type(query.profile, lambda) * power(dim, lambda.length()));
    }

    ExactPurityResult result;
    result.value = 0;
    const ExactScalar prefactor = ExactScalar(1) / power(dim, n / 2);
    for (std::size_t nu = 0; nu < classes.size(); ++nu) {
        ExactScalar boundary = 0;
        for (const auto &term : hist->terms[nu]) {
            boundary += from_u64(term.count) * power(query.dim_a, term.a) * power(query.dim_b, term.b);
        }
        if (boundary == 0) {
            continue;
        }
        ExactScalar h = 0;
        for (std::size_t lambda = 0; lambda < classes.size(); ++lambda) {
            ExactScalar inner = 0;
            for (std::size_t mu = 0; mu < classes.size(); ++mu) {
                if (const auto c = conv->conv[nu][lambda][mu]; c != 0) {
                    inner += wg->values()[mu] * c;
                }
            }
            h += weighted_moments[lambda] * inner;
        }
        const ExactScalar part = prefactor * h * boundary;
        result.value += part;
        if (with_breakdown) {
            result.breakdown.emplace(classes[nu], part);
        }
    }
    return result;
}

void validate(const PurityQuery &q, int degree) {
    require(q.dim_a >= 1 && q.dim_b >= 1, "invalid_dimension", "subsystem dimensions must be positive");
    const std::int64_t dim = q.dim_a * q.dim_b;
    require(dim >= degree, "dimension_too_small",
            "D = " + std::to_string(dim) + " is below the Weingarten regime D >= " + std::to_string(degree));
    require(q.profile.max_order() >= degree, "profile_too_short",
            "moment profile must cover orders up to " + std::to_string(degree));
    require(q.raw || q.profile.normalized(), "not_normalized", "profile has <O^2> != 1 (pass raw to override)");
}

std::vector<std::int64_t> square_dims(int count, std::int64_t first_root) {
    std::vector<std::int64_t> dims;
    for (std::int64_t s = first_root; static_cast<int>(dims.size()) < count; ++s) {
        dims.push_back(s * s);
    }
    return dims;
}

std::int64_t exact_root(std::int64_t d) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    require(s * s == d, "invalid_dimension", "half-cut series needs square D");
    return s;
}

std::vector<ExactScalar> replica_series(int n, const std::function<ExactScalar(std::int64_t)> &f, int terms) {
    const auto factors = weingarten_denominator_factors(n);
    ExactPolynomial den = polynomial_from_linear_factors(factors);
    const int deg_w = static_cast<int>(den.size()) - 1;
    den.insert(den.begin(), static_cast<std::size_t>(n / 2), ExactScalar(0));
    const int numerator_degree = deg_w + n;
    return recover_inverse_power_series(f, square_dims(numerator_degree + 3, 4), den, numerator_degree, terms);
}

}  // namespace

ExactPurityResult average_purity_exact(const PurityQuery &query, bool with_breakdown, WeingartenBackend backend) {
    require(query.k >= 1 && query.k <= kMaxExactOrder, "unsupported_order",
            "exact purity supports 1 <= k <= " + std::to_string(kMaxExactOrder));
    validate(query, 2 * query.k);
    const auto [tau_e, tau_gamma] = staggered_pairings(query.k);
    return contract(query, tau_gamma, tau_e, with_breakdown, backend);
}

ExactPurityResult average_purity_second_moment_exact(const PurityQuery &query) {
    require(query.k == 2, "unsupported_order", "the exact second moment is implemented for k = 2 only");
    validate(query, 8);
    return contract(query, second_moment_pairing(2), staggered_pairings(4).first, false,
                    WeingartenBackend::characters);
}

ExactPurityResult average_state_purity_exact(int k, std::int64_t dim_a, std::int64_t dim_b, StateSpace space) {
    require(k >= 1 && k <= 8, "unsupported_order", "state purity supports 1 <= k <= 8");
    require(dim_a >= 1 && dim_b >= 1, "invalid_dimension", "subsystem dimensions must be positive");
    const std::int64_t da = space == StateSpace::doubled ? dim_a * dim_a : dim_a;
    const std::int64_t db = space == StateSpace::doubled ? dim_b * dim_b : dim_b;
    const Permutation gamma = Permutation::full_cycle(k);
    ExactScalar num = 0;
    const std::vector<std::uint8_t> g(gamma.word().begin(), gamma.word().end());
    kernels::for_each_permutation(k, [&](kernels::Word sigma) {
        num += power(da, kernels::quotient_cycle_count(sigma, kernels::Word(g))) *
               power(db, kernels::cycle_count(sigma));
    });
    ExactScalar den = 1;
    for (int j = 0; j < k; ++j) {
        den *= ExactScalar(da * db + j);
    }
    ExactPurityResult result;
    result.value = num / den;
    return result;
}

std::vector<ExactScalar> operator_purity_series(int k, const MomentProfile<ExactScalar> &profile, int terms) {
    require(k >= 1 && k <= kMaxExactOrder, "unsupported_order",
            "exact purity supports 1 <= k <= " + std::to_string(kMaxExactOrder));
    auto f = [&](std::int64_t d) {
        const std::int64_t s = exact_root(d);
        return average_purity_exact(PurityQuery{k, s, s, profile, true}).value;
    };
    return replica_series(2 * k, f, terms);
}

std::vector<ExactScalar> second_moment_series(const MomentProfile<ExactScalar> &profile, int terms) {
    auto f = [&](std::int64_t d) {
        const std::int64_t s = exact_root(d);
        return average_purity_second_moment_exact(PurityQuery{2, s, s, profile, true}).value;
    };
    return replica_series(8, f, terms);
}

std::vector<ExactScalar> state_purity_series(int k, int terms) {
    require(k >= 1 && k <= 8, "unsupported_order", "state purity supports 1 <= k <= 8");
    // Doubled half cut: both sides have dimension D, total D^2.
    ExactPolynomial den{1};
    for (int j = 0; j < k; ++j) {
        den = polynomial_multiply(den, ExactPolynomial{j, 0, 1});
    }
    auto f = [&](std::int64_t d) { return average_state_purity_exact(k, exact_root(d), exact_root(d)).value; };
    return recover_inverse_power_series(f, square_dims(2 * k + 3, 1), den, 2 * k, terms);
}

}  // namespace loe
