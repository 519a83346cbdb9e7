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

#include "loe/page.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loe/detail/once_cache.hpp"
#include "loe/detail/replica.hpp"
#include "loe/error.hpp"
#include "loe/nc_lattice.hpp"

namespace loe {

namespace {

constexpr int kMaxLeadingOrder = 6;
constexpr int kMaxPageOrder = 12;

bool trivial_cut(std::int64_t dim_a, std::int64_t dim_b) { return dim_a == 1 || dim_b == 1; }

void require_dims(std::int64_t dim_a, std::int64_t dim_b) {
    require(dim_a >= 1 && dim_b >= 1, "invalid_dimension", "subsystem dimensions must be positive");
}

std::int64_t exact_root(std::int64_t d) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
    require(s >= 1 && s * s == d, "invalid_dimension", "half-chain formulas need a perfect-square D");
    return s;
}

}  // namespace

double purity_leading_general(int k, std::int64_t dim_a, std::int64_t dim_b, const CumulantProfile<double> &cumulants) {
    require(k >= 1 && k <= kMaxLeadingOrder, "unsupported_order",
            "leading-order purity supports 1 <= k <= " + std::to_string(kMaxLeadingOrder));
    require_dims(dim_a, dim_b);
    require(cumulants.max_order() >= 2 * k, "profile_too_short",
            "cumulants must cover orders up to " + std::to_string(2 * k));
    const auto [tau_e, tau_gamma] = staggered_pairings(k);
    const auto hist = detail::boundary_histogram(tau_gamma, tau_e);
    const double da = static_cast<double>(dim_a);
    const double db = static_cast<double>(dim_b);
    double total = 0;
    for (std::size_t c = 0; c < hist->classes.size(); ++c) {
        const double kappa = cumulant_of_cycle_type(cumulants, hist->classes[c]);
        if (kappa == 0) {
            continue;
        }
        const int len = hist->classes[c].length();
        double part = 0;
        for (const auto &term : hist->terms[c]) {
            part += static_cast<double>(term.count) * std::pow(da, len + term.a - 3 * k) *
                    std::pow(db, len + term.b - 3 * k);
        }
        total += kappa * part;
    }
    return total;
}

std::vector<std::uint64_t> nc_cycle_count_profile(int k) {
    require(k >= 1 && k <= kMaxPageOrder, "unsupported_order",
            "NC sums support 1 <= k <= " + std::to_string(kMaxPageOrder));
    static detail::OnceCache<int, std::vector<std::uint64_t>> cache;
    return *cache.get(k, [k] {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
        for (const auto &pi : enumerate_nc(k, kMaxPageOrder).elements) {
            ++counts[static_cast<std::size_t>(pi.cycle_count() - 1)];
        }
        return counts;
    });
}

double page_purity(int k, std::int64_t dim_a, std::int64_t dim_b) {
    require_dims(dim_a, dim_b);
    const auto counts = nc_cycle_count_profile(k);
    if (trivial_cut(dim_a, dim_b)) {
        return 1.0;
    }
    const double da = static_cast<double>(dim_a);
    const double db = static_cast<double>(dim_b);
    double total = 0;
    for (int j = 1; j <= k; ++j) {
        // dist(gamma, pi) = #(pi) - 1, dist(e, pi) = k - #(pi)
        total += static_cast<double>(counts[static_cast<std::size_t>(j - 1)]) * std::pow(da, -2.0 * (j - 1)) *
                 std::pow(db, -2.0 * (k - j));
    }
    return total;
}

std::optional<double> half_chain_correction(int k, double kappa4) {
    switch (k) {
    case 1:
        return 0.0;
    case 2:
        return 1 + 2 * kappa4;
    case 3:
        return 6 + 12 * kappa4;
    case 4:
        return 29 + 56 * kappa4;
    default:
        return std::nullopt;
    }
}

double half_chain_purity_corrected(int k, std::int64_t dim, double kappa4) {
    exact_root(dim);
    const auto f = half_chain_correction(k, kappa4);
    if (!f) {
        fail("unavailable", "the 1/D correction f_k is known only for k <= 4");
    }
    const double d = static_cast<double>(dim);
    return static_cast<double>(catalan(k)) / std::pow(d, k - 1) + *f / std::pow(d, k);
}

CorrectionSlope half_chain_correction_slope() {
    // Derivative at x = 1 of the cubic through (1, y1) .. (4, y4), y1 = 0.
    auto slope = [](double y2, double y3, double y4) { return (18 * y2 - 9 * y3 + 2 * y4) / 6; };
    const double base2 = *half_chain_correction(2, 0);
    const double base3 = *half_chain_correction(3, 0);
    const double base4 = *half_chain_correction(4, 0);
    return {slope(base2, base3, base4),
            slope(*half_chain_correction(2, 1) - base2, *half_chain_correction(3, 1) - base3,
                  *half_chain_correction(4, 1) - base4)};
}

double renyi_page_entropy(int k, std::int64_t dim_a, std::int64_t dim_b, std::optional<double> kappa4) {
    require(k >= 1, "invalid_order", "Renyi order must be positive");
    if (k == 1) {
        return vn_page_entropy(dim_a, dim_b, kappa4);
    }
    require_dims(dim_a, dim_b);
    if (trivial_cut(dim_a, dim_b)) {
        return 0.0;
    }
    double purity = 0;
    if (kappa4 && dim_a == dim_b && k <= 4) {
        purity = half_chain_purity_corrected(k, dim_a * dim_b, *kappa4);
    } else {
        purity = page_purity(k, dim_a, dim_b);
    }
    return std::log(purity) / (1.0 - k);
}

double vn_page_entropy(std::int64_t dim_a, std::int64_t dim_b, std::optional<double> kappa4) {
    require_dims(dim_a, dim_b);
    if (trivial_cut(dim_a, dim_b)) {
        return 0.0;
    }
    const double small = static_cast<double>(std::min(dim_a, dim_b));
    const double large = static_cast<double>(std::max(dim_a, dim_b));
    const double m = small * small;
    const double n = large * large;
    double entropy = std::log(m) - m / (2 * n);
    if (kappa4 && dim_a == dim_b) {
        const auto s = half_chain_correction_slope();
        entropy -= (s.value + s.slope_kappa4 * *kappa4) / m;
    }
    return entropy;
}

double haar_ose_correction(int k) {
    require(k >= 2, "invalid_order", "the OSE correction needs k >= 2");
    double log_double_factorial = 0;
    for (int j = 1; j <= 2 * k - 1; j += 2) {
        log_double_factorial += std::log(static_cast<double>(j));
    }
    return log_double_factorial / (1.0 - k);
}

std::vector<PageCurvePoint> predicted_page_curve(EntropyOrder order, int qubits, std::optional<double> kappa4,
                                                 int local_dim) {
    require(qubits >= 1 && local_dim >= 2, "invalid_argument", "need qubits >= 1 and local dimension >= 2");
    require(order.kind == EntropyOrder::Kind::renyi || order.kind == EntropyOrder::Kind::von_neumann,
            "invalid_order", "predictions exist for Renyi and von Neumann orders only");
    const double log_total = qubits * std::log(static_cast<double>(local_dim));
    require(log_total < 62 * std::log(2.0), "guard", "dimension overflows 64 bits");
    std::vector<PageCurvePoint> curve;
    std::int64_t dim_a = 1;
    std::int64_t dim_b = 1;
    for (int i = 0; i < qubits; ++i) {
        dim_b *= local_dim;
    }
    for (int n_a = 0; n_a <= qubits; ++n_a) {
        const double e = order.kind == EntropyOrder::Kind::von_neumann ? vn_page_entropy(dim_a, dim_b, kappa4)
                                                                      : renyi_page_entropy(order.k, dim_a, dim_b, kappa4);
        curve.push_back({n_a, order, e});
        dim_a *= local_dim;
        dim_b /= local_dim;
    }
    return curve;
}

}  // namespace loe
