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

#include "loe/nc_lattice.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/digamma.hpp>

#include "loe/error.hpp"

namespace loe {

namespace {

constexpr int kFilterThreshold = 6;

using Block = std::vector<int>;
using SetPartition = std::vector<Block>;

// Non-crossing set partitions of the consecutive points [lo, hi).
std::vector<SetPartition> nc_partitions(int lo, int hi) {
    if (lo >= hi) {
        return {SetPartition{}};
    }
    std::vector<SetPartition> out;
    // Block of `lo` is {lo = b0 < b1 < ... < bm}; each gap is independent.
    Block block{lo};
    auto extend = [&](auto &&self, int last) -> void {
        // Close the block here: gaps between members plus the tail (last, hi).
        std::vector<std::vector<SetPartition>> gaps;
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            gaps.push_back(nc_partitions(block[i] + 1, block[i + 1]));
        }
        gaps.push_back(nc_partitions(last + 1, hi));
        SetPartition acc{block};
        auto product = [&](auto &&prod, std::size_t g) -> void {
            if (g == gaps.size()) {
                out.push_back(acc);
                return;
            }
            for (const auto &piece : gaps[g]) {
                const std::size_t mark = acc.size();
                acc.insert(acc.end(), piece.begin(), piece.end());
                prod(prod, g + 1);
                acc.resize(mark);
            }
        };
        product(product, 0);
        for (int next = last + 1; next < hi; ++next) {
            block.push_back(next);
            self(self, next);
            block.pop_back();
        }
    };
    extend(extend, lo);
    return out;
}

Permutation partition_to_permutation(int k, const SetPartition &blocks) {
    std::vector<int> w(static_cast<std::size_t>(k));
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            w[static_cast<std::size_t>(b[i])] = b[(i + 1) % b.size()];
        }
    }
    return Permutation(std::move(w));
}

// Non-crossing perfect matchings of points [lo, hi).
void nc_matchings(int lo, int hi, std::vector<std::pair<int, int>> &current,
                  std::vector<std::vector<std::pair<int, int>>> &out) {
    if (lo >= hi) {
        out.push_back(current);
        return;
    }
    for (int partner = lo + 1; partner < hi; partner += 2) {
        current.emplace_back(lo, partner);
        // Inside (lo, partner) and outside (partner, hi) are independent.
        std::vector<std::vector<std::pair<int, int>>> inner;
        std::vector<std::pair<int, int>> scratch;
        nc_matchings(lo + 1, partner, scratch, inner);
        for (const auto &in : inner) {
            const std::size_t mark = current.size();
            current.insert(current.end(), in.begin(), in.end());
            nc_matchings(partner + 1, hi, current, out);
            current.resize(mark);
        }
        current.pop_back();
    }
}

}  // namespace

std::uint64_t catalan(int k) {
    require(k >= 0 && k <= 35, "unsupported_degree", "catalan(k) needs 0 <= k <= 35");
    // C_{j+1} = C_j * 2(2j+1)/(j+2), exact at every step.
    std::uint64_t c = 1;
    for (int j = 0; j < k; ++j) {
        const auto num = static_cast<unsigned __int128>(c) * static_cast<unsigned>(2 * (2 * j + 1));
        c = static_cast<std::uint64_t>(num / static_cast<unsigned>(j + 2));
    }
    return c;
}

double catalan_continued(double x) {
    require(x > -0.5, "domain_error", "catalan_continued needs x > -1/2");
    return std::exp(std::lgamma(2.0 * x + 1.0) - std::lgamma(x + 1.0) - std::lgamma(x + 2.0));
}

double catalan_log_derivative(double x) {
    require(x > -0.5, "domain_error", "catalan_log_derivative needs x > -1/2");
    using boost::math::digamma;
    return 2.0 * digamma(2.0 * x + 1.0) - digamma(x + 1.0) - digamma(x + 2.0);
}

NCSet enumerate_nc_by_filter(int k) {
    require(k >= 1 && k <= 9, "unsupported_degree", "filter enumeration of NC(k) needs 1 <= k <= 9");
    NCSet set{k, {}};
    const Permutation gamma = Permutation::full_cycle(k);
    std::vector<std::uint8_t> gamma_inv(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) {
        gamma_inv[static_cast<std::size_t>(gamma[x])] = static_cast<std::uint8_t>(x);
    }
    kernels::for_each_permutation(k, [&](kernels::Word w) {
        // #(pi^{-1} gamma) equals #(gamma^{-1} pi) (inverse), which is the quotient count.
        if (kernels::cycle_count(w) + kernels::quotient_cycle_count(w, gamma_inv) == k + 1) {
            set.elements.emplace_back(std::vector<int>(w.begin(), w.end()));
        }
    });
    return set;
}

NCSet enumerate_nc(int k, int max_k) {
    require(k >= 1, "unsupported_degree", "NC(k) needs k >= 1");
    if (k > max_k) {
        fail("guard", "NC(" + std::to_string(k) + ") exceeds the degree guard " + std::to_string(max_k));
    }
    if (k <= kFilterThreshold) {
        return enumerate_nc_by_filter(k);
    }
    NCSet set{k, {}};
    for (const auto &blocks : nc_partitions(0, k)) {
        set.elements.push_back(partition_to_permutation(k, blocks));
    }
    std::sort(set.elements.begin(), set.elements.end());
    return set;
}

std::vector<BrauerPairing> enumerate_nc_pairings(int two_k) {
    require(two_k >= 2 && two_k % 2 == 0, "odd_degree", "NC pairings need a positive even number of points");
    require(two_k <= 16, "guard", "NC pairings limited to 16 points");
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> current;
    nc_matchings(0, two_k, current, raw);
    std::vector<BrauerPairing> out;
    out.reserve(raw.size());
    for (auto &pairs : raw) {
        out.emplace_back(std::move(pairs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t mobius(const Permutation &a, const Permutation &b) {
    require(a.degree() == b.degree(), "degree_mismatch", "mobius of permutations with different degree");
    std::int64_t value = 1;
    const CycleType type = compose(a.inverse(), b).cycle_type();
    for (int len : type.parts()) {
        const auto c = static_cast<std::int64_t>(catalan(len - 1));
        value *= (len % 2 == 1) ? c : -c;
    }
    return value;
}

bool on_geodesic(const Permutation &pi, const Permutation &sigma) {
    const Permutation e = Permutation::identity(sigma.degree());
    return cayley_distance(sigma, pi) + cayley_distance(pi, e) == cayley_distance(sigma, e);
}

GeodesicSet geodesic_set(const Permutation &sigma) {
    const int n = sigma.degree();
    require(n >= 1, "unsupported_degree", "geodesic set of an empty permutation");
    require(n <= 10, "guard", "geodesic_set limited to degree 10");
    GeodesicSet set{sigma, {}};
    const int target = n - sigma.cycle_count();
    std::vector<std::uint8_t> sigma_inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        sigma_inv[static_cast<std::size_t>(sigma[x])] = static_cast<std::uint8_t>(x);
    }
    kernels::for_each_permutation(n, [&](kernels::Word w) {
        const int to_e = n - kernels::cycle_count(w);
        if (to_e > target) {
            return;
        }
        const int to_sigma = n - kernels::quotient_cycle_count(w, sigma_inv);
        if (to_sigma + to_e == target) {
            set.members.emplace_back(std::vector<int>(w.begin(), w.end()));
        }
    });
    return set;
}

}  // namespace loe
