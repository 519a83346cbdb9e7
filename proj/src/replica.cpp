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

#include "loe/detail/replica.hpp"

#include <map>
#include <unordered_map>

#include "loe/detail/once_cache.hpp"
#include "loe/error.hpp"

namespace loe::detail {

namespace {

std::unordered_map<std::uint64_t, std::size_t> key_index(const std::vector<CycleType> &classes) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        index.emplace(kernels::cycle_type_key(classes[i]), i);
    }
    return index;
}

std::vector<std::uint8_t> bytes(const Permutation &p) { return {p.word().begin(), p.word().end()}; }

}  // namespace

std::size_t class_index_of(const std::vector<CycleType> &classes, std::uint64_t key) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (kernels::cycle_type_key(classes[i]) == key) {
            return i;
        }
    }
    fail("invalid_cycle_type", "cycle-type key not found");
}

std::shared_ptr<const BoundaryHistogram> boundary_histogram(const Permutation &t_a, const Permutation &t_b) {
    require(t_a.degree() == t_b.degree(), "degree_mismatch", "boundary permutations of different degree");
    const int n = t_a.degree();
    require(n >= 1 && n <= 12, "guard", "boundary histograms limited to n <= 12");
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static OnceCache<Key, BoundaryHistogram> cache;
    return cache.get(Key{t_a.word(), t_b.word()}, [&] {
        BoundaryHistogram h;
        h.n = n;
        h.classes = partitions(n);
        const auto index = key_index(h.classes);
        const auto wa = bytes(t_a);
        const auto wb = bytes(t_b);
        // Dense (class, a, b) counts; a, b in 1..n.
        const auto stride = static_cast<std::size_t>(n + 1);
        std::vector<std::uint64_t> dense(h.classes.size() * stride * stride, 0);
        // tau runs over S_n as sigma^{-1}; #(t then tau) = #(sigma^{-1} t) up to conjugation.
        kernels::for_each_permutation(n, [&](kernels::Word tau) {
            const std::size_t c = index.at(kernels::cycle_type_key(tau));
            const auto a = static_cast<std::size_t>(kernels::quotient_cycle_count(kernels::Word(wa), tau));
            const auto b = static_cast<std::size_t>(kernels::quotient_cycle_count(kernels::Word(wb), tau));
            ++dense[(c * stride + a) * stride + b];
        });
        h.terms.resize(h.classes.size());
        for (std::size_t c = 0; c < h.classes.size(); ++c) {
            for (std::size_t a = 0; a < stride; ++a) {
                for (std::size_t b = 0; b < stride; ++b) {
                    const std::uint64_t count = dense[(c * stride + a) * stride + b];
                    if (count != 0) {
                        h.terms[c].push_back({static_cast<int>(a), static_cast<int>(b), count});
                    }
                }
            }
        }
        return h;
    });
}

std::shared_ptr<const ClassConvolution> class_convolution(int n) {
    require(n >= 1 && n <= 8, "guard", "class convolution tables limited to n <= 8");
    static OnceCache<int, ClassConvolution> cache;
    return cache.get(n, [n] {
        ClassConvolution t;
        t.n = n;
        t.classes = partitions(n);
        const std::size_t p = t.classes.size();
        const auto index = key_index(t.classes);
        t.conv.assign(p, std::vector<std::vector<std::uint32_t>>(p, std::vector<std::uint32_t>(p, 0)));
        for (std::size_t nu = 0; nu < p; ++nu) {
            std::vector<std::vector<int>> cycles;
            int next = 0;
            for (int len : t.classes[nu].parts()) {
                std::vector<int> cycle;
                for (int i = 0; i < len; ++i) {
                    cycle.push_back(next++);
                }
                cycles.push_back(std::move(cycle));
            }
            const Permutation rep = Permutation::from_cycles(n, cycles);
            const auto rep_inv = bytes(rep.inverse());
            std::vector<std::uint8_t> quotient(static_cast<std::size_t>(n));
            kernels::for_each_permutation(n, [&](kernels::Word pi) {
                for (std::size_t x = 0; x < pi.size(); ++x) {
                    quotient[x] = rep_inv[pi[x]];
                }
                const std::size_t lambda = index.at(kernels::cycle_type_key(pi));
                const std::size_t mu = index.at(kernels::cycle_type_key(kernels::Word(quotient)));
                ++t.conv[nu][lambda][mu];
            });
        }
        return t;
    });
}

}  // namespace loe::detail
