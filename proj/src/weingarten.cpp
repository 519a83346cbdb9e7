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

#include "loe/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "loe/detail/once_cache.hpp"
#include "loe/error.hpp"
#include "loe/nc_lattice.hpp"

namespace loe {

namespace {

constexpr int kMaxGramDegree = 8;
constexpr int kMaxCharacterDegree = 10;

std::size_t class_index(const std::vector<CycleType> &classes, const CycleType &c) {
    const auto it = std::find(classes.begin(), classes.end(), c);
    require(it != classes.end(), "invalid_cycle_type", "cycle type " + c.to_string() + " not a partition of n");
    return static_cast<std::size_t>(it - classes.begin());
}

// Beta-set (first-column hook lengths) of a partition with `len` rows.
std::vector<int> beta_set(const std::vector<int> &parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
    }
    return beta;  // strictly decreasing
}

std::int64_t mn_recurse(std::vector<int> &beta, const std::vector<int> &mu, std::size_t depth,
                        std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> &memo) {
    if (depth == mu.size()) {
        return 1;
    }
    const auto key = std::make_pair(beta, depth);
    if (const auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int r = mu[depth];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
            continue;
        }
        // Leg length = number of beads strictly between `to` and `from`.
        int between = 0;
        for (int b : beta) {
            if (b > to && b < from) {
                ++between;
            }
        }
        std::vector<int> next = beta;
        next[i] = to;
        std::sort(next.begin(), next.end(), std::greater<>());
        const std::int64_t sub = mn_recurse(next, mu, depth + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

// Exact Gaussian elimination; `a` is square, returns the solution of a x = rhs.
std::vector<ExactScalar> solve_exact(std::vector<std::vector<ExactScalar>> a, std::vector<ExactScalar> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            fail_runtime("singular_system", "Gram system is singular");
        }
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) {
                continue;
            }
            const ExactScalar factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<ExactScalar> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / a[i][i];
    }
    return x;
}

Permutation class_representative(const CycleType &c) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int len : c.parts()) {
        std::vector<int> cycle;
        for (int i = 0; i < len; ++i) {
            cycle.push_back(next++);
        }
        cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(c.degree(), cycles);
}

// counts[l][m][j]: #{sigma in class m : #(rep_l sigma^{-1}) = j}. Independent of D.
using GramCounts = std::vector<std::vector<std::vector<std::uint64_t>>>;

GramCounts build_gram_counts(int n) {
    const auto classes = partitions(n);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        index.emplace(kernels::cycle_type_key(classes[i]), i);
    }
    GramCounts counts(classes.size(),
                      std::vector<std::vector<std::uint64_t>>(classes.size(),
                                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1))));
    for (std::size_t l = 0; l < classes.size(); ++l) {
        const Permutation rep = class_representative(classes[l]);
        std::vector<std::uint8_t> rep_word(rep.word().begin(), rep.word().end());
        // Enumerate tau = sigma^{-1}; sigma and tau share a class.
        kernels::for_each_permutation(n, [&](kernels::Word tau) {
            const std::size_t m = index.at(kernels::cycle_type_key(tau));
            const int j = kernels::quotient_cycle_count(kernels::Word(rep_word), tau);
            ++counts[l][m][static_cast<std::size_t>(j)];
        });
    }
    return counts;
}

std::vector<ExactScalar> wg_by_gram(int n, std::int64_t dim) {
    static detail::OnceCache<int, GramCounts> cache;
    const auto counts = cache.get(n, [&] { return build_gram_counts(n); });
    const auto classes = partitions(n);
    const std::size_t p = classes.size();
    std::vector<mpz_class> powers(static_cast<std::size_t>(n + 1));
    powers[0] = 1;
    for (int j = 1; j <= n; ++j) {
        powers[static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j - 1)] * dim;
    }
    std::vector<std::vector<ExactScalar>> a(p, std::vector<ExactScalar>(p));
    for (std::size_t l = 0; l < p; ++l) {
        for (std::size_t m = 0; m < p; ++m) {
            mpz_class entry = 0;
            for (int j = 0; j <= n; ++j) {
                entry += powers[static_cast<std::size_t>(j)] * (*counts)[l][m][static_cast<std::size_t>(j)];
            }
            a[l][m] = entry;
        }
    }
    // Row for the identity class carries the delta.
    std::vector<ExactScalar> rhs(p);
    rhs[p - 1] = 1;
    return solve_exact(std::move(a), std::move(rhs));
}

std::vector<ExactScalar> wg_by_characters(int n, std::int64_t dim) {
    const auto table = character_table(n);
    const std::size_t p = table->labels.size();
    mpz_class factorial = 1;
    for (int i = 2; i <= n; ++i) {
        factorial *= i;
    }
    const std::size_t identity_class = p - 1;
    std::vector<ExactScalar> values(p);
    for (std::size_t l = 0; l < p; ++l) {
        const ExactScalar denom = content_product(table->labels[l], dim);
        if (denom == 0) {
            continue;  // irrep absent from (C^D)^{\otimes n}
        }
        const ExactScalar weight = ExactScalar(table->chi[l][identity_class]) / denom;
        for (std::size_t m = 0; m < p; ++m) {
            values[m] += weight * table->chi[l][m];
        }
    }
    for (auto &v : values) {
        v /= factorial;
    }
    return values;
}

}  // namespace

WeingartenBackend parse_backend(std::string_view name) {
    if (name == "gram") {
        return WeingartenBackend::gram;
    }
    if (name == "characters") {
        return WeingartenBackend::characters;
    }
    fail("invalid_argument", "unknown Weingarten backend '" + std::string(name) + "'");
}

std::string_view to_string(WeingartenBackend backend) {
    return backend == WeingartenBackend::gram ? "gram" : "characters";
}

std::int64_t murnaghan_nakayama(const CycleType &lambda, const CycleType &mu) {
    require(lambda.degree() == mu.degree(), "degree_mismatch", "character of a class of different degree");
    std::vector<int> beta = beta_set(lambda.parts());
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
    return mn_recurse(beta, mu.parts(), 0, memo);
}

std::shared_ptr<const CharacterTable> character_table(int n) {
    require(n >= 1 && n <= kMaxCharacterDegree, "unsupported_degree",
            "character tables limited to 1 <= n <= " + std::to_string(kMaxCharacterDegree));
    static detail::OnceCache<int, CharacterTable> cache;
    return cache.get(n, [n] {
        CharacterTable t;
        t.n = n;
        t.labels = partitions(n);
        t.chi.assign(t.labels.size(), std::vector<std::int64_t>(t.labels.size()));
        for (std::size_t l = 0; l < t.labels.size(); ++l) {
            for (std::size_t m = 0; m < t.labels.size(); ++m) {
                t.chi[l][m] = murnaghan_nakayama(t.labels[l], t.labels[m]);
            }
        }
        return t;
    });
}

ExactScalar content_product(const CycleType &lambda, std::int64_t dim) {
    mpz_class product = 1;
    for (int row = 0; row < lambda.length(); ++row) {
        for (int col = 0; col < lambda.parts()[static_cast<std::size_t>(row)]; ++col) {
            product *= mpz_class(static_cast<long>(dim + col - row));
        }
    }
    return ExactScalar(product);
}

std::vector<std::pair<int, int>> weingarten_denominator_factors(int n) {
    std::map<int, int> worst;
    for (const auto &lambda : partitions(n)) {
        std::map<int, int> here;
        for (int row = 0; row < lambda.length(); ++row) {
            for (int col = 0; col < lambda.parts()[static_cast<std::size_t>(row)]; ++col) {
                ++here[col - row];
            }
        }
        for (const auto &[c, m] : here) {
            worst[c] = std::max(worst[c], m);
        }
    }
    return {worst.begin(), worst.end()};
}

WeingartenTable::WeingartenTable(int n, std::int64_t dim, WeingartenBackend backend, std::vector<ExactScalar> values)
    : n_(n), dim_(dim), backend_(backend), classes_(partitions(n)), values_(std::move(values)) {
    require(values_.size() == classes_.size(), "invalid_table", "one value per cycle type required");
}

const ExactScalar &WeingartenTable::value(const CycleType &c) const { return values_[class_index(classes_, c)]; }

const ExactScalar &WeingartenTable::value(const Permutation &a, const Permutation &b) const {
    require(a.degree() == n_ && b.degree() == n_, "degree_mismatch", "permutation degree differs from table degree");
    return value(compose(a, b.inverse()).cycle_type());
}

ExactScalar gram_entry(const Permutation &a, const Permutation &b, std::int64_t dim) {
    require(a.degree() == b.degree(), "degree_mismatch", "Gram entry of permutations with different degree");
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(dim),
                  static_cast<unsigned long>(compose(a, b.inverse()).cycle_count()));
    return ExactScalar(power);
}

std::shared_ptr<const WeingartenTable> weingarten_exact(int n, std::int64_t dim, WeingartenBackend backend) {
    require(n >= 1, "unsupported_degree", "Weingarten degree must be positive");
    const int limit = backend == WeingartenBackend::gram ? kMaxGramDegree : kMaxCharacterDegree;
    require(n <= limit, "unsupported_degree",
            "the " + std::string(to_string(backend)) + " backend supports n <= " + std::to_string(limit));
    if (dim < n) {
        fail("dimension_too_small", "Weingarten table needs dim >= n (got dim=" + std::to_string(dim) +
                                        ", n=" + std::to_string(n) + ")");
    }
    using Key = std::tuple<int, std::int64_t, int>;
    static detail::OnceCache<Key, WeingartenTable> cache;
    return cache.get(Key{n, dim, static_cast<int>(backend)}, [&] {
        auto values = backend == WeingartenBackend::gram ? wg_by_gram(n, dim) : wg_by_characters(n, dim);
        return WeingartenTable(n, dim, backend, std::move(values));
    });
}

double weingarten_asymptotic(const Permutation &a, const Permutation &b, std::int64_t dim) {
    require(a.degree() == b.degree(), "degree_mismatch", "Weingarten arguments with different degree");
    const int n = a.degree();
    const int exponent = 2 * n - compose(a, b.inverse()).cycle_count();
    return static_cast<double>(mobius(a, b)) / std::pow(static_cast<double>(dim), exponent);
}

}  // namespace loe
