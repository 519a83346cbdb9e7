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

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "loe/permutation.hpp"

namespace loe {

/// Exact rational, always in canonical (reduced, positive denominator) form.
using ExactScalar = mpq_class;

enum class WeingartenBackend { gram, characters };

WeingartenBackend parse_backend(std::string_view name);
std::string_view to_string(WeingartenBackend backend);

/// Irreducible characters of S_n: chi[l][m] is the character of the irrep
/// labelled by partitions(n)[l] evaluated on class partitions(n)[m].
struct CharacterTable {
    int n = 0;
    std::vector<CycleType> labels;
    std::vector<std::vector<std::int64_t>> chi;
};

/// Murnaghan-Nakayama rule: chi^lambda(mu) by successive rim-hook removal.
std::int64_t murnaghan_nakayama(const CycleType &lambda, const CycleType &mu);

/// Cached per n; n <= 10.
std::shared_ptr<const CharacterTable> character_table(int n);

/// Unitary Weingarten function Wg(., D) on S_n as a class function.
class WeingartenTable {
  public:
    WeingartenTable(int n, std::int64_t dim, WeingartenBackend backend, std::vector<ExactScalar> values);

    int degree() const { return n_; }
    std::int64_t dim() const { return dim_; }
    WeingartenBackend backend() const { return backend_; }

    /// Classes in the order of partitions(n).
    const std::vector<CycleType> &classes() const { return classes_; }
    const std::vector<ExactScalar> &values() const { return values_; }

    const ExactScalar &value(const CycleType &c) const;
    /// Wg_{ab}, a function of the class of a b^{-1}.
    const ExactScalar &value(const Permutation &a, const Permutation &b) const;

  private:
    int n_;
    std::int64_t dim_;
    WeingartenBackend backend_;
    std::vector<CycleType> classes_;
    std::vector<ExactScalar> values_;
};

/// D^{#(a b^{-1})}.
ExactScalar gram_entry(const Permutation &a, const Permutation &b, std::int64_t dim);

/// Exact table for dim >= n. The gram backend solves the class-reduced
/// linear system (n <= 8); the characters backend uses
/// Wg(mu) = (1/n!) sum_lambda chi^lambda(1) chi^lambda(mu) / prod_cells (D + content),
/// (n <= 10). Tables are cached per (n, dim, backend).
std::shared_ptr<const WeingartenTable> weingarten_exact(int n, std::int64_t dim,
                                                        WeingartenBackend backend = WeingartenBackend::characters);

/// Leading large-D term mobius(a, b) / D^{2n - #(a b^{-1})}.
double weingarten_asymptotic(const Permutation &a, const Permutation &b, std::int64_t dim);

/// prod over cells of lambda of (D + content); the dimension-dependent
/// denominator of each character-sum term.
ExactScalar content_product(const CycleType &lambda, std::int64_t dim);

/// Exponents m_c such that prod_c (D + c)^{m_c} is a common denominator of
/// every Wg value on S_n. Returned as pairs (c, m_c).
std::vector<std::pair<int, int>> weingarten_denominator_factors(int n);

}  // namespace loe
