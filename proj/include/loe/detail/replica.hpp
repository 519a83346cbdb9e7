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
#include <vector>

#include "loe/permutation.hpp"

namespace loe::detail {

/// One (a, b) exponent pair of the outer sum and how many sigma produce it.
struct BoundaryTerm {
    int a = 0;  // #(sigma^{-1} t_A)
    int b = 0;  // #(sigma^{-1} t_B)
    std::uint64_t count = 0;
};

/// Histogram of the boundary exponents over S_n, split by the cycle type
/// of sigma (index into partitions(n)).
struct BoundaryHistogram {
    int n = 0;
    std::vector<CycleType> classes;
    std::vector<std::vector<BoundaryTerm>> terms;
};

/// Cached per (t_A, t_B). Enumerates S_n once; n <= 12.
std::shared_ptr<const BoundaryHistogram> boundary_histogram(const Permutation &t_a, const Permutation &t_b);

/// conv[nu][lambda][mu] = #{pi in class lambda : pi sigma_nu^{-1} in class mu}
/// for a fixed representative sigma_nu of each class nu. Cached per n <= 8.
struct ClassConvolution {
    int n = 0;
    std::vector<CycleType> classes;
    std::vector<std::vector<std::vector<std::uint32_t>>> conv;
};

std::shared_ptr<const ClassConvolution> class_convolution(int n);

/// Index of a cycle type in partitions(n).
std::size_t class_index_of(const std::vector<CycleType> &classes, std::uint64_t key);

}  // namespace loe::detail
